#ifndef MULTISECT_SPECIAL_PRECISION_HPP
#define MULTISECT_SPECIAL_PRECISION_HPP

namespace multisect::special {

/// Knobs for the special-function kernels. binary64 throughout in v1.
struct PrecisionContext {
    int series_term_cap = 100000;
};

}  // namespace multisect::special

#endif
