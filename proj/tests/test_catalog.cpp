#include <doctest.h>

#include <cmath>
#include <numbers>

#include "multisect/catalog.hpp"

using namespace multisect;
namespace nb = std::numbers;

TEST_CASE("registry content") {
    const auto& cat = Catalog::instance();
    auto all = cat.list();
    CHECK(all.size() >= 40);
    CHECK(cat.find("A1.general-2j") != nullptr);
    CHECK(cat.find("E9.cj") != nullptr);
    CHECK(cat.find("NO.SUCH.ID") == nullptr);
    CHECK_THROWS_AS(cat.at("NO.SUCH.ID"), std::invalid_argument);
    // ids come out sorted
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1]->id < all[i]->id);
    // registry self-test: anchors and descriptions all present
    CHECK(cat.anchors_nonempty());
}

TEST_CASE("structural cases never touch floating point evaluation") {
    const auto& cat = Catalog::instance();
    int structural = 0;
    for (const auto* c : cat.list())
        if (c->kind == CaseKind::exact_structural) {
            ++structural;
            CHECK(c->default_tol == 0.0);
        }
    CHECK(structural >= 14);
}

TEST_CASE("spot values against closed forms") {
    const auto& cat = Catalog::instance();

    auto e1 = cat.verify("E1.sinh-product");
    CHECK(e1.pass);
    CHECK(e1.rhs == doctest::Approx(std::sinh(nb::pi) / nb::pi).epsilon(1e-13));
    CHECK(e1.rel_err < 1e-10);

    auto h1a = cat.verify("E9.h1a");
    CHECK(h1a.pass);
    double closed = std::pow(2.0, 0.25) * std::exp(-nb::pi / 24.0) / (1.0 + std::exp(-nb::pi));
    CHECK(h1a.rhs == doctest::Approx(closed).epsilon(1e-14));
    CHECK(h1a.rel_err < 1e-10);

    auto b8 = cat.verify("B8.log2-over-3");
    CHECK(b8.pass);
    CHECK(std::abs(b8.lhs - std::log(2.0) / 3.0) < 1e-4);

    auto a1 = cat.verify("A1.general-2j", {{"N", 4096}});
    CHECK(a1.pass);
    CHECK(a1.abs_err == 0.0);

    auto b5 = cat.verify("B5.alternating-nu");
    CHECK(b5.pass);
    CHECK(b5.rhs == doctest::Approx(nb::pi * nb::pi / 10.0).epsilon(1e-13));
}

TEST_CASE("parameter schema validation") {
    const auto& cat = Catalog::instance();
    CHECK_THROWS_AS(cat.verify("E1.sinh-product", {{"nope", 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(cat.verify("E1.sinh-product", {{"x", 1e9}}), std::invalid_argument);
    // defaults lie inside the declared ranges
    for (const auto* c : cat.list())
        for (const auto& s : c->params) {
            CHECK(s.def >= s.min);
            CHECK(s.def <= s.max);
        }
}

TEST_CASE("sweeps") {
    const auto& cat = Catalog::instance();
    auto q_reports = cat.sweep("A2.q-case", {{"q", {-1.0, 0.0, 0.5, 1.0, 2.0}}});
    CHECK(q_reports.size() == 5);
    for (const auto& r : q_reports) CHECK(r.pass);

    auto qn = cat.sweep("A2.q-case-numeric", {{"q", {-1.0, 0.0, 0.5, 1.0, 2.0}}});
    for (const auto& r : qn) CHECK(r.pass);

    auto ls2 = cat.sweep("E6.ls2", {{"n", {2.0, 4.0}}, {"x", {0.3}}});
    CHECK(ls2.size() == 2);
    for (const auto& r : ls2) CHECK(r.pass);

    auto f1 = cat.sweep("F1.gamma-ratio", {{"a", {0.0, 1.0}}, {"z", {1.0}}});
    CHECK(f1.size() == 2);
    for (const auto& r : f1) CHECK(r.pass);
    // the a = 0 point is the cosh-product value sinh(pi)/pi
    CHECK(f1[0].params.at("a") == 0.0);
    CHECK(f1[0].lhs == doctest::Approx(std::sinh(nb::pi) / nb::pi).epsilon(1e-10));
}

TEST_CASE("verify-all passes and failures stay isolated") {
    const auto& cat = Catalog::instance();
    auto full = cat.verify_all();
    CHECK(full.pass);
    CHECK(full.cases.size() >= 40);

    auto d_suite = cat.verify_all({}, "D");
    CHECK(d_suite.pass);
    CHECK(d_suite.cases.size() == 7);

    // a corrupted tolerance fails that case without disturbing the next one
    auto bad = cat.verify("E9.ls3b", {}, {}, 1e-30);
    CHECK_FALSE(bad.pass);
    auto good = cat.verify("E9.cj");
    CHECK(good.pass);
}

TEST_CASE("negative controls are detected as wrong") {
    const auto& cat = Catalog::instance();
    auto s = cat.verify("Z1.negative-control-structural");
    CHECK_FALSE(s.pass);
    CHECK(s.note == "first_mismatch=2");
    auto n = cat.verify("Z1.negative-control-numeric");
    CHECK_FALSE(n.pass);
    CHECK(n.rel_err > 1e-3);
    // and verify_all skips them
    auto suite = cat.verify_all({}, "Z");
    CHECK(suite.cases.empty());
}

TEST_CASE("E2 consistency chain at x in {1/2, 1, 2}") {
    const auto& cat = Catalog::instance();
    for (double x : {0.5, 1.0, 2.0}) {
        auto a = cat.verify("E2.st1a", {{"x", x}});
        auto b = cat.verify("E2.st1b", {{"x", x}, {"j", 1}});
        auto h = cat.verify("E2.h43", {{"x", x}});
        CHECK(a.pass);
        CHECK(b.pass);
        CHECK(h.pass);
        CHECK(a.rel_err < 1e-10);
        CHECK(h.rel_err < 1e-10);
    }
}

TEST_CASE("theta identity survives large x where one side collapses to a single term") {
    const auto& cat = Catalog::instance();
    auto r = cat.verify("E12.eq8a", {{"p", 2}, {"x", 3.0}});
    CHECK(r.pass);
    CHECK(r.rel_err < 1e-12);
}

TEST_CASE("the Gamma-quotient product rejects odd powers") {
    const auto& cat = Catalog::instance();
    CHECK_THROWS_AS(cat.verify("E6.ls2", {{"n", 3}}), std::invalid_argument);
}

TEST_CASE("E9 chain consistency: Ls3F - Ls3D = ln(1+e^-pi)") {
    const auto& cat = Catalog::instance();
    auto d = cat.verify("E9.ls3d");
    auto f = cat.verify("E9.ls3f");
    CHECK(std::abs((f.lhs - d.lhs) - std::log1p(std::exp(-nb::pi))) < 1e-12);
    auto e = cat.verify("E9.ls3e");
    CHECK(e.pass);
    CHECK(e.rel_err < 1e-12);
}

TEST_CASE("Cj inner identity per k") {
    const auto& cat = Catalog::instance();
    for (double k : {1.0, 2.0, 3.0}) {
        auto r = cat.verify("E9.cj", {{"k", k}});
        CHECK(r.pass);
        CHECK(r.rel_err < 1e-12);
    }
}

TEST_CASE("truncation headroom: every numeric case still passes at half tolerance") {
    const auto& cat = Catalog::instance();
    for (const auto* c : cat.list()) {
        if (c->kind != CaseKind::numeric) continue;
        auto rep = cat.verify(c->id, {}, {}, c->default_tol / 2.0);
        CHECK_MESSAGE(rep.pass, c->id, " rel_err=", rep.rel_err, " at half tol");
    }
}
