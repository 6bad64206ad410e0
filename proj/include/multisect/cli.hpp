#ifndef MULTISECT_CLI_HPP
#define MULTISECT_CLI_HPP

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "multisect/catalog.hpp"
#include "multisect/census.hpp"
#include "multisect/report_io.hpp"

namespace multisect::cli {

namespace detail {

struct Options {
    std::string id;
    std::vector<std::string> params;  // k=v or k=v1,v2 for sweep grids
    std::optional<double> tol;
    std::optional<int> max_j;
    std::optional<std::int64_t> max_n;
    std::string format = "text";
    std::string out_path;
    std::string filter;
    bool timing = false;
    // census-specific
    std::int64_t base = 2;
    std::int64_t limit = 16;
    std::string set_name = "D";
};

inline TruncationPolicy make_policy(const Options& o) {
    TruncationPolicy pol;
    if (o.max_j) pol.j_max_cap = *o.max_j;
    if (o.max_n) pol.n_max_cap = *o.max_n;
    pol.validate();
    return pol;
}

inline ParamMap parse_single_params(const std::vector<std::string>& kvs) {
    ParamMap p;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("--param expects k=v, got '" + kv + "'");
        p[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    return p;
}

inline std::map<std::string, std::vector<double>> parse_grid(const std::vector<std::string>& kvs) {
    std::map<std::string, std::vector<double>> grid;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("--param expects k=v1,v2,..., got '" + kv + "'");
        std::vector<double> vals;
        std::stringstream ss(kv.substr(eq + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
        if (vals.empty()) throw std::invalid_argument("empty value list in '" + kv + "'");
        grid[kv.substr(0, eq)] = vals;
    }
    return grid;
}

struct OutputSink {
    std::ostream* os;
    std::ofstream file;
    explicit OutputSink(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            os = &fallback;
        } else {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
            os = &file;
        }
    }
};

inline int emit_reports(const std::vector<VerificationReport>& reports, bool suite_pass,
                        double total_ms, const Options& o, std::ostream& out) {
    OutputSink sink(o.out_path, out);
    if (o.format == "json") {
        SuiteReport s;
        s.cases = reports;
        s.pass = suite_pass;
        s.total_wall_ms = total_ms;
        if (reports.size() == 1)
            *sink.os << report_to_json(reports.front(), o.timing).dump(2) << "\n";
        else
            *sink.os << suite_to_json(s, o.timing).dump(2) << "\n";
    } else if (o.format == "csv") {
        *sink.os << csv_header() << "\n";
        for (const auto& r : reports) *sink.os << report_to_csv_row(r, o.timing) << "\n";
    } else {
        for (const auto& r : reports) *sink.os << report_to_text(r) << "\n";
        if (reports.size() > 1)
            *sink.os << (suite_pass ? "suite: PASS" : "suite: FAIL") << " (" << reports.size()
                     << " cases)\n";
    }
    return suite_pass ? 0 : 1;
}

inline int cmd_list(const Options& o, std::ostream& out) {
    const auto& cat = Catalog::instance();
    OutputSink sink(o.out_path, out);
    if (o.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto* c : cat.list()) {
            if (!o.filter.empty() && c->id.rfind(o.filter, 0) != 0) continue;
            nlohmann::ordered_json j;
            j["id"] = c->id;
            j["description"] = c->description;
            j["kind"] = c->kind == CaseKind::exact_structural ? "exact-structural"
                        : c->kind == CaseKind::numeric        ? "numeric"
                                                              : "negative-control";
            j["default_tol"] = c->default_tol;
            nlohmann::ordered_json params = nlohmann::ordered_json::array();
            for (const auto& s : c->params) {
                nlohmann::ordered_json pj;
                pj["name"] = s.name;
                pj["default"] = s.def;
                pj["min"] = s.min;
                pj["max"] = s.max;
                params.push_back(pj);
            }
            j["params"] = params;
            arr.push_back(j);
        }
        *sink.os << arr.dump(2) << "\n";
    } else {
        for (const auto* c : cat.list()) {
            if (!o.filter.empty() && c->id.rfind(o.filter, 0) != 0) continue;
            *sink.os << c->id << "  -  " << c->description << "\n";
        }
    }
    return 0;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    if (o.id.empty()) throw std::invalid_argument("verify requires --id");
    const auto& cat = Catalog::instance();
    auto rep = cat.verify(o.id, parse_single_params(o.params), make_policy(o), o.tol);
    return emit_reports({rep}, rep.pass, rep.wall_ms, o, out);
}

inline int cmd_verify_all(const Options& o, std::ostream& out) {
    const auto& cat = Catalog::instance();
    TruncationPolicy pol = make_policy(o);
    SuiteReport suite = cat.verify_all(pol, o.filter);
    return emit_reports(suite.cases, suite.pass, suite.total_wall_ms, o, out);
}

inline int cmd_sweep(const Options& o, std::ostream& out) {
    if (o.id.empty()) throw std::invalid_argument("sweep requires --id");
    const auto& cat = Catalog::instance();
    auto reports = cat.sweep(o.id, parse_grid(o.params), make_policy(o));
    bool pass = true;
    double ms = 0.0;
    for (const auto& r : reports) {
        pass = pass && r.pass;
        ms += r.wall_ms;
    }
    return emit_reports(reports, pass, ms, o, out);
}

inline int cmd_census(const Options& o, std::ostream& out) {
    MultisetCensus census(1);
    if (o.set_name == "C")
        census = census_C(o.base, o.limit);
    else if (o.set_name == "D")
        census = census_D(o.base, o.limit);
    else if (o.set_name == "E")
        census = census_E(o.base, o.limit);
    else
        throw std::invalid_argument("--set must be one of C, D, E");
    OutputSink sink(o.out_path, out);
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["base"] = o.base;
        j["limit"] = o.limit;
        j["set"] = o.set_name;
        nlohmann::ordered_json counts = nlohmann::ordered_json::object();
        census.for_each([&](std::int64_t m, std::int64_t k) { counts[std::to_string(m)] = k; });
        j["counts"] = counts;
        j["total"] = census.total();
        *sink.os << j.dump(2) << "\n";
    } else {
        *sink.os << o.set_name << "_" << o.base << " restricted to [1, " << o.limit << "]: {";
        bool first = true;
        census.for_each([&](std::int64_t m, std::int64_t k) {
            if (!first) *sink.os << ", ";
            *sink.os << m << ":" << k;
            first = false;
        });
        *sink.os << "}\n";
    }
    return 0;
}

inline int cmd_structural(const Options& o, std::ostream& out) {
    const auto& cat = Catalog::instance();
    TruncationPolicy pol = make_policy(o);
    ParamMap overrides = parse_single_params(o.params);
    std::vector<VerificationReport> reports;
    bool pass = true;
    double ms = 0.0;
    if (!o.id.empty()) {
        auto rep = cat.verify(o.id, overrides, pol, o.tol);
        pass = rep.pass;
        ms = rep.wall_ms;
        reports.push_back(std::move(rep));
    } else {
        for (const auto* c : cat.list()) {
            if (c->kind != CaseKind::exact_structural) continue;
            if (!o.filter.empty() && c->id.rfind(o.filter, 0) != 0) continue;
            auto rep = cat.verify(c->id, {}, pol);
            pass = pass && rep.pass;
            ms += rep.wall_ms;
            reports.push_back(std::move(rep));
        }
    }
    return emit_reports(reports, pass, ms, o, out);
}

}  // namespace detail

/// Entry point shared by the binary and the tests. Returns the process exit
/// code: 0 all pass, 1 any failure/non-convergence, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"multisect: verification engine for dyadic/b-adic multisection identities"};
    app.require_subcommand(1);

    detail::Options o;
    auto add_common = [&](CLI::App* sub, bool with_id) {
        if (with_id) sub->add_option("--id", o.id, "case id");
        sub->add_option("--param", o.params, "parameter override k=v (repeatable)");
        sub->add_option("--tol", o.tol, "relative tolerance override");
        sub->add_option("--max-j", o.max_j, "shell cap override");
        sub->add_option("--max-n", o.max_n, "inner summation cap override");
        sub->add_option("--format", o.format, "output format: text|json|csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", o.out_path, "write the report to a file instead of stdout");
        sub->add_flag("--timing", o.timing, "include wall-clock fields in reports");
    };

    auto* c_list = app.add_subcommand("list", "list catalog cases");
    c_list->add_option("--filter", o.filter, "id prefix filter");
    c_list->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));
    c_list->add_option("--out", o.out_path);

    auto* c_verify = app.add_subcommand("verify", "verify one case");
    add_common(c_verify, true);

    auto* c_all = app.add_subcommand("verify-all", "verify the whole catalog");
    add_common(c_all, false);
    c_all->add_option("--filter", o.filter, "id prefix filter (family)");

    auto* c_sweep = app.add_subcommand("sweep", "verify one case over a parameter grid");
    add_common(c_sweep, true);

    auto* c_census = app.add_subcommand("census", "print a truncated index multiset census");
    c_census->add_option("--base", o.base, "base b >= 2")->required();
    c_census->add_option("--limit", o.limit, "upper bound N")->required();
    c_census->add_option("--set", o.set_name, "which multiset: C, D or E")->required();
    c_census->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));
    c_census->add_option("--out", o.out_path);

    auto* c_struct = app.add_subcommand("structural", "run exact structural oracles");
    add_common(c_struct, true);
    c_struct->add_option("--filter", o.filter, "id prefix filter");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (c_list->parsed()) return detail::cmd_list(o, out);
        if (c_verify->parsed()) return detail::cmd_verify(o, out);
        if (c_all->parsed()) return detail::cmd_verify_all(o, out);
        if (c_sweep->parsed()) return detail::cmd_sweep(o, out);
        if (c_census->parsed()) return detail::cmd_census(o, out);
        if (c_struct->parsed()) return detail::cmd_structural(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace multisect::cli

#endif
