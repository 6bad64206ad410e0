#include <doctest.h>

#include "multisect/catalog.hpp"
#include "multisect/report_io.hpp"

using namespace multisect;

TEST_CASE("report JSON carries the full schema") {
    const auto& cat = Catalog::instance();
    auto rep = cat.verify("B9.teixeira");
    auto j = report_to_json(rep);
    for (const char* key : {"id", "params", "lhs", "rhs", "abs_err", "rel_err", "tol", "pass",
                            "j_used", "n_used", "wall_ms"})
        CHECK(j.contains(key));
    CHECK(j["id"] == "B9.teixeira");
    CHECK(j["pass"] == true);
    CHECK(j["wall_ms"] == 0.0);  // timing excluded by default
    auto jt = report_to_json(rep, true);
    CHECK(jt["wall_ms"].get<double>() == rep.wall_ms);
}

TEST_CASE("suite JSON wraps cases with pass flag") {
    const auto& cat = Catalog::instance();
    auto suite = cat.verify_all({}, "C");
    auto j = suite_to_json(suite);
    CHECK(j.contains("cases"));
    CHECK(j.contains("pass"));
    CHECK(j.contains("total_wall_ms"));
    CHECK(j["cases"].size() == suite.cases.size());
}

TEST_CASE("identical runs serialize byte-identically") {
    const auto& cat = Catalog::instance();
    auto a = suite_to_json(cat.verify_all({}, "D")).dump();
    auto b = suite_to_json(cat.verify_all({}, "D")).dump();
    CHECK(a == b);
}

TEST_CASE("csv rows have the same columns as the header") {
    const auto& cat = Catalog::instance();
    auto rep = cat.verify("E9.cj", {{"k", 2.0}});
    auto row = report_to_csv_row(rep);
    // params field is quoted, so commas count cleanly
    auto commas = [](const std::string& s) {
        std::size_t n = 0;
        bool quoted = false;
        for (char ch : s) {
            if (ch == '"') quoted = !quoted;
            if (ch == ',' && !quoted) ++n;
        }
        return n;
    };
    CHECK(commas(row) == commas(csv_header()));
    CHECK(row.find("E9.cj") == 0);
    CHECK(row.find("k=2") != std::string::npos);
}
