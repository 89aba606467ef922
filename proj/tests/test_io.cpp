#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hml/config.hpp"
#include "hml/io.hpp"
#include "hml/suites.hpp"

using namespace hml;

TEST_CASE("expansions survive a JSON round trip") {
    auto S = build_space(15, 7, DirChar::kronecker_minus(7), 60);
    auto E = eigen_decompose(S, {3, 5, 13});
    for (auto& h : E) {
        auto j = qexp_to_json(h.coeffs);
        auto back = qexp_from_json(json::parse(j.dump()));
        CHECK(back.field()->degree() == h.field->degree());
        CHECK(qexp_to_json(back) == j);
        CHECK(back.key_bound() == h.coeffs.key_bound());
    }
    // towers with a relative level
    auto K = with_sqrt_minus_D(E.back().field, 7);
    auto F = field_from_json(field_to_json(K));
    CHECK(F->degree() == K->degree());
    CHECK(F->var() == "z");
}

TEST_CASE("schema violations") {
    CHECK_THROWS_AS(qexp_from_json(json::parse(R"({"den": 1})")), SchemaViolation);
    CHECK_THROWS_AS(qexp_from_json(json::parse(R"({"field": [], "den": 1, "prec": "3", "coeffs": [[5, ["1"]]]})")), SchemaViolation);
    CHECK_THROWS_AS(qexp_from_json(json::parse(R"({"field": [], "den": 1, "prec": "3", "coeffs": [[1, ["x"]]]})")), SchemaViolation);
    CHECK_THROWS_AS(qexp_from_json(json::parse(R"({"field": [{"var": "a"}], "den": 1, "prec": "3", "coeffs": []})")), SchemaViolation);
    auto ok = qexp_from_json(json::parse(R"({"field": [], "den": 1, "prec": "3", "coeffs": [[1, ["1/2"]]]})"));
    CHECK(ok.coeff(1).rational_value() == mpq_class(1, 2));
}

TEST_CASE("hermitian tables serialize in index order") {
    QuadField F(7);
    auto K = with_sqrt_minus_D(NumberField::rationals(), 7);
    SpecialJacobiForm<NFElem> phi{7, 8, 1, std::vector<NFElem>(80, NFElem::rational(K, 0))};
    for (i64 l = 3; l < 80; l += 7) phi.alpha[l] = NFElem::rational(K, l);
    auto H = lift(F, phi, 3);
    auto j = herm_to_json(F, H);
    CHECK(j["entries"].size() == H.table.size());
    CHECK(j.dump() == herm_to_json(F, lift(F, phi, 3)).dump());
    auto csv = herm_csv(F, H);
    CHECK(csv.rfind("# ", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(H.table.size()) + 2);
}

TEST_CASE("config validation") {
    RunConfig c;
    CHECK_NOTHROW(validate(c));
    CHECK(c.effective_qprec() == 64);
    auto bad = c;
    bad.p = 3;
    CHECK_THROWS_AS(validate(bad), NotSplit);
    bad = c;
    bad.k0 = 7;
    bad.weights = {7};
    CHECK_THROWS_AS(validate(bad), ConfigError);
    bad = c;
    bad.weights = {6, 15};
    CHECK_THROWS_AS(validate(bad), ConfigError);
    bad = c;
    bad.qprec = 20;
    CHECK_THROWS_AS(validate(bad), ConfigError);
    bad = c;
    bad.D = 8;
    CHECK_THROWS_AS(validate(bad), UnsupportedDiscriminant);
    CHECK_NOTHROW(validate(supplementary_config()));
    CHECK_THROWS_AS(run_suite("nope", c), ConfigError);
}

TEST_CASE("reports") {
    Report r{"x", {}};
    CHECK(!r.passed()); // empty is not a pass
    r.add("a", true);
    CHECK(r.passed());
    r.add("b", false, "w", 3);
    auto j = report_json(r);
    CHECK(j["status"] == "fail");
    CHECK(j["checks"][1]["worst_valuation"] == 3);
    CHECK(j["checks"][0]["worst_valuation"].is_null());
}
