#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hml/elliptic.hpp"
#include "hml/error.hpp"

using namespace hml;

namespace {

// eta(tau)^3 eta(7 tau)^3 by direct product expansion
std::vector<mpz_class> eta_oracle(int P) {
    std::vector<mpz_class> s(P, 0);
    s[1] = 1;
    for (int n = 1; n < P; ++n)
        for (int step : {n, 7 * n}) {
            if (step >= P) continue;
            for (int r = 0; r < 3; ++r)
                for (int i = P - 1; i >= step; --i) s[i] -= s[i - step];
        }
    return s;
}

const DirChar chi7 = DirChar::kronecker_minus(7);

} // namespace

TEST_CASE("dimensions") {
    CHECK(dim_oracle(3, 7, chi7) == 1);
    CHECK(dim_oracle(2, 7, DirChar::trivial()) == 0);
    CHECK(dim_oracle(12, 1, DirChar::trivial()) == 1);
    CHECK(dim_oracle(4, 7, chi7) == 0); // parity
    int known[] = {1, 1, 3, 5, 5, 7, 9, 9, 11, 13, 13, 15, 17};
    for (int w = 3, i = 0; w <= 27; w += 2, ++i) {
        CHECK(dim_oracle(w, 7, chi7) == known[i]);
        CHECK(dim_oracle(w, 7, chi7) >= 0);
    }
}

TEST_CASE("eisenstein") {
    auto E4 = eisenstein(4, DirChar::trivial(), DirChar::trivial(), 12);
    CHECK(E4.coeff(0).rational_value() == mpq_class(1, 240));
    for (i64 n = 1; n < 12; ++n) {
        mpz_class s = 0;
        for (i64 d : divisors(n)) s += mpz_pow(d, 3);
        CHECK(E4.coeff(n).rational_value() == mpq_class(s));
    }
    auto E1 = eisenstein(1, DirChar::trivial(), chi7, 10);
    CHECK(E1.coeff(1).rational_value() == 1);
    CHECK(E1.coeff(2).rational_value() == 2);
    auto E5 = eisenstein(5, chi7, DirChar::trivial(), 40);
    for (i64 l : {2, 3, 5, 11, 13, 37})
        CHECK(E5.coeff(l).rational_value() == 1 + chi7(l) * mpz_pow(l, 4));
    CHECK_THROWS_AS(eisenstein(4, chi7, DirChar::trivial(), 10), ParityMismatch);
}

TEST_CASE("weight 3 eta form") {
    auto S = build_space(3, 7, chi7, 60);
    REQUIRE(S.cusp_dim == 1);
    auto eta = eta_oracle(60);
    for (i64 n = 0; n < 60; ++n) CHECK(S.cusp[0].coeff(n).rational_value() == mpq_class(eta[n]));
    auto E = eigen_decompose(S, {3, 5});
    REQUIRE(E.size() == 1);
    auto& h = E[0];
    CHECK(h.a(2).rational_value() == -3);
    CHECK(h.a(3).is_zero());
    CHECK(h.a(4).rational_value() == 5);
    CHECK(h.a(11).rational_value() == -6);
    auto hc = conjugate_form(h, make_field(7));
    CHECK(hc.coeffs == h.coeffs);
    CHECK(!is_plus(h.coeffs, 7, 3, make_field(7)));
    CHECK(hecke_T(h.coeffs, 2, 3, chi7).agrees_with(mpq_class(-3) * h.coeffs));
    // a_D conj(a_D) = D^(w-1)
    CHECK(h.aD * h.aD == NFElem::rational(h.field, 49));
}

TEST_CASE("genus zero") {
    auto S = build_space(2, 7, DirChar::trivial(), 20);
    CHECK(S.cusp_dim == 0);
    CHECK(S.dim == 1);
}

TEST_CASE("basis reduction is idempotent") {
    auto S = build_space(9, 7, chi7, 40);
    CHECK(S.dim == 7);
    CHECK(S.cusp_dim == 5);
    for (auto& b : S.cusp) {
        std::vector<mpq_class> v;
        for (i64 n = 0; n < b.key_bound(); ++n) v.push_back(b.coeff(n).rational_value());
        auto c = cusp_coords(S, v);
        int ones = 0;
        for (auto& x : c) {
            CHECK((x == 0 || x == 1));
            ones += x == 1;
        }
        CHECK(ones == 1);
    }
}

TEST_CASE("eigenforms at weights 5, 7, 15") {
    auto F = make_field(7);
    for (int w : {5, 7, 15}) {
        auto S = build_space(w, 7, chi7, sturm_bound(w, 7) + 40);
        auto E = eigen_decompose(S, {3, 5, 13});
        int total = 0;
        for (size_t i = 0; i < E.size(); ++i) {
            auto& h = E[i];
            total += h.field->degree();
            CHECK(h.a(1) == NFElem::rational(h.field, 1));
            CHECK(euler_recursion_holds(h, sturm_bound(w, 7)));
            CHECK(hecke_eigen_holds(h, sturm_bound(w, 7)));
            auto hc = conjugate_form(h, F);
            CHECK(is_plus(h.coeffs - hc.coeffs, 7, w, F));
            auto hcc = conjugate_form(hc, F);
            CHECK(hcc.coeffs == h.coeffs);
            for (i64 n = 1; n < 30; ++n)
                if (F.chi(n) == 1) CHECK(hc.a(n) == h.a(n));
            // a_D times its conjugate
            CHECK(h.aD * hc.aD == NFElem::rational(h.field, mpq_class(mpz_pow(7, w - 1))));
        }
        CHECK(total == S.cusp_dim);
        if (w == 7) {
            REQUIRE(E.size() == 2);
            CHECK(E[1].a(11).rational_value() == 874);
        }
        if (w == 15) {
            REQUIRE(E.size() == 2);
            CHECK(E[0].field->degree() + E[1].field->degree() == 9);
        }
    }
}

TEST_CASE("p-stabilization") {
    auto F = make_field(7);
    auto S = build_space(3, 7, chi7, 80);
    auto h = eigen_decompose(S, {3})[0];
    TowerEmbedding emb(make_ring(11, 8));
    emb.attach(h.field, {});
    auto st = p_stabilize(h, 11, emb, F);
    CHECK(st.alpha * st.beta == NFElem::rational(st.field, 121));
    CHECK(st.alpha + st.beta == NFElem::rational(st.field, -6));
    auto a = emb.map(st.alpha);
    CHECK(a.is_unit());
    CHECK(agree_val(a, PadicScalar::from_int(emb.ring(), 5)) >= 1);
    CHECK(emb.map(st.beta).valuation() >= 1);
    CHECK(st.g.is_zero()); // CM form: h = h^c
    CHECK_THROWS_AS(p_stabilize(h, 3, emb, F), NotSplit);
}

TEST_CASE("stabilized form at weight 7") {
    auto F = make_field(7);
    auto S = build_space(7, 7, chi7, 200);
    auto E = eigen_decompose(S, {3, 5});
    auto& h = E[1];
    TowerEmbedding emb(make_ring(11, 6, 2));
    emb.attach(h.field, {{"a", 0}});
    auto st = p_stabilize(h, 11, emb, F);
    CHECK(!st.g.is_zero());
    CHECK(is_plus(st.g, 7, 7, F));
    // U(p) f = alpha f
    auto uf = u_shift(st.f, 11);
    CHECK(uf.agrees_with(st.alpha * st.f));
    CHECK(st.alpha * st.beta == NFElem::rational(st.field, mpq_class(mpz_pow(11, 6))));
    CHECK(emb.map(st.alpha).is_unit());
    auto [lam, mu] = decompose_p_old(st.f, {st.g}, 11);
    CHECK(lam[0] == NFElem::rational(st.field, 1));
    CHECK(mu[0] == -st.beta);
    auto [l2, m2] = decompose_p_old(v_shift(st.g, 11).truncate(st.g.prec()), {st.g}, 11);
    CHECK(l2[0].is_zero());
    CHECK(m2[0] == NFElem::rational(st.field, 1));
}
