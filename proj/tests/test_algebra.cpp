#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hml/arith.hpp"
#include "hml/cyclo.hpp"
#include "hml/linalg.hpp"
#include "hml/numfield.hpp"
#include "hml/poly.hpp"

using namespace hml;

namespace {
ZPoly zp(std::initializer_list<long> c) {
    ZPoly r;
    for (long v : c) r.push_back(v);
    return r;
}
} // namespace

TEST_CASE("integer helpers") {
    CHECK(gcd(12, -18) == 6);
    CHECK(inv_mod(3, 7) == 5);
    CHECK(kronecker(2, 7) == 1);
    CHECK(kronecker(3, 7) == -1);
    CHECK(kronecker(-7, 11) == 1);
    CHECK(euler_phi(5600) == 1920);
    CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
    CHECK(bernoulli(4) == mpq_class(-1, 30));
    CHECK(bernoulli(6) == mpq_class(1, 42));
    CHECK(bernoulli(1) == mpq_class(-1, 2));
    CHECK(bernoulli_poly(2, mpq_class(1, 2)) == mpq_class(-1, 12));
}

TEST_CASE("factoring over Q") {
    auto f = poly::factor_squarefree_monic(zp({2040, 0, 1}));
    REQUIRE(f.size() == 1);
    auto g = poly::factor_squarefree_monic(zp({0, 2040, 0, 1}));
    REQUIRE(g.size() == 2);
    CHECK(g[0] == zp({0, 1}));
    // (x^2 - 2)(x^3 - x - 1)(x + 5)
    ZPoly a = zp({-2, 0, 1}), b = zp({-1, -1, 0, 1}), c = zp({5, 1});
    QPoly prod = poly::mul(poly::mul(poly::to_q(a), poly::to_q(b)), poly::to_q(c));
    auto h = poly::factor_squarefree_monic(poly::to_z_monic(prod));
    REQUIRE(h.size() == 3);
    CHECK(h[0] == c);
    CHECK(h[1] == a);
    CHECK(h[2] == b);
    // x^4 + 1 splits modulo every prime but is irreducible
    CHECK(poly::factor_squarefree_monic(zp({1, 0, 0, 0, 1})).size() == 1);
    // Swinnerton-Dyer style: (x^2-2)(x^2-3) product split everywhere locally
    auto s = poly::factor_squarefree_monic(zp({1, 0, -10, 0, 1}));
    CHECK(s.size() == 1);
}

TEST_CASE("finite field polynomials") {
    auto f = fp::first_irreducible(2, 11);
    CHECK(fp::is_irreducible(f, 11));
    CHECK(fp::degree(f) == 2);
    auto fac = fp::factor_squarefree({510 % 11, 0, 1}, 11);
    CHECK(fac.size() == 1);
}

TEST_CASE("berkowitz and inverse") {
    RatMatrix A{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    auto cp = charpoly(A);
    // det(x - A) = x^3 - 9x^2 + 24x - 18
    REQUIRE(cp.size() == 4);
    CHECK(cp[0] == -18);
    CHECK(cp[1] == 24);
    CHECK(cp[2] == -9);
    CHECK(cp[3] == 1);
    auto Ai = inverse(A);
    auto I = matmul(A, Ai);
    CHECK(I == identity<mpq_class>(3, 0));
}

TEST_CASE("number field tower") {
    auto K = NumberField::simple({510, 0, 1}, "s");
    auto s = NFElem::generator(K);
    CHECK(s * s == NFElem::rational(K, -510));
    auto L = NumberField::extend(K, {NFElem::rational(K, 7), NFElem::rational(K, 0)}, "z");
    auto z = NFElem::generator(L);
    auto w = z * s + NFElem::rational(L, 3);
    auto wi = w.inv();
    CHECK(w * wi == NFElem::rational(L, 1));
    CHECK((z * z).lift_to(L) == NFElem::rational(L, -7));
}

TEST_CASE("cyclotomic arithmetic") {
    auto z7 = CycloNum::root(7, 1);
    CycloNum s;
    for (int j = 1; j < 7; ++j) s += CycloNum(kronecker(j, 7)) * CycloNum::root(7, j);
    CHECK(s * s == CycloNum(-7));
    CHECK(s.embed().imag() == doctest::Approx(std::sqrt(7.0)));
    CHECK(CycloNum::root(4, 1) * CycloNum::root(4, 1) == CycloNum(-1));
    CHECK(CycloNum::e(mpq_class(1, 2)) == CycloNum(-1));
    CHECK(CycloNum::root(14, 2) == z7);
    CHECK((z7 * z7.inv()) == CycloNum(1));
    CHECK(z7.conj() * z7 == CycloNum(1));
    auto x = CycloNum::e(mpq_class(1, 12)), y = CycloNum::e(mpq_class(1, 15));
    CHECK(x * y == CycloNum::e(mpq_class(1, 12) + mpq_class(1, 15)));
    // sum of all n-th roots vanishes
    CycloNum t;
    for (int j = 0; j < 20; ++j) t += CycloNum::root(20, j);
    CHECK(t.is_zero());
}
