#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "hml/error.hpp"
#include "hml/theta.hpp"

using namespace hml;

TEST_CASE("small matrices") {
    for (i64 D : {7, 11}) {
        QuadField F(D);
        CHECK(theta_matrix(F, {}).entries == identity(D, CycloNum()));
        CHECK(n_matrix(F, {}).entries == identity(D, CycloNum()));
        auto T = theta_matrix(F, {1, 1, 0, 1}).entries;
        for (i64 u = 0; u < D; ++u)
            for (i64 v = 0; v < D; ++v)
                CHECK(T[u][v] == (u == v ? CycloNum::e(frac(u * u, D)) : CycloNum()));
        // J: (-i/sqrt D) e[-tr(u conj v)], tr(u conj v) = 2 j_u j_v / D
        auto J = theta_matrix(F, {0, -1, 1, 0}).entries;
        CycloNum pre = sqrt_minus_D(F) * frac(-1, D);
        for (i64 u = 0; u < D; ++u)
            for (i64 v = 0; v < D; ++v) CHECK(J[u][v] == pre * CycloNum::e(frac(mod(-2 * u * v, D), D)));
        auto mI = theta_matrix(F, {-1, 0, 0, -1}).entries;
        for (i64 u = 0; u < D; ++u) CHECK(mI[u][mod(-u, D)] == CycloNum(-1));
    }
}

TEST_CASE("cocycle") {
    QuadField F(7);
    std::mt19937_64 rng(20);
    for (int i = 0; i < 50; ++i) {
        auto s1 = random_sl2(rng, 20), s2 = random_sl2(rng, 20);
        REQUIRE(s1.det() == 1);
        auto lhs = theta_matrix(F, s1 * s2).entries;
        CHECK(lhs == matmul(theta_matrix(F, s1).entries, theta_matrix(F, s2).entries));
    }
}

TEST_CASE("serial and parallel agree") {
    QuadField F(11);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 4; ++i) {
        auto s = random_sl2(rng, 15);
        CHECK(theta_matrix(F, s).entries == theta_matrix_serial(F, s).entries);
    }
}

TEST_CASE("closed form when D divides c") {
    for (i64 D : {7, 11}) {
        QuadField F(D);
        std::mt19937_64 rng(D);
        int neg = 0;
        for (int i = 0; i < 20;) {
            auto s = random_gamma0(rng, D, 60);
            if (s.c == 0) continue;
            if (s.c < 0) s = -s;
            neg += s.d < 0;
            CHECK(theta_matrix(F, s).entries == theta_closed_form(F, s));
            ++i;
        }
        CHECK(neg > 0); // the d < 0 branch is exercised
    }
}

TEST_CASE("system matrix") {
    QuadField F(7);
    const i64 N = 11;
    std::mt19937_64 rng(9);
    for (int i = 0; i < 8; ++i) {
        auto s = random_gamma0(rng, 7 * N, 400);
        auto R = n_matrix(F, s).entries;
        for (i64 v = 0; v < 7; ++v) CHECK(R[0][v] == (v == 0 ? CycloNum(F.chi(s.d)) : CycloNum()));
        auto M = theta_matrix(F, s).entries;
        CHECK(matmul(transpose(R), M) == identity(7, CycloNum()));
    }
    auto R = n_matrix(F, {1, 0, N, 1}).entries;
    for (i64 v = 0; v < 7; ++v) {
        CycloNum s;
        for (i64 w = 0; w < 7; ++w) s += CycloNum::e(frac(N * w * w + 2 * w * v, 7));
        CHECK(R[0][v] == s * frac(1, 7));
    }
}

TEST_CASE("pi twist") {
    for (auto [D, p] : std::vector<std::pair<i64, i64>>{{7, 11}, {7, 23}, {11, 5}}) {
        QuadField F(D);
        REQUIRE(F.chi(p) == 1);
        auto pi = split_prime(F, p);
        CHECK(pi_twist_check(F, {}, p, pi));
        CHECK(pi_twist_check(F, {1, 1, 0, 1}, p, pi));
        CHECK(pi_twist_check(F, {1, 0, p, 1}, p, pi));
        for (auto& g : gamma0_generators(p)) CHECK(pi_twist_check(F, g, p, pi));
        std::mt19937_64 rng(p);
        for (int i = 0; i < 30; ++i) CHECK(pi_twist_check(F, random_gamma0(rng, p, 50), p, pi));
        CHECK_THROWS_AS(pi_twist_check(F, {0, -1, 1, 0}, p, pi), LevelMismatch);
    }
}

TEST_CASE("random generators stay in range") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        auto s = random_gamma0(rng, 11, 50);
        CHECK(s.det() == 1);
        CHECK(s.c % 11 == 0);
        CHECK(std::max({std::abs(s.a), std::abs(s.b), std::abs(s.c), std::abs(s.d)}) <= 50);
    }
    for (auto& g : gamma0_generators(13)) {
        CHECK(g.det() == 1);
        CHECK(g.c % 13 == 0);
    }
}

namespace {

// theta_u(tau) at z = w = 0: sum over beta = j_u + sqrt(-D) delta of e[N(beta) tau / D]
std::complex<double> theta_num(const QuadField& F, i64 ju, std::complex<double> tau) {
    const double twopi = 2 * std::acos(-1.0);
    std::complex<double> s = 0;
    for (i64 x = -25; x <= 25; ++x)
        for (i64 y = -25; y <= 25; ++y) {
            AlgInt t = F.mul({-1, 2}, {x, y});
            double n = static_cast<double>(F.norm({t.x + ju, t.y})) / F.D();
            s += std::exp(std::complex<double>(0, twopi * n) * tau);
        }
    return s;
}

} // namespace

TEST_CASE("numerical slash diagnostic") {
    QuadField F(7);
    const std::complex<double> tau(0.13, 0.9);
    for (SL2 s : {SL2{0, -1, 1, 0}, SL2{1, 0, 2, 1}, SL2{2, 1, 1, 1}}) {
        auto M = theta_matrix(F, s).entries;
        std::complex<double> st = (double(s.a) * tau + double(s.b)) / (double(s.c) * tau + double(s.d));
        for (i64 u = 0; u < 7; ++u) {
            std::complex<double> lhs = theta_num(F, u, st) / (double(s.c) * tau + double(s.d));
            std::complex<double> rhs = 0;
            for (i64 v = 0; v < 7; ++v) rhs += M[u][v].embed() * theta_num(F, v, tau);
            CHECK(std::abs(lhs - rhs) < 1e-6);
        }
    }
}
