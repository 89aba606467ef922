#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hml/elliptic.hpp"
#include "hml/hermitian.hpp"

using namespace hml;

namespace {

const QuadField F7(7);
const DirChar chi7 = DirChar::kronecker_minus(7);

// the weight-7 non-CM pair: g = h - h^c over K(z), plus the stabilization at 11
struct Weight7 {
    FieldPtr Kz;
    NFElem z, alpha, beta;
    std::vector<NFElem> g, f;
    i64 cap;
};

const Weight7& weight7() {
    static const Weight7 W = [] {
        Weight7 w;
        w.cap = 1400;
        auto S = build_space(7, 7, chi7, w.cap);
        auto E = eigen_decompose(S, {3, 5});
        const auto& h = E[1];
        TowerEmbedding emb(make_ring(11, 4, 2));
        emb.attach(h.field, {{"a", 0}});
        auto st = p_stabilize(h, 11, emb, F7);
        w.Kz = with_sqrt_minus_D(st.field, 7);
        w.z = NFElem::generator(w.Kz);
        w.alpha = st.alpha.lift_to(w.Kz);
        w.beta = st.beta.lift_to(w.Kz);
        w.g = coeff_vector(st.g, w.Kz, w.cap);
        w.f = coeff_vector(st.f, w.Kz, w.cap);
        return w;
    }();
    return W;
}

NFElem q(const FieldPtr& K, const mpq_class& x) { return NFElem::rational(K, x); }

} // namespace

TEST_CASE("hermitian indices") {
    CHECK(eps(F7, {1, 1, {0, 0}}) == 1);
    CHECK(eps(F7, {2, 4, {2, 2}}) == 2);
    CHECK(eps(F7, {0, 3, {0, 0}}) == 3);
    CHECK_THROWS_AS(eps(F7, {0, 0, {0, 0}}), ZeroIndex);
    CHECK(det_D(F7, {2, 3, {1, 1}}) == 42 - 4);
    HermIndex T{3, 1, {1, 2}};
    auto c = canonical(F7, T);
    CHECK(c.n <= c.m);
    CHECK(det_D(F7, c) == det_D(F7, T));
    CHECK(eps(F7, c) == eps(F7, T));
    CHECK(canonical(F7, c) == c);
    // every psd index of the box appears once up to symmetry
    auto W = index_window(F7, 3);
    size_t total = 0;
    for (i64 n = 0; n <= 3; ++n)
        for (i64 m = 0; m <= 3; ++m) total += norm_ball(F7, 7 * n * m).size();
    std::set<HermIndex> seen;
    for (i64 n = 0; n <= 3; ++n)
        for (i64 m = 0; m <= 3; ++m)
            for (auto& a : norm_ball(F7, 7 * n * m)) seen.insert(canonical(F7, {n, m, a}));
    CHECK(seen.size() == W.size());
    CHECK(W.size() < total);
    for (auto& T : W) CHECK(det_D(F7, T) >= 0);
}

TEST_CASE("krieg components and descent") {
    auto& w = weight7();
    auto phi = krieg_components(F7, w.g, 8, w.z);
    CHECK(phi.alpha[3] == -w.z * w.g[3] * mpq_class(1, 2));
    for (i64 l = 1; l < 200; ++l)
        if (F7.chi(l) == 1) CHECK(phi.alpha[l].is_zero());
    CHECK(descend_W_D(F7, phi, 1, w.z) == w.g);
    // components are supported on l = -j^2 mod D
    for (i64 j = 0; j < 7; ++j)
        for (auto& [l, v] : component(phi, j)) CHECK(mod(l + j * j, 7) == 0);
    std::vector<NFElem> zero(100, q(w.Kz, 0));
    for (auto& x : krieg_components(F7, zero, 8, w.z).alpha) CHECK(x.is_zero());
    CHECK(is_plus_coeffs(F7, w.f)); // chi(11) = 1 keeps g(11 tau) in the plus space
    auto bad = w.g;
    bad[2] = q(w.Kz, 1); // chi(2) = 1
    CHECK_THROWS_AS(krieg_components(F7, bad, 8, w.z), NotPlusSpace);
}

TEST_CASE("p-old components") {
    auto& w = weight7();
    const auto pi = split_prime(F7, 11);
    const NFElem one = q(w.Kz, 1), zero = q(w.Kz, 0);
    auto phi = p_old_components(F7, one, w.g, -w.beta, w.g, 11, pi, 8, w.z);
    CHECK(phi.N == 11);
    // alpha form from f directly, and the descent recovers f
    auto direct = alpha_from_coeffs(F7, w.f, w.z);
    CHECK(phi.alpha == direct);
    CHECK(descend_W_D(F7, phi, 11, w.z) == w.f);
    auto only = p_old_components(F7, one, w.g, zero, w.g, 11, pi, 8, w.z);
    CHECK(only.alpha == krieg_components(F7, w.g, 8, w.z).alpha);
    auto shifted = p_old_components(F7, zero, w.g, one, w.g, 11, pi, 8, w.z);
    auto base = krieg_components(F7, w.g, 8, w.z);
    for (i64 j = 0; j < 7; ++j) {
        i64 wj = F7.coset_of(F7.mul(pi, {j, 0}));
        auto cs = component(shifted, wj);
        for (auto& [l, v] : component(base, j)) {
            if (11 * l >= shifted.cap()) break;
            CHECK(cs.at(11 * l) == v);
        }
    }
    for (i64 l = 0; l < 50; ++l) CHECK(a_D(F7, 11 * l) == a_D(F7, l));
    auto bad = w.g;
    bad[9] = one;
    CHECK_THROWS_AS(p_old_components(F7, one, bad, zero, w.g, 11, pi, 8, w.z), NotPlusSpace);
}

TEST_CASE("index shifting") {
    auto& w = weight7();
    auto phi = krieg_components(F7, w.g, 8, w.z);
    auto t1 = v_m(F7, phi, 1, 5);
    for (auto& [key, v] : t1) {
        auto [l, x, y] = key;
        CHECK(v == phi.c(l, {x, y}, F7));
    }
    auto t3 = v_m(F7, phi, 3, 5);
    for (auto& [key, v] : t3) {
        auto [l, x, y] = key;
        if (gcd(l, 3) == 1) CHECK(v == phi.c(3 * l, {x, y}, F7));
    }
    // level 11: the a = 11 term is dropped even when 11 | l
    auto phi11 = p_old_components(F7, q(w.Kz, 1), w.g, -w.beta, w.g, 11, split_prime(F7, 11), 8, w.z);
    CHECK(v_m_coeff(F7, phi11, 11, 11, {0, 0}) == phi11.c(121, {0, 0}, F7));
    auto phi1 = phi11;
    phi1.N = 1;
    CHECK(v_m_coeff(F7, phi1, 11, 11, {0, 0}) == phi11.c(121, {0, 0}, F7) + phi11.c(1, {0, 0}, F7) * mpq_class(mpz_pow(11, 7)));
}

TEST_CASE("V_0") {
    auto K = NumberField::rationals();
    SpecialJacobiForm<NFElem> phi{7, 6, 11, std::vector<NFElem>(5, q(K, 0))};
    for (auto& x : v_0(phi, 10)) CHECK(x.is_zero());
    phi.alpha[0] = q(K, 3);
    auto e = v_0(phi, 30);
    CHECK(e[0].rational_value() == 3 * mpq_class(-1, 42) / 12 * (1 - mpz_pow(11, 5)));
    CHECK(e[1].rational_value() == 3);
    CHECK(e[22].rational_value() == 3 * (1 + 32)); // divisors 11 and 22 dropped
}

TEST_CASE("lift coefficients") {
    auto& w = weight7();
    auto phi = krieg_components(F7, w.g, 8, w.z);
    auto H = lift(F7, phi, 3, 12);
    CHECK(H.c0.is_zero());
    CHECK(H.at(F7, {1, 1, {0, 0}}) == phi.alpha[7]);
    CHECK(H.at(F7, {2, 2, {0, 0}}) == phi.alpha[28] + phi.alpha[7] * mpq_class(128));
    CHECK(H.at(F7, {0, 2, {0, 0}}).is_zero()); // rank one, alpha(0) = 0
    // C((1,1,0)) = sqrt(D) a_D(f)/(i a_D(D)) = -z a_7
    CHECK(H.at(F7, {1, 1, {0, 0}}) == -w.z * w.g[7]);
    CHECK_THROWS_AS(lift(F7, phi, 20), InsufficientAlphaCap);
    // Maass well-definedness
    std::map<std::pair<i64, i64>, NFElem> seen;
    for (auto& [T, v] : H.table) {
        auto [it, fresh] = seen.emplace(std::make_pair(eps(F7, T), det_D(F7, T)), v);
        if (!fresh) CHECK(it->second == v);
    }
}

TEST_CASE("Maass membership and Fourier-Jacobi") {
    auto& w = weight7();
    const auto pi = split_prime(F7, 11);
    auto H = maass_lift(F7, q(w.Kz, 1), w.g, -w.beta, w.g, 11, pi, 8, w.z, 3, 12);
    auto r = maass_membership(F7, H);
    REQUIRE(r.ok);
    auto phi = p_old_components(F7, q(w.Kz, 1), w.g, -w.beta, w.g, 11, pi, 8, w.z);
    for (i64 l = 0; l <= 63; ++l)
        if (a_D(F7, l)) CHECK(r.alpha[l] == phi.alpha[l]);
    // descent formula recovers f at representable l
    for (i64 l = 1; l <= 63; ++l)
        if (a_D(F7, l)) CHECK(w.z * mpq_class(a_D(F7, l), 7) * r.alpha[l] == w.f[l]);
    for (i64 m = 1; m <= 3; ++m) CHECK(fourier_jacobi_check(F7, H, m));
    CHECK_THROWS_AS(fourier_jacobi_check(F7, H, 4), OutOfRange); // strip only reaches 12
    auto zero = H;
    for (auto& [T, v] : zero.table) v = q(w.Kz, 0);
    auto rz = maass_membership(F7, zero);
    CHECK(rz.ok);
    for (auto& x : rz.alpha) CHECK(x.is_zero());
    // linearity
    auto H2 = maass_lift(F7, q(w.Kz, 2), w.g, q(w.Kz, 0), w.g, 11, pi, 8, w.z, 2);
    auto Ha = maass_lift(F7, q(w.Kz, 1), w.g, q(w.Kz, 0), w.g, 11, pi, 8, w.z, 2);
    for (auto& [T, v] : H2.table) CHECK(v == Ha.table.at(T) * mpq_class(2));
}

TEST_CASE("sensitivity to a single corrupted coefficient") {
    auto& w = weight7();
    auto phi = krieg_components(F7, w.g, 8, w.z);
    auto H = lift(F7, phi, 3, 12);
    int caught_m = 0, caught_fj = 0, total = 0;
    for (auto& [T, v] : H.table) {
        if (std::max(T.n, T.m) > 3) continue;
        auto bad = H;
        bad.table[T] += q(w.Kz, 1);
        ++total;
        caught_m += !maass_membership(F7, bad).ok;
        bool fj = true;
        for (i64 m = 1; m <= 3; ++m) fj = fj && fourier_jacobi_check(F7, bad, m);
        caught_fj += !fj;
    }
    CHECK(caught_m == total);
    CHECK(caught_fj == total);
}

TEST_CASE("U_p") {
    auto& w = weight7();
    const auto pi = split_prime(F7, 11);
    auto phi = p_old_components(F7, q(w.Kz, 1), w.g, -w.beta, w.g, 11, pi, 8, w.z);
    auto H = lift_multiples(F7, phi, 1, 11);
    auto U = u_p(F7, H, 11, UpNorm::arithmetic);
    CHECK(U.bound == 1);
    for (auto& [T, v] : U.table) CHECK(v == H.at(F7, scaled(T, 11)));
    // U_p F = alpha^2 F
    auto L = lift(F7, phi, 1);
    for (auto& [T, v] : U.table) CHECK(v == w.alpha * w.alpha * L.at(F7, T));
    auto Uc = u_p(F7, H, 11, UpNorm::classical);
    for (auto& [T, v] : Uc.table) CHECK(v * mpq_class(mpz_pow(11, 12)) == U.table.at(T));
    auto phi1 = krieg_components(F7, w.g, 8, w.z);
    CHECK_THROWS_AS(u_p(F7, lift(F7, phi1, 1), 11, UpNorm::arithmetic), BadLevel);
    // alpha*_out(x) = alpha*(p^2 x)
    auto r = maass_membership(F7, U);
    REQUIRE(r.ok);
    for (i64 x = 1; x <= 7; ++x)
        if (a_D(F7, x)) CHECK(r.alpha[x] == phi.alpha[121 * x]);
}
