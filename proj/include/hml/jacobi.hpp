#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "hml/core_field.hpp"
#include "hml/error.hpp"
#include "hml/linalg.hpp"

namespace hml {

// Scalar S is NFElem (exact, the field must contain sqrt(-D)) or PadicScalar.
// Every constructor takes z, the image of sqrt(-D) = i sqrt(D), so -i sqrt(D) = -z.

template <class S>
S scal(const S& like, const mpq_class& q) {
    return FieldOps<S>::from_mpq(like, q);
}

// alpha*(l) for 0 <= l < cap; c(n, t) = alpha(D n - N(alpha_t)) with t = alpha_t/sqrt(-D)
template <class S>
struct SpecialJacobiForm {
    i64 D = 0;
    int k = 0;
    i64 N = 1;
    std::vector<S> alpha;
    i64 cap() const { return static_cast<i64>(alpha.size()); }
    const S& at(i64 l) const {
        if (l < 0 || l >= cap()) throw InsufficientAlphaCap("alpha* needed at " + std::to_string(l) + ", cap " + std::to_string(cap()));
        return alpha[l];
    }
    S c(i64 n, const AlgInt& t, const QuadField& F) const {
        i64 l = D * n - F.norm(t);
        if (l < 0) return FieldOps<S>::zero(alpha.at(0));
        return at(l);
    }
};

// plus-space condition a_n = 0 whenever chi(n) = 1
template <class S>
bool is_plus_coeffs(const QuadField& F, const std::vector<S>& a) {
    for (size_t n = 0; n < a.size(); ++n)
        if (F.chi(static_cast<i64>(n)) == 1 && !FieldOps<S>::is_zero(a[n])) return false;
    return true;
}

// alpha(l) = -z a_l / a_D(l), zero where a_D(l) = 0
template <class S>
std::vector<S> alpha_from_coeffs(const QuadField& F, const std::vector<S>& a, const S& z) {
    std::vector<S> al;
    al.reserve(a.size());
    for (size_t l = 0; l < a.size(); ++l) {
        int c = a_D(F, static_cast<i64>(l));
        if (c == 0) al.push_back(FieldOps<S>::zero(z));
        else al.push_back(-z * a[l] * scal(z, frac(1, c)));
    }
    return al;
}

// a = coefficients of a plus-space form of weight k - 1, level D
template <class S>
SpecialJacobiForm<S> krieg_components(const QuadField& F, const std::vector<S>& a, int k, const S& z) {
    if (k % 2) throw ParityMismatch("Jacobi weight must be even");
    if (!is_plus_coeffs(F, a)) throw NotPlusSpace("input has a_n != 0 at some n with chi(n) = 1");
    return {F.D(), k, 1, alpha_from_coeffs(F, a, z)};
}

// theta component f_u for u = j/sqrt(-D): exponent keys l (meaning q^(l/D)) with l = -j^2 mod D
template <class S>
std::map<i64, S> component(const SpecialJacobiForm<S>& phi, i64 j) {
    std::map<i64, S> out;
    const i64 r = mod(-j * j, phi.D);
    for (i64 l = r; l < phi.cap(); l += phi.D)
        if (!FieldOps<S>::is_zero(phi.alpha[l])) out.emplace(l, phi.alpha[l]);
    return out;
}

// cached pi-twist check over the generators of Gamma0(p)
bool pi_twist_prerequisite(const QuadField& F, i64 p);

template <class S>
std::vector<S> p_old_coeffs(const S& lambda, const std::vector<S>& g1, const S& mu, const std::vector<S>& g2, i64 p) {
    const size_t n = std::min(g1.size(), g2.size());
    std::vector<S> f(n, FieldOps<S>::zero(lambda));
    for (size_t l = 0; l < n; ++l) {
        f[l] = lambda * g1[l];
        if (l % p == 0) f[l] += mu * g2[l / p];
    }
    return f;
}

// Level-p form from f = lambda g1 + mu g2(p tau). The component family is also built
// as f_{pi u} = lambda g1_{pi u} + mu g2_u(p tau) and compared entrywise.
template <class S>
SpecialJacobiForm<S> p_old_components(const QuadField& F, const S& lambda, const std::vector<S>& g1, const S& mu,
                                      const std::vector<S>& g2, i64 p, const AlgInt& pi, int k, const S& z) {
    if (k % 2) throw ParityMismatch("Jacobi weight must be even");
    if (F.norm(pi) != p) throw PrerequisiteFailed("pi is not a prime of norm p");
    if (!pi_twist_prerequisite(F, p)) throw PrerequisiteFailed("pi-twist identity fails on Gamma0(p) generators");
    if (!is_plus_coeffs(F, g1) || !is_plus_coeffs(F, g2)) throw NotPlusSpace("p_old_components input");
    SpecialJacobiForm<S> phi{F.D(), k, p, alpha_from_coeffs(F, p_old_coeffs(lambda, g1, mu, g2, p), z)};
    // componentwise construction
    const i64 D = F.D(), cap = phi.cap();
    const auto one = krieg_components(F, std::vector<S>(g1.begin(), g1.begin() + cap), k, z);
    const auto two = krieg_components(F, g2, k, z);
    for (i64 j = 0; j < D; ++j) {
        const i64 w = F.coset_of(F.mul(pi, {j, 0}));
        auto c1 = component(one, w);
        std::map<i64, S> built;
        for (auto& [l, v] : c1) built[l] = lambda * v;
        for (auto& [l, v] : component(two, j)) {
            if (l * p >= cap) break;
            auto it = built.find(l * p);
            S add = mu * v;
            if (it == built.end()) built.emplace(l * p, add);
            else it->second += add;
        }
        auto direct = component(phi, w);
        for (auto it = built.begin(); it != built.end();)
            it = FieldOps<S>::is_zero(it->second) ? built.erase(it) : std::next(it);
        if (built != direct) throw CrossCheckFailure("component family disagrees with the alpha form at coset " + std::to_string(w));
    }
    return phi;
}

// a_l(f) = (z/D) a_D(l) chi(N) alpha(l), weight k - 1, level D N
template <class S>
std::vector<S> descend_W_D(const QuadField& F, const SpecialJacobiForm<S>& phi, i64 N, const S& z) {
    if (gcd(F.D(), N) != 1 || N % 2 == 0) throw BadLevel("descent needs N odd and prime to D");
    std::vector<S> a;
    a.reserve(phi.alpha.size());
    const S pre = z * scal(z, frac(F.chi(N), F.D()));
    for (i64 l = 0; l < phi.cap(); ++l) a.push_back(pre * scal(z, mpq_class(a_D(F, l))) * phi.alpha[l]);
    return a;
}

// c_{V_m phi}(l, t): sum over a | gcd(l, m, content t), gcd(a, N) = 1 of a^(k-1) c_phi(l m/a^2, t/a)
template <class S>
S v_m_coeff(const QuadField& F, const SpecialJacobiForm<S>& phi, i64 m, i64 l, const AlgInt& t) {
    const i64 det = F.D() * l * m - F.norm(t);
    S s = FieldOps<S>::zero(phi.alpha.at(0));
    if (det < 0) return s;
    const i64 g = gcd(gcd(l, m), F.content(t));
    for (i64 a = 1; a <= g; ++a) {
        if (g % a || gcd(a, phi.N) != 1) continue;
        s += scal(s, mpq_class(mpz_pow(a, phi.k - 1))) * phi.at(det / (a * a));
    }
    return s;
}

// all t in D^{-1} (as alpha_t) with D l m >= N(alpha_t), for 0 <= l <= lmax
template <class S>
std::map<std::tuple<i64, i64, i64>, S> v_m(const QuadField& F, const SpecialJacobiForm<S>& phi, i64 m, i64 lmax);

// the Eisenstein-type expansion scaled by alpha(0); rational part times alpha(0)
template <class S>
std::vector<S> v_0(const SpecialJacobiForm<S>& phi, i64 prec) {
    std::vector<S> out;
    const S& a0 = phi.alpha.at(0);
    mpq_class c0 = -bernoulli(phi.k) / (2 * phi.k);
    for (auto [p, e] : factorize(phi.N)) c0 *= 1 - mpq_class(mpz_pow(p, phi.k - 1));
    std::vector<mpz_class> s(prec, 0);
    for (i64 d = 1; d < prec; ++d) {
        if (gcd(d, phi.N) != 1) continue;
        mpz_class dk = mpz_pow(d, phi.k - 1);
        for (i64 n = d; n < prec; n += d) s[n] += dk;
    }
    if (prec > 0) out.push_back(a0 * scal(a0, c0));
    for (i64 n = 1; n < prec; ++n) out.push_back(a0 * scal(a0, mpq_class(s[n])));
    return out;
}

// ---- implementation of the table form of V_m

std::vector<AlgInt> norm_ball(const QuadField& F, i64 bound); // all t with N(t) <= bound

template <class S>
std::map<std::tuple<i64, i64, i64>, S> v_m(const QuadField& F, const SpecialJacobiForm<S>& phi, i64 m, i64 lmax) {
    std::map<std::tuple<i64, i64, i64>, S> out;
    for (i64 l = 0; l <= lmax; ++l)
        for (auto& t : norm_ball(F, F.D() * l * m)) out.emplace(std::make_tuple(l, t.x, t.y), v_m_coeff(F, phi, m, l, t));
    return out;
}

} // namespace hml
