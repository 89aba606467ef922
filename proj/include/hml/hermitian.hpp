#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "hml/jacobi.hpp"

namespace hml {

// T = [[n, t], [conj t, m]], t = alpha/sqrt(-D)
struct HermIndex {
    i64 n = 0, m = 0;
    AlgInt alpha;
    auto key() const { return std::make_tuple(n, m, alpha.x, alpha.y); }
    bool operator<(const HermIndex& o) const { return key() < o.key(); }
    bool operator==(const HermIndex& o) const { return key() == o.key(); }
};

i64 det_D(const QuadField& F, const HermIndex& T); // D n m - N(alpha)
i64 eps(const QuadField& F, const HermIndex& T);   // throws ZeroIndex
// smallest (n, m, x, y) among (n, m, +-alpha), (m, n, +-conj alpha)
HermIndex canonical(const QuadField& F, const HermIndex& T);
// canonical representatives of all T >= 0 with max(n, m) <= bound
std::vector<HermIndex> index_window(const QuadField& F, i64 bound);
HermIndex scaled(const HermIndex& T, i64 p);

template <class S>
struct HermForm {
    i64 D = 0;
    int k = 0;
    i64 N = 1;
    i64 bound = 0;
    bool maass = false;
    S c0;
    std::map<HermIndex, S> table; // canonical representatives

    // C(T) for any T in the window; throws OutOfRange
    S at(const QuadField& F, const HermIndex& T) const {
        if (T.n == 0 && T.m == 0 && T.alpha.x == 0 && T.alpha.y == 0) return c0;
        auto it = table.find(canonical(F, T));
        if (it == table.end()) throw OutOfRange("index (" + std::to_string(T.n) + "," + std::to_string(T.m) + "," + to_string(T.alpha) + ") not tabulated");
        return it->second;
    }
};

// C(T) = sum_{d | eps(T), gcd(d, N) = 1} d^(k-1) alpha(detD(T)/d^2); one index
template <class S>
S lift_coeff(const QuadField& F, const SpecialJacobiForm<S>& phi, const HermIndex& T) {
    const i64 e = eps(F, T), det = det_D(F, T);
    S s = FieldOps<S>::zero(phi.alpha.at(0));
    for (i64 d = 1; d <= e; ++d) {
        if (e % d || gcd(d, phi.N) != 1) continue;
        s += scal(s, mpq_class(mpz_pow(d, phi.k - 1))) * phi.at(det / (d * d));
    }
    return s;
}

template <class S>
S lift_constant(const SpecialJacobiForm<S>& phi) {
    mpq_class c = -bernoulli(phi.k) / (2 * phi.k);
    for (auto [p, e] : factorize(phi.N)) c *= 1 - mpq_class(mpz_pow(p, phi.k - 1));
    return phi.alpha.at(0) * scal(phi.alpha.at(0), c);
}

template <class S>
HermForm<S> lift_indices(const QuadField& F, const SpecialJacobiForm<S>& phi, const std::vector<HermIndex>& idx, i64 bound) {
    HermForm<S> H{F.D(), phi.k, phi.N, bound, true, lift_constant(phi), {}};
    std::vector<S> vals(idx.size(), H.c0);
#pragma omp parallel for schedule(static)
    for (size_t i = 0; i < idx.size(); ++i) vals[i] = lift_coeff(F, phi, idx[i]);
    for (size_t i = 0; i < idx.size(); ++i) H.table.emplace(idx[i], vals[i]);
    return H;
}

// the Maass lift table complete for max(n, m) <= bound, plus the index-1 entries
// (n, 1, t) for n <= strip when strip > bound
template <class S>
HermForm<S> lift(const QuadField& F, const SpecialJacobiForm<S>& phi, i64 bound, i64 strip = 0) {
    const i64 need = F.D() * std::max(bound * bound, strip);
    if (phi.cap() <= need)
        throw InsufficientAlphaCap("need cap > " + std::to_string(need) + ", have " + std::to_string(phi.cap()));
    auto idx = index_window(F, bound);
    idx.erase(idx.begin()); // the zero index is c0
    for (i64 n = bound + 1; n <= strip; ++n)
        for (auto& t : norm_ball(F, F.D() * n)) idx.push_back(canonical(F, {n, 1, t}));
    return lift_indices(F, phi, idx, bound);
}

// lift at the indices pT, max(n, m) of T at most bound: exactly what u_p needs
template <class S>
HermForm<S> lift_multiples(const QuadField& F, const SpecialJacobiForm<S>& phi, i64 bound, i64 p) {
    if (phi.cap() <= F.D() * p * p * bound * bound)
        throw InsufficientAlphaCap("need cap > " + std::to_string(F.D() * p * p * bound * bound));
    std::vector<HermIndex> idx;
    for (auto& T : index_window(F, bound))
        if (T.n || T.m) idx.push_back(canonical(F, scaled(T, p)));
    auto H = lift_indices(F, phi, idx, p * bound);
    return H;
}

// p_old_components followed by lift
template <class S>
HermForm<S> maass_lift(const QuadField& F, const S& lambda, const std::vector<S>& g1, const S& mu, const std::vector<S>& g2,
                       i64 p, const AlgInt& pi, int k, const S& z, i64 bound, i64 strip = 0) {
    return lift(F, p_old_components(F, lambda, g1, mu, g2, p, pi, k, z), bound, strip);
}

template <class S>
struct MaassResult {
    bool ok = false;
    std::vector<S> alpha;       // recovered alpha* (index detD), zero where unconstrained
    std::optional<HermIndex> witness; // first violated index
};

// solves alpha* from primitive indices, then verifies every index of the table
template <class S>
MaassResult<S> maass_membership(const QuadField& F, const HermForm<S>& H) {
    MaassResult<S> r;
    const S zero = FieldOps<S>::zero(H.c0);
    i64 maxdet = 0;
    for (auto& [T, v] : H.table) maxdet = std::max(maxdet, det_D(F, T));
    r.alpha.assign(maxdet + 1, zero);
    std::vector<bool> have(maxdet + 1, false);
    // primitive indices fix alpha(detD) directly; detD of a primitive index may be 0
    for (auto& [T, v] : H.table) {
        if (eps(F, T) != 1) continue;
        i64 d = det_D(F, T);
        if (!have[d]) {
            r.alpha[d] = v;
            have[d] = true;
        } else if (r.alpha[d] != v) {
            r.witness = T;
            return r;
        }
    }
    for (auto& [T, v] : H.table) {
        const i64 e = eps(F, T), det = det_D(F, T);
        S s = zero;
        bool known = true;
        for (i64 d = 1; d <= e; ++d) {
            if (e % d || gcd(d, H.N) != 1) continue;
            if (!have[det / (d * d)]) {
                known = false;
                break;
            }
            s += scal(s, mpq_class(mpz_pow(d, H.k - 1))) * r.alpha[det / (d * d)];
        }
        if (!known) {
            // alpha at detD/e^2-type arguments reachable only through this index: solve for the d = 1 term
            if (!have[det]) {
                S rest = zero;
                bool ok = true;
                for (i64 d = 2; d <= e; ++d) {
                    if (e % d || gcd(d, H.N) != 1) continue;
                    if (!have[det / (d * d)]) {
                        ok = false;
                        break;
                    }
                    rest += scal(s, mpq_class(mpz_pow(d, H.k - 1))) * r.alpha[det / (d * d)];
                }
                if (ok) {
                    r.alpha[det] = v - rest;
                    have[det] = true;
                    continue;
                }
            }
            r.witness = T;
            return r;
        }
        if (s != v) {
            r.witness = T;
            return r;
        }
    }
    r.ok = true;
    return r;
}

enum class UpNorm { classical, arithmetic };

// C_out(T) = c C_H(pT), c = p^(4-2k) or 1
template <class S>
HermForm<S> u_p(const QuadField& F, const HermForm<S>& H, i64 p, UpNorm norm) {
    if (H.N % p != 0) throw BadLevel("U_p needs p | N");
    const S c = norm == UpNorm::arithmetic ? scal(H.c0, mpq_class(1)) : scal(H.c0, 1 / mpq_class(mpz_pow(p, 2 * H.k - 4)));
    HermForm<S> out{H.D, H.k, H.N, H.bound / p, H.maass, c * H.c0, {}};
    for (auto& T : index_window(F, out.bound)) {
        if (!T.n && !T.m) continue;
        out.table.emplace(T, c * H.at(F, scaled(T, p)));
    }
    return out;
}

// Index-1 coefficients (l, 1, t) must depend only on D l - N(t), and the index-m ones must equal
// sum_{a | (l, m, t), gcd(a, N) = 1} a^(k-1) C((l m/a^2, 1, t/a)) for l <= bound. Needs the
// index-1 strip up to l = m * bound (see lift's strip argument); throws OutOfRange otherwise.
template <class S>
bool fourier_jacobi_check(const QuadField& F, const HermForm<S>& H, i64 m) {
    if (m < 1 || m > H.bound) throw OutOfRange("m must lie in [1, bound]");
    const i64 D = F.D();
    std::map<i64, S> special;
    for (i64 l = 0; l <= m * H.bound; ++l)
        for (auto& t : norm_ball(F, D * l)) {
            S v = H.at(F, {l, 1, t});
            auto [it, fresh] = special.emplace(D * l - F.norm(t), v);
            if (!fresh && it->second != v) return false;
        }
    for (i64 l = 0; l <= H.bound; ++l)
        for (auto& t : norm_ball(F, D * l * m)) {
            const S lhs = H.at(F, {l, m, t});
            const i64 g = gcd(gcd(l, m), F.content(t));
            S rhs = FieldOps<S>::zero(H.c0);
            for (i64 a = 1; a <= g; ++a) {
                if (g % a || gcd(a, H.N) != 1) continue;
                rhs += scal(rhs, mpq_class(mpz_pow(a, H.k - 1))) * H.at(F, {l * m / (a * a), 1, {t.x / a, t.y / a}});
            }
            if (lhs != rhs) return false;
        }
    return true;
}

} // namespace hml
