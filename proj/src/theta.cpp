#include "hml/theta.hpp"

#include "hml/error.hpp"

namespace hml {

namespace {

// sum over gamma in u + O/cO of e[(a|gamma|^2 - tr(gamma conj v) + d|v|^2)/c], as counts
// of the numerator mod cD. Writing gamma = beta/sqrt(-D): |gamma|^2 = N(beta)/D and
// tr(gamma conj v) = j_v tr(beta)/D.
void count_row(const QuadField& F, const SL2& s, i64 ju, std::vector<std::vector<i64>>& cnt) {
    const i64 D = F.D(), c = s.c, n = c * D;
    const AlgInt sq{-1, 2}; // sqrt(-D) = 2 omega - 1
    for (auto& row : cnt) std::fill(row.begin(), row.end(), 0);
    for (i64 x = 0; x < c; ++x)
        for (i64 y = 0; y < c; ++y) {
            AlgInt t = F.mul(sq, {x, y});
            AlgInt beta{t.x + ju, t.y};
            const i64 A = mod(static_cast<__int128>(s.a) * F.norm(beta), n);
            const i64 tr = mod(F.trace(beta), n);
            for (i64 jv = 0; jv < D; ++jv) {
                i64 e = A - mod(static_cast<__int128>(jv) * tr, n) + mod(static_cast<__int128>(s.d) * jv * jv, n);
                ++cnt[jv][mod(e, n)];
            }
        }
}

Mat<CycloNum> positive_c(const QuadField& F, const SL2& s, bool parallel) {
    const i64 D = F.D();
    Mat<CycloNum> M(D, std::vector<CycloNum>(D));
    // -i/(c sqrt D) = -sqrt(-D)/(cD)
    const CycloNum pre = sqrt_minus_D(F) * frac(-1, s.c * D);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (i64 ju = 0; ju < D; ++ju) {
        std::vector<std::vector<i64>> cnt(D, std::vector<i64>(s.c * D));
        count_row(F, s, ju, cnt);
        for (i64 jv = 0; jv < D; ++jv) M[ju][jv] = pre * CycloNum::from_counts(s.c * D, cnt[jv]);
    }
    return M;
}

Mat<CycloNum> upper(const QuadField& F, const SL2& s) {
    const i64 D = F.D();
    Mat<CycloNum> M(D, std::vector<CycloNum>(D));
    for (i64 ju = 0; ju < D; ++ju) {
        i64 jv = mod(s.a * ju, D); // a = +-1, so u = a v iff j_v = a j_u
        M[ju][jv] = CycloNum::e(frac(mod(s.a * s.b * ju * ju, D), D)) * mpq_class(s.a);
    }
    return M;
}

Mat<CycloNum> build(const QuadField& F, const SL2& s, bool parallel) {
    if (s.det() != 1) throw std::invalid_argument("theta_matrix: determinant is not 1");
    if (s.c == 0) return upper(F, s);
    if (s.c > 0) return positive_c(F, s, parallel);
    // s = (-I)(-s), M(-I)_{u,v} = -delta_{u,-v}
    auto P = positive_c(F, -s, parallel);
    const i64 D = F.D();
    Mat<CycloNum> M(D);
    for (i64 ju = 0; ju < D; ++ju) {
        M[ju] = P[mod(-ju, D)];
        for (auto& x : M[ju]) x = -x;
    }
    return M;
}

} // namespace

ThetaMatrix theta_matrix(const QuadField& F, const SL2& s) {
    return {F.D(), s, build(F, s, true)};
}

ThetaMatrix theta_matrix_serial(const QuadField& F, const SL2& s) {
    return {F.D(), s, build(F, s, false)};
}

ThetaMatrix n_matrix(const QuadField& F, const SL2& s) {
    auto M = theta_matrix(F, s);
    M.entries = transpose(inverse(M.entries));
    return M;
}

Mat<CycloNum> theta_closed_form(const QuadField& F, const SL2& s) {
    const i64 D = F.D();
    if (s.c <= 0 || s.c % D != 0) throw std::invalid_argument("closed form needs c > 0 and D | c");
    Mat<CycloNum> M(D, std::vector<CycloNum>(D));
    for (i64 jv = 0; jv < D; ++jv) {
        i64 ju = mod(s.d * jv, D);
        M[ju][jv] = CycloNum::e(frac(mod(s.a * s.b * ju * ju, D), D)) * mpq_class(F.chi(s.d)); // chi(d), not chi(|d|): they differ for d < 0
    }
    return M;
}

std::vector<int> pi_permutation(const QuadField& F, const AlgInt& pi) {
    std::vector<int> perm(F.D());
    for (i64 j = 0; j < F.D(); ++j) perm[j] = static_cast<int>(F.coset_of(F.mul(pi, {j, 0})));
    return perm;
}

bool pi_twist_check(const QuadField& F, const SL2& s, i64 p, const AlgInt& pi) {
    if (mod(s.c, p) != 0) throw LevelMismatch("matrix is not in Gamma0(" + std::to_string(p) + ")");
    auto lhs = theta_matrix(F, s);
    auto rhs = theta_matrix(F, {s.a, p * s.b, s.c / p, s.d});
    auto perm = pi_permutation(F, pi);
    const i64 D = F.D();
    for (i64 u = 0; u < D; ++u)
        for (i64 v = 0; v < D; ++v)
            if (lhs.entries[perm[u]][perm[v]] != rhs.entries[u][v]) return false;
    return true;
}

std::vector<SL2> gamma0_generators(i64 p) {
    std::vector<SL2> g{{1, 1, 0, 1}, {-1, 0, 0, -1}};
    for (i64 k = 1; k < p; ++k) {
        i64 kk = mod(-inv_mod(k, p), p);
        g.push_back({k, -1, k * kk + 1, -kk});
    }
    return g;
}

namespace {

// completes (c, d) with gcd 1 to a matrix with small a, b; false if nothing fits the bound
bool complete(i64 c, i64 d, i64 bound, SL2& out) {
    if (c == 0) {
        if (d != 1 && d != -1) return false;
        out = {d, 0, 0, d};
        return true;
    }
    // a d - b c = 1
    auto eg = egcd(d, c); // eg.x d + eg.y c = g
    if (eg.g != 1 && eg.g != -1) return false;
    i64 a = eg.x * eg.g, b = -eg.y * eg.g;
    // shift by t: a + t c, b + t d
    i64 t = -a / c;
    for (i64 dt = -1; dt <= 1; ++dt) {
        i64 aa = a + (t + dt) * c, bb = b + (t + dt) * d;
        if (std::abs(aa) <= bound && std::abs(bb) <= bound) {
            out = {aa, bb, c, d};
            return true;
        }
    }
    return false;
}

} // namespace

SL2 random_sl2(std::mt19937_64& rng, i64 bound) {
    return random_gamma0(rng, 1, bound);
}

SL2 random_gamma0(std::mt19937_64& rng, i64 N, i64 bound) {
    std::uniform_int_distribution<i64> cd(-bound / N, bound / N), dd(-bound, bound);
    SL2 s;
    for (;;) {
        i64 c = N * cd(rng), d = dd(rng);
        if (d == 0 || gcd(c, d) != 1) continue;
        if (complete(c, d, bound, s)) return s;
    }
}

} // namespace hml
