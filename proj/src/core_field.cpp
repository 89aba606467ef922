#include "hml/core_field.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "hml/error.hpp"

namespace hml {

namespace {
bool supported(i64 D) {
    for (i64 d : {7, 11, 19, 43, 67, 163})
        if (d == D) return true;
    return false;
}
} // namespace

QuadField::QuadField(i64 D) : D_(D), n0_((1 + D) / 4), inv2_(0) {
    if (!supported(D)) throw UnsupportedDiscriminant("D = " + std::to_string(D));
    inv2_ = inv_mod(2, D);
}

QuadField make_field(i64 D) { return QuadField(D); }

int QuadField::chi(i64 n) const { return kronecker(mod(n, D_), D_); }

i64 QuadField::norm(const AlgInt& a) const { return a.x * a.x + a.x * a.y + n0_ * a.y * a.y; }

AlgInt QuadField::mul(const AlgInt& a, const AlgInt& b) const {
    // omega^2 = omega - n0
    return {a.x * b.x - n0_ * a.y * b.y, a.x * b.y + a.y * b.x + a.y * b.y};
}

i64 QuadField::coset_of(const AlgInt& beta) const { return mod(beta.x + mod(beta.y, D_) * inv2_, D_); }

int chi_K(const QuadField& F, i64 n) { return F.chi(n); }

AlgInt split_prime(const QuadField& F, i64 p) {
    if (!is_prime(p) || p == F.D()) throw NotSplit(std::to_string(p) + " is not a prime distinct from D");
    if (F.chi(p) != 1) throw NotSplit(std::to_string(p) + " is inert in Q(sqrt(-" + std::to_string(F.D()) + "))");
    const i64 ybound = static_cast<i64>(std::ceil(2 * std::sqrt(static_cast<double>(p) / F.D()))) + 1;
    const i64 xbound = static_cast<i64>(std::ceil(std::sqrt(static_cast<double>(p)))) + 1;
    bool found = false;
    AlgInt best;
    auto key = [](const AlgInt& a) {
        // (|y|, |x|), then prefer y > 0, then x > 0
        return std::make_tuple(std::abs(a.y), std::abs(a.x), a.y < 0, a.x < 0);
    };
    for (i64 y = -ybound; y <= ybound; ++y)
        for (i64 x = -xbound; x <= xbound; ++x) {
            AlgInt c{x, y};
            if (F.norm(c) != p) continue;
            if (!found || key(c) < key(best)) best = c;
            found = true;
        }
    if (!found) throw NotSplit("no element of norm " + std::to_string(p) + " in the search box");
    return best;
}

int a_D(const QuadField& F, i64 l) {
    int c = 0;
    for (i64 j = 0; j < F.D(); ++j)
        if (mod(j * j + l, F.D()) == 0) ++c;
    return c;
}

CycloNum gauss_sum(const QuadField& F, i64 a, i64 N) {
    if (N < 1) throw std::invalid_argument("gauss_sum: N must be positive");
    std::vector<i64> counts(N, 0);
    for (i64 x = 0; x < N; ++x)
        for (i64 y = 0; y < N; ++y) counts[mod(static_cast<i64>(static_cast<__int128>(a) * F.norm({x, y}) % N), N)]++;
    return CycloNum::from_counts(N, counts);
}

CycloNum sqrt_minus_D(const QuadField& F) {
    std::vector<i64> counts(F.D(), 0);
    for (i64 j = 1; j < F.D(); ++j) counts[j] = F.chi(j);
    return CycloNum::from_counts(F.D(), counts);
}

std::string to_string(const AlgInt& a) { return "(" + std::to_string(a.x) + "," + std::to_string(a.y) + ")"; }

} // namespace hml
