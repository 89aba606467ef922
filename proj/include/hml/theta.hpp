#pragma once

#include <array>
#include <random>
#include <vector>

#include "hml/core_field.hpp"
#include "hml/cyclo.hpp"
#include "hml/linalg.hpp"

namespace hml {

// integer 2x2 matrix [[a, b], [c, d]]
struct SL2 {
    i64 a = 1, b = 0, c = 0, d = 1;
    bool operator==(const SL2&) const = default;
    SL2 operator*(const SL2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    SL2 operator-() const { return {-a, -b, -c, -d}; }
    i64 det() const { return a * d - b * c; }
};

// rows and columns indexed by the coset j/sqrt(-D), j = 0..D-1
struct ThetaMatrix {
    i64 D = 0;
    SL2 sigma;
    Mat<CycloNum> entries;
};

ThetaMatrix theta_matrix(const QuadField& F, const SL2& s);
ThetaMatrix theta_matrix_serial(const QuadField& F, const SL2& s);
// inverse transpose; throws SingularMatrix
ThetaMatrix n_matrix(const QuadField& F, const SL2& s);
// the closed form for c > 0 with D | c: delta_{u, d v} e[ab |u|^2] chi(d)
Mat<CycloNum> theta_closed_form(const QuadField& F, const SL2& s);
// compares M_{pi u, pi v}(s) with M_{u,v}(diag(p,1) s diag(1/p,1)); throws LevelMismatch
bool pi_twist_check(const QuadField& F, const SL2& s, i64 p, const AlgInt& pi);
// index of pi*u among the cosets, for u = j/sqrt(-D)
std::vector<int> pi_permutation(const QuadField& F, const AlgInt& pi);

// T, -I and the matrices [[k, -1], [k k' + 1, -k']] with k k' = -1 mod p
std::vector<SL2> gamma0_generators(i64 p);
SL2 random_sl2(std::mt19937_64& rng, i64 bound);
SL2 random_gamma0(std::mt19937_64& rng, i64 N, i64 bound);

} // namespace hml
