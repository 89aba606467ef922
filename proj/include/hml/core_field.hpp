#pragma once

#include <string>
#include <vector>

#include "hml/arith.hpp"
#include "hml/cyclo.hpp"

namespace hml {

// x + y*omega with omega = (1 + sqrt(-D))/2
struct AlgInt {
    i64 x = 0, y = 0;
    friend bool operator==(const AlgInt&, const AlgInt&) = default;
};

class QuadField {
public:
    explicit QuadField(i64 D); // throws UnsupportedDiscriminant

    i64 D() const { return D_; }
    i64 omega_norm() const { return n0_; } // N(omega) = (1 + D)/4
    int class_number() const { return 1; }

    int chi(i64 n) const; // Kronecker character of -D
    i64 norm(const AlgInt& a) const;
    i64 trace(const AlgInt& a) const { return 2 * a.x + a.y; }
    AlgInt mul(const AlgInt& a, const AlgInt& b) const;
    AlgInt conj(const AlgInt& a) const { return {a.x + a.y, -a.y}; }
    i64 content(const AlgInt& a) const { return gcd(a.x, a.y); }
    // coset class j of beta/sqrt(-D) in D^{-1}/O, i.e. X + Y/2 mod D
    i64 coset_of(const AlgInt& beta) const;
    i64 inv2() const { return inv2_; }

private:
    i64 D_, n0_, inv2_;
};

QuadField make_field(i64 D);
int chi_K(const QuadField& F, i64 n);
AlgInt split_prime(const QuadField& F, i64 p); // throws NotSplit
int a_D(const QuadField& F, i64 l);
// sum over gamma in O/N O of e[a N(gamma) / N]
CycloNum gauss_sum(const QuadField& F, i64 a, i64 N);
// sum_j chi(j) zeta_D^j, the principal root i*sqrt(D)
CycloNum sqrt_minus_D(const QuadField& F);

std::string to_string(const AlgInt& a);

} // namespace hml
