#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hml/arith.hpp"
#include "hml/linalg.hpp"

namespace hml {

// Element of Q(zeta_n), always stored at its minimal conductor.
// Coordinates form a tensor over the prime-power factors q^e of n, each factor
// in the power basis of Q(zeta_{q^e}); axes are ordered by q, last axis fastest.
class CycloNum {
public:
    CycloNum(); // zero
    CycloNum(const mpq_class& q);
    static CycloNum root(i64 n, i64 j); // zeta_n^j
    static CycloNum e(const mpq_class& x); // exp(2 pi i x)
    // sum_j counts[j] zeta_n^j
    static CycloNum from_counts(i64 n, const std::vector<i64>& counts);
    static CycloNum from_group_ring(i64 n, const std::vector<mpq_class>& coeffs);

    i64 conductor() const { return n_; }
    const std::vector<mpq_class>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const { return n_ == 1; }
    mpq_class rational_value() const;

    // coefficients of zeta_m^j for j in [0, m), m a multiple of the conductor
    std::vector<mpq_class> group_ring(i64 m) const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator*=(const mpq_class& q);
    CycloNum inv() const; // throws NotInvertible
    CycloNum conj() const;
    std::complex<double> embed() const; // zeta_n -> exp(2 pi i / n)
    std::string str() const;

    friend bool operator==(const CycloNum& a, const CycloNum& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

private:
    struct Axis {
        i64 q;
        int e;
        i64 pe;  // q^e
        i64 phi; // (q-1) q^(e-1)
    };
    static std::vector<Axis> axes_of(i64 n);
    static CycloNum reduce_counts(i64 n, const std::vector<i64>* ic, const std::vector<mpq_class>* qc);
    void normalize();
    CycloNum embed_in(i64 m) const;

    i64 n_ = 1;
    std::vector<mpq_class> c_{0};
};

CycloNum operator+(CycloNum a, const CycloNum& b);
CycloNum operator-(CycloNum a, const CycloNum& b);
CycloNum operator*(CycloNum a, const CycloNum& b);
CycloNum operator*(CycloNum a, const mpq_class& q);
CycloNum operator*(const mpq_class& q, CycloNum a);

template <>
struct FieldOps<CycloNum> {
    static CycloNum zero(const CycloNum&) { return CycloNum(); }
    static CycloNum one(const CycloNum&) { return CycloNum(1); }
    static bool is_zero(const CycloNum& x) { return x.is_zero(); }
    static CycloNum inv(const CycloNum& x) { return x.inv(); }
    static CycloNum from_mpq(const CycloNum&, const mpq_class& q) { return CycloNum(q); }
};

} // namespace hml
