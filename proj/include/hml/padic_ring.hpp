#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hml/arith.hpp"
#include "hml/linalg.hpp"

namespace hml {

// Galois ring GR(p^K, f) = (Z/p^K)[x]/(m(x)) with m monic, irreducible mod p.
// f = 1 is Z/p^K.
class GaloisRing {
public:
    GaloisRing(i64 p, int K, int f);
    i64 p() const { return p_; }
    int K() const { return K_; }
    int f() const { return f_; }
    i64 modulus() const { return m_; }
    const std::vector<i64>& modpoly() const { return mp_; } // low first, monic, degree f

private:
    i64 p_;
    int K_, f_;
    i64 m_;
    std::vector<i64> mp_;
};
using RingPtr = std::shared_ptr<const GaloisRing>;
RingPtr make_ring(i64 p, int K, int f = 1);

class PadicScalar {
public:
    PadicScalar() = default;
    explicit PadicScalar(RingPtr R);
    PadicScalar(RingPtr R, std::vector<i64> coords);
    static PadicScalar from_int(RingPtr R, const mpz_class& n);
    static PadicScalar from_mpq(RingPtr R, const mpq_class& q); // throws DivisibleByP
    static PadicScalar gen(RingPtr R);                           // the class of x

    const RingPtr& ring() const { return R_; }
    const std::vector<i64>& coords() const { return c_; }
    bool is_zero() const;
    bool is_unit() const;
    int valuation() const; // K for zero
    bool is_rational() const; // lies in Z/p^K

    PadicScalar operator-() const;
    PadicScalar& operator+=(const PadicScalar& o);
    PadicScalar& operator-=(const PadicScalar& o);
    PadicScalar& operator*=(const PadicScalar& o);
    PadicScalar inv() const; // throws NotInvertible for non-units
    PadicScalar pow(const mpz_class& e) const;
    // divide by p^v exactly; requires valuation >= v, result known mod p^(K-v)
    PadicScalar div_p_pow(int v) const;
    PadicScalar teichmuller() const;
    std::vector<i64> residue() const; // coordinates mod p
    std::string str() const;

    friend bool operator==(const PadicScalar& a, const PadicScalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PadicScalar& a, const PadicScalar& b) { return !(a == b); }

private:
    RingPtr R_;
    std::vector<i64> c_;
};

PadicScalar operator+(PadicScalar a, const PadicScalar& b);
PadicScalar operator-(PadicScalar a, const PadicScalar& b);
PadicScalar operator*(PadicScalar a, const PadicScalar& b);

// valuation of a - b, capped at K
int agree_val(const PadicScalar& a, const PadicScalar& b);

// roots of a monic polynomial (low first) lying in the ring, all simple mod p.
// throws NotDiagonalizable if a root in the residue field is repeated.
std::vector<PadicScalar> simple_roots(const std::vector<PadicScalar>& monic);

template <>
struct FieldOps<PadicScalar> {
    static PadicScalar zero(const PadicScalar& x) { return PadicScalar(x.ring()); }
    static PadicScalar one(const PadicScalar& x) { return PadicScalar::from_int(x.ring(), 1); }
    static bool is_zero(const PadicScalar& x) { return x.is_zero(); }
    static PadicScalar inv(const PadicScalar& x) { return x.inv(); }
    static PadicScalar from_mpq(const PadicScalar& x, const mpq_class& q) { return PadicScalar::from_mpq(x.ring(), q); }
};

// reduced echelon over the local ring using unit pivots only; returns pivot
// columns and leaves non-pivot rows with entries of positive valuation
std::vector<int> unit_echelon(Mat<PadicScalar>& A);

} // namespace hml
