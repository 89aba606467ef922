#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hml/linalg.hpp"
#include "hml/poly.hpp"

namespace hml {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a tower Q = L_0 < L_1 < ... < L_r with L_i = L_{i-1}[x_i]/(m_i).
// Coordinates are nested: block i of the top level is the L_{r-1}-coefficient of x_r^i.
// The tower is an etale algebra in general; it is a field when every m_i is irreducible.
class NFElem {
public:
    NFElem();                       // zero of Q
    NFElem(FieldPtr F);             // zero of F
    NFElem(FieldPtr F, std::vector<mpq_class> coords);
    static NFElem rational(FieldPtr F, const mpq_class& q);
    static NFElem generator(FieldPtr F); // x_r of the top level

    const FieldPtr& field() const { return F_; }
    const std::vector<mpq_class>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const; // lies in Q
    mpq_class rational_value() const;

    NFElem operator-() const;
    NFElem& operator+=(const NFElem& o);
    NFElem& operator-=(const NFElem& o);
    NFElem& operator*=(const NFElem& o);
    NFElem& operator*=(const mpq_class& q);
    NFElem inv() const; // throws NotInvertible for zero divisors
    NFElem pow(unsigned e) const;

    // lift into an extension tower containing this element's field
    NFElem lift_to(const FieldPtr& target) const;

    std::string str() const;

private:
    FieldPtr F_;
    std::vector<mpq_class> c_;
};

NFElem operator+(NFElem a, const NFElem& b);
NFElem operator-(NFElem a, const NFElem& b);
NFElem operator*(NFElem a, const NFElem& b);
NFElem operator*(NFElem a, const mpq_class& q);
NFElem operator*(const mpq_class& q, NFElem a);
bool operator==(const NFElem& a, const NFElem& b);
inline bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static FieldPtr rationals();
    // adjoin a root of x^d + c_{d-1}x^{d-1} + ... + c_0 with c_i in base
    static FieldPtr extend(const FieldPtr& base, std::vector<NFElem> low_coeffs, std::string var);
    static FieldPtr simple(const QPoly& monic, std::string var);

    int degree() const { return degree_; }
    int rel_degree() const { return static_cast<int>(minpoly_.size()); }
    const FieldPtr& base() const { return base_; }
    bool is_rationals() const { return !base_; }
    int depth() const { return is_rationals() ? 0 : base_->depth() + 1; }
    const std::vector<NFElem>& minpoly() const { return minpoly_; }
    const std::string& var() const { return var_; }
    // true if this tower contains other (other is this or an ancestor)
    bool contains(const NumberField* other) const;
    // minimal polynomial over Q of the top generator when the base is Q
    QPoly absolute_minpoly_simple() const;

    std::vector<mpq_class> mul_raw(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) const;

private:
    NumberField() = default;
    FieldPtr base_;
    std::vector<NFElem> minpoly_;
    std::string var_;
    int degree_ = 1;
};

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b); // throws FieldMismatch

template <>
struct FieldOps<NFElem> {
    static NFElem zero(const NFElem& x) { return NFElem(x.field()); }
    static NFElem one(const NFElem& x) { return NFElem::rational(x.field(), 1); }
    static bool is_zero(const NFElem& x) { return x.is_zero(); }
    static NFElem inv(const NFElem& x) { return x.inv(); }
    static NFElem from_mpq(const NFElem& x, const mpq_class& q) { return NFElem::rational(x.field(), q); }
};

} // namespace hml
