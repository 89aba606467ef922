#pragma once

#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "hml/arith.hpp"
#include "hml/numfield.hpp"

namespace hml {

// Dirichlet character given by its values on Z/modulus
struct DirChar {
    i64 modulus = 1;
    std::vector<int> values{1};
    int operator()(i64 n) const { return values[mod(n, modulus)]; }
    bool is_trivial() const { return modulus == 1; }
    static DirChar trivial() { return {}; }
    static DirChar kronecker_minus(i64 D); // (-D | .) for prime D = 3 mod 4
    int parity() const { return (*this)(-1); }
    bool operator==(const DirChar&) const = default;
};

// Truncated expansion sum c_l q^(l/den), known for l/den < prec. Only nonzero
// coefficients are stored; all of them live in one field of a tower.
class QExp {
public:
    QExp();
    QExp(FieldPtr F, i64 den, mpq_class prec);
    static QExp from_rationals(const std::vector<mpq_class>& a, i64 den = 1); // prec = a.size()/den
    static QExp from_ints(const std::vector<mpz_class>& a, i64 den = 1);

    const FieldPtr& field() const { return F_; }
    i64 den() const { return den_; }
    const mpq_class& prec() const { return prec_; }
    // number of integer keys l with l/den < prec
    i64 key_bound() const;
    const std::map<i64, NFElem>& coeffs() const { return c_; }

    bool known(i64 l) const { return frac(l, den_) < prec_; }
    NFElem coeff(i64 l) const; // throws InsufficientPrecision beyond prec
    void set(i64 l, const NFElem& v);
    void add_to(i64 l, const NFElem& v);
    bool is_zero() const { return c_.empty(); }
    i64 valuation_key() const; // smallest key with nonzero coefficient, or key_bound()

    QExp lift_to(const FieldPtr& F) const;
    QExp with_den(i64 den) const; // den must be a multiple of den()
    QExp truncate(const mpq_class& prec) const;

    QExp operator-() const;
    friend QExp operator+(const QExp& a, const QExp& b);
    friend QExp operator-(const QExp& a, const QExp& b);
    friend QExp operator*(const NFElem& s, const QExp& a);
    friend QExp operator*(const mpq_class& s, const QExp& a);
    // exact equality of the common known range
    bool agrees_with(const QExp& o) const;
    bool operator==(const QExp& o) const;

private:
    FieldPtr F_;
    i64 den_ = 1;
    mpq_class prec_;
    std::map<i64, NFElem> c_;
};

// Cauchy product; precision min(prec_f + val_g, prec_g + val_f)
QExp mul(const QExp& f, const QExp& g); // throws PrecisionUnderflow
QExp hecke_T(const QExp& f, i64 l, int w, const DirChar& chi);
QExp u_shift(const QExp& f, i64 p);
QExp v_shift(const QExp& f, i64 p);
i64 gamma0_index(i64 N);
i64 sturm_bound(int w, i64 N);

// dense integer series kernels (length P); the OpenMP version is the production path
std::vector<mpz_class> series_mul_serial(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, size_t P);
std::vector<mpz_class> series_mul_omp(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, size_t P);
std::vector<mpz_class> series_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, size_t P);

} // namespace hml
