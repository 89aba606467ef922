#include "hml/qseries.hpp"

#include <algorithm>

#include <omp.h>

#include "hml/error.hpp"

namespace hml {

DirChar DirChar::kronecker_minus(i64 D) {
    DirChar c;
    c.modulus = D;
    c.values.assign(D, 0);
    for (i64 j = 0; j < D; ++j) c.values[j] = kronecker(j, D);
    return c;
}

QExp::QExp() : F_(NumberField::rationals()), den_(1), prec_(0) {}

QExp::QExp(FieldPtr F, i64 den, mpq_class prec) : F_(std::move(F)), den_(den), prec_(std::move(prec)) {
    if (den_ < 1) throw std::invalid_argument("QExp: den must be positive");
}

QExp QExp::from_rationals(const std::vector<mpq_class>& a, i64 den) {
    QExp r(NumberField::rationals(), den, frac(static_cast<long>(a.size()), den));
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) r.c_.emplace(static_cast<i64>(i), NFElem::rational(r.F_, a[i]));
    return r;
}

QExp QExp::from_ints(const std::vector<mpz_class>& a, i64 den) {
    QExp r(NumberField::rationals(), den, frac(static_cast<long>(a.size()), den));
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) r.c_.emplace(static_cast<i64>(i), NFElem::rational(r.F_, mpq_class(a[i])));
    return r;
}

i64 QExp::key_bound() const {
    // smallest l with l/den >= prec
    mpz_class t = prec_.get_num() * den_;
    mpz_class q = t / prec_.get_den();
    if (q * prec_.get_den() != t) q += 1;
    if (q < 0) q = 0;
    return q.get_si();
}

NFElem QExp::coeff(i64 l) const {
    if (!known(l)) throw InsufficientPrecision("coefficient " + std::to_string(l) + "/" + std::to_string(den_) + " beyond precision " + prec_.get_str());
    auto it = c_.find(l);
    return it == c_.end() ? NFElem(F_) : it->second;
}

void QExp::set(i64 l, const NFElem& v) {
    if (!known(l)) throw InsufficientPrecision("cannot store beyond precision");
    if (v.field() != F_ && !F_->contains(v.field().get())) throw FieldMismatch("QExp::set");
    if (v.is_zero()) c_.erase(l);
    else c_[l] = v.lift_to(F_);
}

void QExp::add_to(i64 l, const NFElem& v) {
    if (v.is_zero()) return;
    auto it = c_.find(l);
    if (it == c_.end()) set(l, v);
    else {
        it->second += v.lift_to(F_);
        if (it->second.is_zero()) c_.erase(it);
    }
}

i64 QExp::valuation_key() const { return c_.empty() ? key_bound() : c_.begin()->first; }

QExp QExp::lift_to(const FieldPtr& F) const {
    if (F == F_) return *this;
    QExp r(F, den_, prec_);
    for (auto& [l, v] : c_) r.c_.emplace(l, v.lift_to(F));
    return r;
}

QExp QExp::with_den(i64 den) const {
    if (den % den_ != 0) throw std::invalid_argument("with_den: not a multiple");
    QExp r(F_, den, prec_);
    for (auto& [l, v] : c_) r.c_.emplace(l * (den / den_), v);
    return r;
}

QExp QExp::truncate(const mpq_class& prec) const {
    QExp r(F_, den_, std::min(prec, prec_));
    for (auto& [l, v] : c_)
        if (r.known(l)) r.c_.emplace(l, v);
    return r;
}

QExp QExp::operator-() const {
    QExp r(*this);
    for (auto& [l, v] : r.c_) v = -v;
    return r;
}

namespace {
void align(QExp& a, QExp& b) {
    if (a.field() != b.field()) {
        auto F = common_field(a.field(), b.field());
        a = a.lift_to(F);
        b = b.lift_to(F);
    }
    if (a.den() != b.den()) {
        i64 L = lcm(a.den(), b.den());
        a = a.with_den(L);
        b = b.with_den(L);
    }
}
} // namespace

QExp operator+(const QExp& a0, const QExp& b0) {
    QExp a(a0), b(b0);
    align(a, b);
    QExp r = a.truncate(std::min(a.prec(), b.prec()));
    for (auto& [l, v] : b.coeffs())
        if (r.known(l)) r.add_to(l, v);
    return r;
}

QExp operator-(const QExp& a, const QExp& b) { return a + (-b); }

QExp operator*(const NFElem& s, const QExp& a) {
    auto F = common_field(s.field(), a.field());
    QExp r(F, a.den(), a.prec());
    if (s.is_zero()) return r;
    NFElem t = s.lift_to(F);
    for (auto& [l, v] : a.coeffs()) r.set(l, t * v);
    return r;
}

QExp operator*(const mpq_class& s, const QExp& a) { return NFElem::rational(a.field(), s) * a; }

bool QExp::agrees_with(const QExp& o) const {
    QExp d = *this - o;
    return d.is_zero();
}

bool QExp::operator==(const QExp& o) const { return prec_ == o.prec_ && agrees_with(o); }

QExp mul(const QExp& f0, const QExp& g0) {
    QExp f(f0), g(g0);
    align(f, g);
    const i64 den = f.den();
    mpq_class vf(f.valuation_key(), den), vg(g.valuation_key(), den);
    mpq_class prec = std::min(f.prec() + vg, g.prec() + vf);
    if (prec * den < 1) throw PrecisionUnderflow("product precision " + prec.get_str());
    QExp r(f.field(), den, prec);
    const i64 kb = r.key_bound();
    std::map<i64, NFElem> acc;
    for (auto& [i, a] : f.coeffs()) {
        if (i >= kb) break;
        for (auto& [j, b] : g.coeffs()) {
            if (i + j >= kb) break;
            auto it = acc.find(i + j);
            if (it == acc.end()) acc.emplace(i + j, a * b);
            else it->second += a * b;
        }
    }
    for (auto& [l, v] : acc)
        if (!v.is_zero()) r.set(l, v);
    return r;
}

QExp hecke_T(const QExp& f, i64 l, int w, const DirChar& chi) {
    if (f.den() != 1) throw std::invalid_argument("hecke_T: integral exponents required");
    QExp r(f.field(), 1, f.prec() / l);
    const i64 kb = r.key_bound();
    mpq_class s = mpq_class(chi(l)) * mpq_class(mpz_pow(l, w - 1));
    for (i64 n = 0; n < kb; ++n) {
        NFElem v = f.coeff(n * l);
        if (n % l == 0 && s != 0) v += f.coeff(n / l) * s;
        r.set(n, v);
    }
    return r;
}

QExp u_shift(const QExp& f, i64 p) {
    if (f.den() != 1) throw std::invalid_argument("u_shift: integral exponents required");
    QExp r(f.field(), 1, f.prec() / p);
    for (auto& [n, v] : f.coeffs())
        if (n % p == 0 && r.known(n / p)) r.set(n / p, v);
    return r;
}

QExp v_shift(const QExp& f, i64 p) {
    if (f.den() != 1) throw std::invalid_argument("v_shift: integral exponents required");
    QExp r(f.field(), 1, f.prec() * p);
    for (auto& [n, v] : f.coeffs()) r.set(n * p, v);
    return r;
}

i64 gamma0_index(i64 N) {
    i64 idx = N;
    for (auto [q, e] : factorize(N)) idx = idx / q * (q + 1);
    return idx;
}

i64 sturm_bound(int w, i64 N) {
    // ceil(w * index / 12) + 1
    i64 t = w * gamma0_index(N);
    return (t + 11) / 12 + 1;
}

std::vector<mpz_class> series_mul_serial(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, size_t P) {
    std::vector<mpz_class> c(P);
    std::vector<size_t> nz;
    for (size_t i = 0; i < std::min(a.size(), P); ++i)
        if (a[i] != 0) nz.push_back(i);
    for (size_t n = 0; n < P; ++n) {
        mpz_class& s = c[n];
        for (size_t i : nz) {
            if (i > n) break;
            size_t j = n - i;
            if (j < b.size()) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return c;
}

std::vector<mpz_class> series_mul_omp(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, size_t P) {
    std::vector<mpz_class> c(P);
    std::vector<size_t> nz;
    for (size_t i = 0; i < std::min(a.size(), P); ++i)
        if (a[i] != 0) nz.push_back(i);
    const long long NP = static_cast<long long>(P);
    // each output coefficient is an independent dot product; later ones are longer
#pragma omp parallel for schedule(dynamic, 32)
    for (long long n = 0; n < NP; ++n) {
        mpz_t s;
        mpz_init(s);
        for (size_t i : nz) {
            if (i > static_cast<size_t>(n)) break;
            size_t j = static_cast<size_t>(n) - i;
            if (j < b.size()) mpz_addmul(s, a[i].get_mpz_t(), b[j].get_mpz_t());
        }
        mpz_swap(c[n].get_mpz_t(), s);
        mpz_clear(s);
    }
    return c;
}

std::vector<mpz_class> series_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, size_t P) {
    if (P < 256 || omp_get_max_threads() == 1) return series_mul_serial(a, b, P);
    return series_mul_omp(a, b, P);
}

} // namespace hml
