#include "hml/padic_ring.hpp"

#include <sstream>

#include "hml/error.hpp"
#include "hml/poly.hpp"

namespace hml {

namespace {
i64 mulmod(i64 a, i64 b, i64 m) { return static_cast<i64>(static_cast<__int128>(a) * b % m); }
} // namespace

GaloisRing::GaloisRing(i64 p, int K, int f) : p_(p), K_(K), f_(f), m_(1) {
    if (!is_prime(p) || K < 1 || f < 1) throw std::invalid_argument("GaloisRing: bad parameters");
    for (int i = 0; i < K; ++i) {
        if (m_ > (i64(1) << 62) / p) throw std::overflow_error("GaloisRing: p^K exceeds 62 bits");
        m_ *= p;
    }
    auto ir = fp::first_irreducible(f, static_cast<fp::u64>(p));
    for (auto c : ir) mp_.push_back(static_cast<i64>(c));
}

RingPtr make_ring(i64 p, int K, int f) { return std::make_shared<const GaloisRing>(p, K, f); }

PadicScalar::PadicScalar(RingPtr R) : R_(std::move(R)), c_(R_->f(), 0) {}

PadicScalar::PadicScalar(RingPtr R, std::vector<i64> coords) : R_(std::move(R)), c_(std::move(coords)) {
    c_.resize(R_->f(), 0);
    for (auto& x : c_) x = mod(x, R_->modulus());
}

PadicScalar PadicScalar::from_int(RingPtr R, const mpz_class& n) {
    PadicScalar r(R);
    mpz_class t = n % R->modulus();
    if (t < 0) t += R->modulus();
    r.c_[0] = t.get_si();
    return r;
}

PadicScalar PadicScalar::from_mpq(RingPtr R, const mpq_class& q) {
    if (q.get_den() % R->p() == 0) throw DivisibleByP("denominator of " + q.get_str() + " is divisible by p");
    PadicScalar num = from_int(R, q.get_num()), den = from_int(R, q.get_den());
    return num * den.inv();
}

PadicScalar PadicScalar::gen(RingPtr R) {
    PadicScalar r(R);
    if (R->f() == 1) {
        // x = -m_0 in the degenerate case
        r.c_[0] = mod(-R->modpoly()[0], R->modulus());
    } else {
        r.c_[1] = 1;
    }
    return r;
}

bool PadicScalar::is_zero() const {
    for (auto x : c_)
        if (x) return false;
    return true;
}

bool PadicScalar::is_unit() const {
    for (auto x : c_)
        if (x % R_->p()) return true;
    return false;
}

int PadicScalar::valuation() const {
    int v = R_->K();
    for (auto x : c_)
        if (x) v = std::min(v, hml::valuation(x, R_->p()));
    return v;
}

bool PadicScalar::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

PadicScalar PadicScalar::operator-() const {
    PadicScalar r(*this);
    for (auto& x : r.c_) x = x ? R_->modulus() - x : 0;
    return r;
}

PadicScalar& PadicScalar::operator+=(const PadicScalar& o) {
    const i64 m = R_->modulus();
    for (size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
        if (c_[i] >= m) c_[i] -= m;
    }
    return *this;
}

PadicScalar& PadicScalar::operator-=(const PadicScalar& o) {
    const i64 m = R_->modulus();
    for (size_t i = 0; i < c_.size(); ++i) {
        c_[i] -= o.c_[i];
        if (c_[i] < 0) c_[i] += m;
    }
    return *this;
}

PadicScalar& PadicScalar::operator*=(const PadicScalar& o) {
    const i64 m = R_->modulus();
    const int f = R_->f();
    if (f == 1) {
        c_[0] = mulmod(c_[0], o.c_[0], m);
        return *this;
    }
    std::vector<i64> t(2 * f - 1, 0);
    for (int i = 0; i < f; ++i) {
        if (!c_[i]) continue;
        for (int j = 0; j < f; ++j) t[i + j] = (t[i + j] + mulmod(c_[i], o.c_[j], m)) % m;
    }
    const auto& mp = R_->modpoly();
    for (int d = 2 * f - 2; d >= f; --d) {
        if (!t[d]) continue;
        for (int j = 0; j < f; ++j) t[d - f + j] = mod(t[d - f + j] - mulmod(t[d], mp[j], m), m);
        t[d] = 0;
    }
    for (int i = 0; i < f; ++i) c_[i] = t[i];
    return *this;
}

PadicScalar PadicScalar::inv() const {
    if (!is_unit()) throw NotInvertible("non-unit p-adic scalar");
    const i64 p = R_->p();
    // inverse mod p: a^(q-2) in the residue field, q = p^f; computed by brute force for tiny fields
    PadicScalar x(R_);
    if (R_->f() == 1) {
        x.c_[0] = inv_mod(c_[0] % p, p);
    } else {
        mpz_class q = mpz_pow(p, R_->f());
        // residue field exponentiation with the ring itself, then reduce mod p
        PadicScalar r = pow(q - 2);
        for (int i = 0; i < R_->f(); ++i) x.c_[i] = r.c_[i] % p;
    }
    // Newton: x <- x (2 - a x), doubling precision
    PadicScalar two = from_int(R_, 2);
    for (int prec = 1; prec < R_->K(); prec *= 2) x = x * (two - *this * x);
    return x;
}

PadicScalar PadicScalar::pow(const mpz_class& e0) const {
    if (e0 < 0) return inv().pow(-e0);
    PadicScalar r = from_int(R_, 1), b = *this;
    mpz_class e = e0;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

PadicScalar PadicScalar::div_p_pow(int v) const {
    if (valuation() < v) throw NotInvertible("div_p_pow: valuation too small");
    PadicScalar r(R_);
    const i64 pv = ipow(R_->p(), v);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] / pv;
    return r;
}

PadicScalar PadicScalar::teichmuller() const {
    if (!is_unit()) throw DivisibleByP("teichmuller of a non-unit");
    mpz_class q = mpz_pow(R_->p(), R_->f());
    PadicScalar x = *this;
    for (int i = 0; i <= R_->K() + 1; ++i) {
        PadicScalar y = x.pow(q);
        if (y == x) return x;
        x = y;
    }
    return x;
}

std::vector<i64> PadicScalar::residue() const {
    std::vector<i64> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] % R_->p();
    return r;
}

std::string PadicScalar::str() const {
    std::ostringstream os;
    if (c_.size() == 1) {
        os << c_[0];
    } else {
        os << "[";
        for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
        os << "]";
    }
    return os.str();
}

PadicScalar operator+(PadicScalar a, const PadicScalar& b) { return a += b; }
PadicScalar operator-(PadicScalar a, const PadicScalar& b) { return a -= b; }
PadicScalar operator*(PadicScalar a, const PadicScalar& b) { return a *= b; }

int agree_val(const PadicScalar& a, const PadicScalar& b) { return (a - b).valuation(); }

namespace {
PadicScalar horner(const std::vector<PadicScalar>& f, const PadicScalar& x) {
    PadicScalar r(x.ring());
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}
} // namespace

std::vector<PadicScalar> simple_roots(const std::vector<PadicScalar>& f) {
    if (f.empty()) return {};
    const RingPtr& R = f[0].ring();
    const i64 p = R->p();
    const int fd = R->f();
    std::vector<PadicScalar> df;
    for (size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * PadicScalar::from_int(R, static_cast<long>(i)));
    // enumerate the residue field by digit vectors, then Newton
    i64 q = ipow(p, fd);
    std::vector<PadicScalar> out;
    for (i64 t = 0; t < q; ++t) {
        std::vector<i64> dig(fd);
        i64 s = t;
        for (int i = 0; i < fd; ++i) {
            dig[i] = s % p;
            s /= p;
        }
        PadicScalar x(R, dig);
        if (horner(f, x).valuation() == 0) continue;
        PadicScalar d = horner(df, x);
        if (!d.is_unit()) throw NotDiagonalizable("repeated root modulo p");
        for (int it = 0; it <= R->K() + 1; ++it) {
            PadicScalar fx = horner(f, x);
            if (fx.is_zero()) break;
            x -= fx * horner(df, x).inv();
        }
        out.push_back(x);
    }
    return out;
}

std::vector<int> unit_echelon(Mat<PadicScalar>& A) {
    std::vector<int> piv;
    if (A.empty()) return piv;
    const int rows = static_cast<int>(A.size()), cols = static_cast<int>(A[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (A[i][c].is_unit()) { p = i; break; }
        if (p < 0) continue;
        std::swap(A[r], A[p]);
        PadicScalar s = A[r][c].inv();
        for (int j = 0; j < cols; ++j) A[r][j] *= s;
        for (int i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            PadicScalar f = A[i][c];
            for (int j = 0; j < cols; ++j)
                if (!A[r][j].is_zero()) A[i][j] -= f * A[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

} // namespace hml
