#include "hml/cyclo.hpp"

#include <cmath>
#include <sstream>

#include "hml/error.hpp"

namespace hml {

std::vector<CycloNum::Axis> CycloNum::axes_of(i64 n) {
    std::vector<Axis> ax;
    for (auto [q, e] : factorize(n)) {
        i64 pe = ipow(q, e);
        ax.push_back({q, e, pe, pe / q * (q - 1)});
    }
    return ax;
}

CycloNum::CycloNum() = default;

CycloNum::CycloNum(const mpq_class& q) : n_(1), c_{q} {}

CycloNum CycloNum::root(i64 n, i64 j) {
    if (n <= 0) throw std::invalid_argument("root: conductor must be positive");
    std::vector<i64> counts(n, 0);
    counts[mod(j, n)] = 1;
    return from_counts(n, counts);
}

CycloNum CycloNum::e(const mpq_class& x) {
    mpz_class num = x.get_num(), den = x.get_den();
    if (!den.fits_slong_p()) throw std::overflow_error("e[x]: denominator too large");
    i64 n = den.get_si();
    mpz_class r = num % den;
    return root(n, r.get_si());
}

CycloNum CycloNum::from_counts(i64 n, const std::vector<i64>& counts) { return reduce_counts(n, &counts, nullptr); }

CycloNum CycloNum::from_group_ring(i64 n, const std::vector<mpq_class>& coeffs) {
    return reduce_counts(n, nullptr, &coeffs);
}

// ic (integer) or qc (rational) holds coefficients of zeta_n^j
CycloNum CycloNum::reduce_counts(i64 n, const std::vector<i64>* ic, const std::vector<mpq_class>* qc) {
    auto ax = axes_of(n);
    const size_t na = ax.size();
    std::vector<i64> cq(na), stride(na);
    i64 size = 1;
    for (size_t k = na; k-- > 0;) {
        stride[k] = size;
        size *= ax[k].phi;
    }
    for (size_t k = 0; k < na; ++k) cq[k] = inv_mod(n / ax[k].pe, ax[k].pe);

    std::vector<i64> iacc(ic ? size : 0, 0);
    std::vector<mpq_class> qacc(qc ? size : 0);
    // per axis, the expansion of a raw exponent into power-basis terms
    std::vector<std::vector<std::pair<i64, int>>> terms(na);
    std::vector<size_t> pos(na);
    for (i64 j = 0; j < n; ++j) {
        if (ic && (*ic)[j] == 0) continue;
        if (qc && (*qc)[j] == 0) continue;
        for (size_t k = 0; k < na; ++k) {
            const Axis& a = ax[k];
            i64 i = mod(static_cast<i64>((static_cast<__int128>(j) * cq[k]) % a.pe), a.pe);
            terms[k].clear();
            if (i < a.phi) {
                terms[k].push_back({i, 1});
            } else {
                i64 r = i - a.phi, step = a.pe / a.q;
                for (i64 t = 0; t + 1 < a.q; ++t) terms[k].push_back({r + t * step, -1});
            }
        }
        std::fill(pos.begin(), pos.end(), 0);
        bool done = false;
        while (!done) {
            i64 flat = 0;
            int sign = 1;
            for (size_t k = 0; k < na; ++k) {
                flat += terms[k][pos[k]].first * stride[k];
                sign *= terms[k][pos[k]].second;
            }
            if (ic) iacc[flat] += sign * (*ic)[j];
            else if (sign > 0) qacc[flat] += (*qc)[j];
            else qacc[flat] -= (*qc)[j];
            // odometer over the per-axis expansions
            size_t k = na;
            while (true) {
                if (k == 0) { done = true; break; }
                --k;
                if (++pos[k] < terms[k].size()) break;
                pos[k] = 0;
            }
        }
    }
    CycloNum r;
    r.n_ = n;
    if (ic) {
        r.c_.resize(size);
        for (i64 t = 0; t < size; ++t) r.c_[t] = iacc[t];
    } else {
        r.c_ = std::move(qacc);
    }
    if (na == 0 && r.c_.empty()) r.c_.assign(1, 0);
    r.normalize();
    return r;
}

void CycloNum::normalize() {
    if (is_zero()) {
        n_ = 1;
        c_.assign(1, 0);
        return;
    }
    bool changed = true;
    while (changed && n_ > 1) {
        changed = false;
        auto ax = axes_of(n_);
        const size_t na = ax.size();
        std::vector<i64> stride(na);
        i64 size = 1;
        for (size_t k = na; k-- > 0;) {
            stride[k] = size;
            size *= ax[k].phi;
        }
        for (size_t k = 0; k < na && !changed; ++k) {
            const Axis& a = ax[k];
            bool ok = true;
            for (i64 t = 0; t < size && ok; ++t) {
                if (c_[t] == 0) continue;
                i64 i = (t / stride[k]) % a.phi;
                if (a.e >= 2 ? (i % a.q != 0) : (i != 0)) ok = false;
            }
            if (!ok) continue;
            // shrink axis k
            i64 new_phi = a.e >= 2 ? a.phi / a.q : 1;
            i64 new_n = n_ / a.q;
            std::vector<i64> nstride(na);
            i64 nsize = 1;
            for (size_t m = na; m-- > 0;) {
                nstride[m] = nsize;
                nsize *= (m == k ? new_phi : ax[m].phi);
            }
            std::vector<mpq_class> nc(nsize);
            for (i64 t = 0; t < size; ++t) {
                if (c_[t] == 0) continue;
                i64 flat = 0;
                for (size_t m = 0; m < na; ++m) {
                    i64 i = (t / stride[m]) % ax[m].phi;
                    if (m == k) i = a.e >= 2 ? i / a.q : 0;
                    flat += i * nstride[m];
                }
                nc[flat] = c_[t];
            }
            c_ = std::move(nc);
            n_ = new_n;
            changed = true;
        }
    }
}

bool CycloNum::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

mpq_class CycloNum::rational_value() const {
    if (n_ != 1) throw std::logic_error("rational_value: not rational");
    return c_[0];
}

std::vector<mpq_class> CycloNum::group_ring(i64 m) const {
    if (m % n_ != 0) throw std::invalid_argument("group_ring: target conductor must be a multiple");
    std::vector<mpq_class> g(m);
    auto ax = axes_of(n_);
    const size_t na = ax.size();
    std::vector<i64> stride(na);
    i64 size = 1;
    for (size_t k = na; k-- > 0;) {
        stride[k] = size;
        size *= ax[k].phi;
    }
    for (i64 t = 0; t < static_cast<i64>(c_.size()); ++t) {
        if (c_[t] == 0) continue;
        i64 j = 0;
        for (size_t k = 0; k < na; ++k) {
            i64 i = (t / stride[k]) % ax[k].phi;
            j = (j + i * (m / ax[k].pe)) % m;
        }
        g[j] += c_[t];
    }
    return g;
}

CycloNum CycloNum::embed_in(i64 m) const {
    // raw tensor at conductor m without normalization
    auto ax = axes_of(m);
    auto mine = axes_of(n_);
    const size_t na = ax.size();
    std::vector<i64> stride(na);
    i64 size = 1;
    for (size_t k = na; k-- > 0;) {
        stride[k] = size;
        size *= ax[k].phi;
    }
    std::vector<i64> mstride(mine.size());
    i64 msize = 1;
    for (size_t k = mine.size(); k-- > 0;) {
        mstride[k] = msize;
        msize *= mine[k].phi;
    }
    CycloNum r;
    r.n_ = m;
    r.c_.assign(size, 0);
    for (i64 t = 0; t < msize; ++t) {
        if (c_[t] == 0) continue;
        i64 flat = 0;
        for (size_t k = 0; k < na; ++k) {
            i64 i = 0;
            for (size_t s = 0; s < mine.size(); ++s)
                if (mine[s].q == ax[k].q) i = ((t / mstride[s]) % mine[s].phi) * (ax[k].pe / mine[s].pe);
            flat += i * stride[k];
        }
        r.c_[flat] = c_[t];
    }
    return r;
}

CycloNum CycloNum::operator-() const {
    CycloNum r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    if (n_ == o.n_) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    } else {
        i64 L = lcm(n_, o.n_);
        CycloNum a = embed_in(L), b = o.embed_in(L);
        for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        *this = std::move(a);
    }
    normalize();
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum& CycloNum::operator*=(const mpq_class& q) {
    for (auto& c : c_) c *= q;
    if (q == 0) normalize();
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    if (o.is_rational()) return *this *= o.c_[0];
    if (is_rational()) {
        mpq_class s = c_[0];
        *this = o;
        return *this *= s;
    }
    i64 L = lcm(n_, o.n_);
    auto a = group_ring(L), b = o.group_ring(L);
    std::vector<std::pair<i64, const mpq_class*>> sb;
    for (i64 j = 0; j < L; ++j)
        if (b[j] != 0) sb.push_back({j, &b[j]});
    std::vector<mpq_class> prod(L);
    for (i64 i = 0; i < L; ++i) {
        if (a[i] == 0) continue;
        for (auto& [j, v] : sb) {
            i64 t = i + j;
            if (t >= L) t -= L;
            prod[t] += a[i] * *v;
        }
    }
    *this = from_group_ring(L, prod);
    return *this;
}

CycloNum CycloNum::inv() const {
    if (is_zero()) throw NotInvertible("cyclotomic zero");
    if (is_rational()) return CycloNum(1 / c_[0]);
    const i64 sz = static_cast<i64>(c_.size());
    RatMatrix M(sz, std::vector<mpq_class>(sz));
    for (i64 k = 0; k < sz; ++k) {
        CycloNum ek;
        ek.n_ = n_;
        ek.c_.assign(sz, 0);
        ek.c_[k] = 1;
        CycloNum col = *this * ek;
        auto cc = col.embed_in(n_).c_;
        for (i64 i = 0; i < sz; ++i) M[i][k] = cc[i];
    }
    std::vector<mpq_class> rhs(sz), x;
    rhs[0] = 1;
    if (!solve_rational(M, rhs, x)) throw NotInvertible("cyclotomic element");
    CycloNum r;
    r.n_ = n_;
    r.c_ = std::move(x);
    r.normalize();
    return r;
}

CycloNum CycloNum::conj() const {
    if (is_rational()) return *this;
    auto g = group_ring(n_);
    std::vector<mpq_class> h(n_);
    for (i64 j = 0; j < n_; ++j) h[mod(-j, n_)] = g[j];
    return from_group_ring(n_, h);
}

std::complex<double> CycloNum::embed() const {
    auto g = group_ring(n_);
    std::complex<double> s = 0;
    const double two_pi = 2 * std::acos(-1.0);
    for (i64 j = 0; j < n_; ++j)
        if (g[j] != 0) s += g[j].get_d() * std::polar(1.0, two_pi * static_cast<double>(j) / static_cast<double>(n_));
    return s;
}

std::string CycloNum::str() const {
    std::ostringstream os;
    os << "Q(z" << n_ << ")[";
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].get_str();
    os << "]";
    return os.str();
}

CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
CycloNum operator*(CycloNum a, const mpq_class& q) { return a *= q; }
CycloNum operator*(const mpq_class& q, CycloNum a) { return a *= q; }

} // namespace hml
