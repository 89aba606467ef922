#include "hml/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hml/arith.hpp"
#include "hml/error.hpp"

namespace hml {
namespace poly {

void trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly scale(const QPoly& a, const mpq_class& s) {
    QPoly r(a);
    for (auto& c : r) c *= s;
    trim(r);
    return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    r = a;
    trim(r);
    int db = degree(b);
    q.assign(std::max(0, degree(r) - db + 1), 0);
    mpq_class lead_inv = 1 / b.back();
    while (degree(r) >= db) {
        int shift = degree(r) - db;
        mpq_class t = r.back() * lead_inv;
        q[shift] = t;
        for (int i = 0; i <= db; ++i) r[shift + i] -= t * b[i];
        trim(r);
    }
    trim(q);
}

QPoly rem(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    divmod(a, b, q, r);
    return r;
}

QPoly monic(const QPoly& f) {
    if (f.empty()) return f;
    return scale(f, 1 / f.back());
}

QPoly gcd(const QPoly& a0, const QPoly& b0) {
    QPoly a = a0, b = b0;
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = rem(a, b);
        a = std::move(b);
        b = monic(r); // keeps coefficient growth in check
    }
    return monic(a);
}

QPoly derivative(const QPoly& f) {
    QPoly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<long>(i));
    trim(r);
    return r;
}

mpq_class eval(const QPoly& f, const mpq_class& x) {
    mpq_class r = 0;
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

bool is_squarefree(const QPoly& f) { return degree(gcd(f, derivative(f))) == 0; }

QPoly to_q(const ZPoly& f) {
    QPoly r(f.begin(), f.end());
    trim(r);
    return r;
}

ZPoly to_z_monic(const QPoly& f) {
    if (f.empty() || f.back() != 1) throw std::domain_error("polynomial is not monic");
    ZPoly r;
    for (const auto& c : f) {
        if (c.get_den() != 1) throw std::domain_error("polynomial is not integral");
        r.push_back(c.get_num());
    }
    return r;
}

namespace {

using fp::u64;

mpz_class smod(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

ZPoly zmod(const ZPoly& a, const mpz_class& m) {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] % m;
        if (r[i] < 0) r[i] += m;
    }
    trim(r);
    return r;
}

fp::Poly to_fp(const ZPoly& a, u64 q) {
    fp::Poly r(a.size());
    mpz_class Q(static_cast<unsigned long>(q));
    for (size_t i = 0; i < a.size(); ++i) {
        mpz_class t = a[i] % Q;
        if (t < 0) t += Q;
        r[i] = t.get_ui();
    }
    fp::trim(r);
    return r;
}

ZPoly from_fp(const fp::Poly& a) {
    ZPoly r;
    for (u64 c : a) r.push_back(mpz_class(static_cast<unsigned long>(c)));
    return r;
}

// monic exact division over Z; returns false if b does not divide a
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& quo) {
    ZPoly r = a;
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    if (da < db) return false;
    quo.assign(da - db + 1, 0);
    for (int s = da - db; s >= 0; --s) {
        mpz_class t = r[s + db]; // b monic
        quo[s] = t;
        if (t != 0)
            for (int i = 0; i <= db; ++i) r[s + i] -= t * b[i];
    }
    for (int i = 0; i < db; ++i)
        if (r[i] != 0) return false;
    return true;
}

// linear Hensel lifting of f = g*h (mod q) to modulus q^a; all monic
void hensel_pair(const ZPoly& f, fp::Poly g0, fp::Poly h0, u64 q, int a, ZPoly& g, ZPoly& h) {
    fp::Poly s, t, gg;
    fp::ext_gcd(g0, h0, q, s, t, gg);
    if (fp::degree(gg) != 0) throw std::logic_error("hensel: factors not coprime");
    g = from_fp(g0);
    h = from_fp(h0);
    mpz_class Q(static_cast<unsigned long>(q)), qj = Q;
    for (int j = 1; j < a; ++j) {
        mpz_class next = qj * Q;
        ZPoly e = f;
        ZPoly gh = zmul(g, h);
        e.resize(std::max(e.size(), gh.size()), 0);
        for (size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
        trim(e);
        ZPoly ed = e;
        for (auto& c : ed) {
            c = c % next;
            if (c < 0) c += next;
            if (c % qj != 0) throw std::logic_error("hensel: invariant broken");
            c /= qj;
        }
        fp::Poly ebar = to_fp(ed, q);
        fp::Poly G = fp::rem(fp::mul(t, ebar, q), g0, q);
        fp::Poly H = fp::rem(fp::mul(s, ebar, q), h0, q);
        for (size_t i = 0; i < G.size(); ++i) g[i] += qj * static_cast<unsigned long>(G[i]);
        for (size_t i = 0; i < H.size(); ++i) h[i] += qj * static_cast<unsigned long>(H[i]);
        g = zmod(g, next);
        h = zmod(h, next);
        qj = next;
    }
}

void hensel_multi(const ZPoly& f, const std::vector<fp::Poly>& facs, u64 q, int a, std::vector<ZPoly>& out) {
    if (facs.size() == 1) {
        out.push_back(zmod(f, mpz_pow(static_cast<i64>(q), a)));
        return;
    }
    size_t half = facs.size() / 2;
    fp::Poly g0{1}, h0{1};
    for (size_t i = 0; i < half; ++i) g0 = fp::mul(g0, facs[i], q);
    for (size_t i = half; i < facs.size(); ++i) h0 = fp::mul(h0, facs[i], q);
    ZPoly g, h;
    hensel_pair(f, g0, h0, q, a, g, h);
    std::vector<fp::Poly> left(facs.begin(), facs.begin() + half), right(facs.begin() + half, facs.end());
    hensel_multi(g, left, q, a, out);
    hensel_multi(h, right, q, a, out);
}

bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool zless(const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

} // namespace

std::vector<ZPoly> factor_squarefree_monic(const ZPoly& f0) {
    ZPoly f = f0;
    trim(f);
    if (f.empty() || f.back() != 1) throw std::domain_error("factor: input must be monic");
    std::vector<ZPoly> result;
    // strip factors of x
    while (f.size() > 1 && f[0] == 0) {
        result.push_back({0, 1});
        f.erase(f.begin());
    }
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) {
        if (n == 1) result.push_back(f);
        std::sort(result.begin(), result.end(), zless);
        return result;
    }
    // choose the prime with fewest modular factors among a few candidates
    u64 best_q = 0;
    std::vector<fp::Poly> best;
    int tried = 0;
    for (u64 q = 3; tried < 6 && q < 2000; q += 2) {
        if (!is_prime(static_cast<i64>(q))) continue;
        fp::Poly fb = to_fp(f, q);
        if (fp::degree(fb) != n) continue;
        if (fp::degree(fp::gcd(fb, fp::derivative(fb, q), q)) != 0) continue;
        ++tried;
        auto facs = fp::factor_squarefree(fb, q, q);
        if (best_q == 0 || facs.size() < best.size()) {
            best_q = q;
            best = facs;
        }
        if (best.size() == 1) break;
    }
    if (best_q == 0) throw std::runtime_error("factor: no good prime found");
    if (best.size() == 1) {
        result.push_back(f);
        std::sort(result.begin(), result.end(), zless);
        return result;
    }
    // coefficient bound for monic factors: 2^n * ||f||_2
    mpz_class norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    mpz_class bound = sqrt(norm2) + 1;
    bound <<= n;
    mpz_class Q(static_cast<unsigned long>(best_q)), qa = 1;
    int a = 0;
    while (qa <= 2 * bound) {
        qa *= Q;
        ++a;
    }
    std::vector<ZPoly> lifted;
    hensel_multi(f, best, best_q, a, lifted);

    // recombination
    int s = 1;
    while (2 * s <= static_cast<int>(lifted.size())) {
        bool found = false;
        int r = static_cast<int>(lifted.size());
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        do {
            ZPoly g{1};
            for (int i : idx) g = zmod(zmul(g, lifted[i]), qa);
            for (auto& c : g) c = smod(c, qa);
            ZPoly quo;
            if (zdivides(f, g, quo)) {
                result.push_back(g);
                f = quo;
                for (int i = s - 1; i >= 0; --i) lifted.erase(lifted.begin() + idx[i]);
                found = true;
                break;
            }
        } while (next_combination(idx, r));
        if (!found) ++s;
    }
    if (f.size() > 1) result.push_back(f);
    std::sort(result.begin(), result.end(), zless);
    return result;
}

} // namespace poly

namespace fp {

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

u64 inv(u64 a, u64 q) { return static_cast<u64>(inv_mod(static_cast<i64>(a), static_cast<i64>(q))); }

Poly add(const Poly& a, const Poly& b, u64 q) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % q;
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, u64 q) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + q - b[i]) % q;
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, u64 q) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
    }
    trim(r);
    return r;
}

Poly scale(const Poly& a, u64 s, u64 q) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s % q;
    trim(r);
    return r;
}

void divmod(const Poly& a, const Poly& b, u64 q, Poly& quo, Poly& r) {
    if (b.empty()) throw std::domain_error("fp division by zero");
    r = a;
    trim(r);
    int db = degree(b);
    quo.assign(std::max(0, degree(r) - db + 1), 0);
    u64 li = inv(b.back(), q);
    while (degree(r) >= db) {
        int shift = degree(r) - db;
        u64 t = r.back() * li % q;
        quo[shift] = t;
        for (int i = 0; i <= db; ++i) r[shift + i] = (r[shift + i] + q - t * b[i] % q) % q;
        trim(r);
    }
    trim(quo);
}

Poly rem(const Poly& a, const Poly& b, u64 q) {
    Poly quo, r;
    divmod(a, b, q, quo, r);
    return r;
}

Poly monic(const Poly& f, u64 q) {
    if (f.empty()) return f;
    return scale(f, inv(f.back(), q), q);
}

Poly gcd(const Poly& a0, const Poly& b0, u64 q) {
    Poly a = a0, b = b0;
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, q);
}

void ext_gcd(const Poly& a, const Poly& b, u64 q, Poly& s, Poly& t, Poly& g) {
    Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        Poly quo, r;
        divmod(r0, r1, q, quo, r);
        Poly s2 = sub(s0, mul(quo, s1, q), q);
        Poly t2 = sub(t0, mul(quo, t1, q), q);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    u64 li = r0.empty() ? 1 : inv(r0.back(), q);
    g = scale(r0, li, q);
    s = scale(s0, li, q);
    t = scale(t0, li, q);
}

Poly powmod(const Poly& base, mpz_class e, const Poly& m, u64 q) {
    Poly r{1}, b = rem(base, m, q);
    r = rem(r, m, q);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, b, q), m, q);
        b = rem(mul(b, b, q), m, q);
        e >>= 1;
    }
    return r;
}

Poly derivative(const Poly& f, u64 q) {
    Poly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * (i % q) % q);
    trim(r);
    return r;
}

namespace {

void equal_degree(const Poly& g, int d, u64 q, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (degree(g) == d) {
        out.push_back(g);
        return;
    }
    mpz_class qd = mpz_pow(static_cast<i64>(q), d);
    mpz_class e = (qd - 1) / 2;
    for (;;) {
        Poly a(degree(g));
        for (auto& c : a) c = rng() % q;
        trim(a);
        if (degree(a) < 1) continue;
        Poly b = sub(powmod(a, e, g, q), Poly{1}, q);
        Poly h = gcd(g, b, q);
        if (degree(h) > 0 && degree(h) < degree(g)) {
            Poly quo, r;
            divmod(g, h, q, quo, r);
            equal_degree(h, d, q, rng, out);
            equal_degree(monic(quo, q), d, q, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<Poly> factor_squarefree(const Poly& f0, u64 q, std::uint64_t seed) {
    Poly f = monic(f0, q);
    std::vector<Poly> out;
    std::mt19937_64 rng(seed);
    Poly x{0, 1};
    Poly h = x;
    int d = 0;
    while (degree(f) >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, mpz_class(static_cast<unsigned long>(q)), f, q);
        Poly g = gcd(f, sub(h, x, q), q);
        if (degree(g) > 0) {
            equal_degree(g, d, q, rng, out);
            Poly quo, r;
            divmod(f, g, q, quo, r);
            f = monic(quo, q);
            h = rem(h, f, q);
        }
    }
    if (degree(f) > 0) out.push_back(f);
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

bool is_irreducible(const Poly& f, u64 q) {
    int n = degree(f);
    if (n <= 0) return false;
    Poly x{0, 1}, h = x;
    for (int i = 1; i <= n / 2; ++i) {
        h = powmod(h, mpz_class(static_cast<unsigned long>(q)), f, q);
        if (degree(gcd(f, sub(h, x, q), q)) > 0) return false;
    }
    return true;
}

Poly first_irreducible(int d, u64 q) {
    if (d == 1) return {0, 1};
    // enumerate monic polynomials in lexicographic order of (c_{d-1}, ..., c_0)
    Poly f(d + 1, 0);
    f[d] = 1;
    for (;;) {
        if (is_irreducible(f, q)) return f;
        int i = 0;
        while (i < d) {
            if (++f[i] < q) break;
            f[i] = 0;
            ++i;
        }
        if (i == d) throw std::logic_error("no irreducible polynomial found");
    }
}

} // namespace fp
} // namespace hml
