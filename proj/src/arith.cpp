#include "hml/arith.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>

#include "hml/error.hpp"

namespace hml {

i64 gcd(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 lcm(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    i64 r = a / gcd(a, b) * b;
    return r < 0 ? -r : r;
}

i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

EGcd egcd(i64 a, i64 b) {
    i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        i64 q = a / b, t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) return {-a, -x0, -y0};
    return {a, x0, y0};
}

i64 inv_mod(i64 a, i64 m) {
    auto e = egcd(mod(a, m), m);
    if (e.g != 1) throw NotInvertible(std::to_string(a) + " mod " + std::to_string(m));
    return mod(e.x, m);
}

i64 pow_mod(i64 b, i64 e, i64 m) {
    __int128 r = 1 % m, x = mod(b, m);
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<i64>(r);
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    if (n < 0) n = -n;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.push_back({d, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> small, large;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

i64 euler_phi(i64 n) {
    i64 r = n;
    for (auto [q, e] : factorize(n)) r = r / q * (q - 1);
    return r;
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int res = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) res = -res;
    }
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        i64 r = mod(a, 8);
        if (r == 3 || r == 5) res = -res;
    }
    // Jacobi symbol (a|n), n odd positive
    a = mod(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) res = -res;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) res = -res;
        a %= n;
    }
    return n == 1 ? res : 0;
}

i64 ipow(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

int valuation(i64 n, i64 p) {
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

mpz_class mpz_pow(i64 b, unsigned e) {
    mpz_class r;
    mpz_class base(static_cast<long>(b));
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

int valuation(const mpz_class& n, i64 p) {
    mpz_class m = n, P(static_cast<long>(p));
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), P.get_mpz_t())) {
        m /= P;
        ++v;
    }
    return v;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw SchemaViolation("empty rational");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw SchemaViolation("bad rational '" + s + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw SchemaViolation("bad rational '" + s + "'");
    if (q.get_den() == 0) throw SchemaViolation("zero denominator");
    q.canonicalize();
    return q;
}

mpq_class bernoulli(int n) {
    static std::mutex mu;
    static std::vector<mpq_class> cache{mpq_class(1)};
    std::lock_guard<std::mutex> lock(mu);
    // B_m = -1/(m+1) sum_{j<m} binom(m+1, j) B_j
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        mpq_class s = 0;
        mpz_class binom = 1; // binom(m+1, j)
        for (int j = 0; j < m; ++j) {
            s += binom * cache[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        cache.push_back(-s / (m + 1));
    }
    return cache[n];
}

mpq_class bernoulli_poly(int n, const mpq_class& x) {
    mpq_class s = 0, xp = 1;
    mpz_class binom = 1; // binom(n, j) paired with B_{n-j} x^j
    for (int j = 0; j <= n; ++j) {
        s += binom * bernoulli(n - j) * xp;
        xp *= x;
        binom = binom * (n - j) / (j + 1);
    }
    return s;
}

} // namespace hml
