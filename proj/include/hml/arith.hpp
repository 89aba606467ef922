#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hml {

using i64 = std::int64_t;

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);
i64 mod(i64 a, i64 m); // result in [0, m)
// returns (g, x, y) with a*x + b*y = g >= 0
struct EGcd { i64 g, x, y; };
EGcd egcd(i64 a, i64 b);
i64 inv_mod(i64 a, i64 m); // throws NotInvertible
i64 pow_mod(i64 b, i64 e, i64 m);
bool is_prime(i64 n);
std::vector<std::pair<i64, int>> factorize(i64 n); // n >= 1
std::vector<i64> divisors(i64 n);                  // sorted, n >= 1
i64 euler_phi(i64 n);
int kronecker(i64 a, i64 n); // Kronecker symbol (a|n)
i64 ipow(i64 b, int e);
int valuation(i64 n, i64 p); // n != 0

mpz_class mpz_pow(i64 b, unsigned e);
int valuation(const mpz_class& n, i64 p); // n != 0
// rational -> "num/den" or "num"
std::string to_string(const mpq_class& q);
mpq_class parse_rational(const std::string& s); // throws SchemaViolation
// a/b in lowest terms (the two-argument mpq_class ctor does not reduce)
inline mpq_class frac(const mpz_class& a, const mpz_class& b) {
    mpq_class q(a, b);
    q.canonicalize();
    return q;
}

// exact Bernoulli number B_n (B_1 = -1/2)
mpq_class bernoulli(int n);
// Bernoulli polynomial B_n(x)
mpq_class bernoulli_poly(int n, const mpq_class& x);

} // namespace hml
