#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace hml {

// dense polynomials, coefficient i multiplies x^i, trailing zeros trimmed
using QPoly = std::vector<mpq_class>;
using ZPoly = std::vector<mpz_class>;

namespace poly {

void trim(QPoly& f);
void trim(ZPoly& f);
int degree(const QPoly& f); // -1 for zero
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& s);
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly gcd(const QPoly& a, const QPoly& b); // monic, or zero
QPoly derivative(const QPoly& f);
QPoly monic(const QPoly& f);
mpq_class eval(const QPoly& f, const mpq_class& x);
bool is_squarefree(const QPoly& f);

QPoly to_q(const ZPoly& f);
// monic f with integer coefficients; throws if not integral
ZPoly to_z_monic(const QPoly& f);

// irreducible monic factors over Q of a monic squarefree integer polynomial,
// sorted by (degree, coefficients)
std::vector<ZPoly> factor_squarefree_monic(const ZPoly& f);

} // namespace poly

// polynomials over F_q for small primes q (values in [0, q))
namespace fp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;

void trim(Poly& f);
int degree(const Poly& f);
Poly add(const Poly& a, const Poly& b, u64 q);
Poly sub(const Poly& a, const Poly& b, u64 q);
Poly mul(const Poly& a, const Poly& b, u64 q);
Poly scale(const Poly& a, u64 s, u64 q);
void divmod(const Poly& a, const Poly& b, u64 q, Poly& quo, Poly& r);
Poly rem(const Poly& a, const Poly& b, u64 q);
Poly gcd(const Poly& a, const Poly& b, u64 q); // monic
Poly monic(const Poly& f, u64 q);
Poly powmod(const Poly& base, mpz_class e, const Poly& m, u64 q);
Poly derivative(const Poly& f, u64 q);
// s*a + t*b = 1 when gcd is 1
void ext_gcd(const Poly& a, const Poly& b, u64 q, Poly& s, Poly& t, Poly& g);
u64 inv(u64 a, u64 q);
// monic irreducible factors of a squarefree monic polynomial
std::vector<Poly> factor_squarefree(const Poly& f, u64 q, std::uint64_t seed = 1);
bool is_irreducible(const Poly& f, u64 q);
// lexicographically first monic irreducible polynomial of degree d
Poly first_irreducible(int d, u64 q);

} // namespace fp

} // namespace hml
