#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hml/elliptic.hpp"
#include "hml/hermitian.hpp"
#include "hml/padic_ring.hpp"

namespace hml {

PadicScalar teichmuller(i64 d, const RingPtr& R); // throws DivisibleByP

// element of (Z/p^M)[T]/(T^deg), coefficients low first
struct PowerSeriesT {
    RingPtr R;
    std::vector<PadicScalar> c;
    // Horner on the truncation; *loss receives max(0, K - deg v(T)), the precision the
    // dropped tail can spoil (coefficients are p-integral)
    PadicScalar eval(const PadicScalar& T, int* loss = nullptr) const;
};

struct ASeries {
    i64 d = 1;
    mpz_class s;        // log<d>/log(1+p) modulo p^N
    PowerSeriesT A;     // omega(d)^-1 <d>^-1 (1+T)^s = d^-1 (1+T)^s
    PowerSeriesT Ak0;   // omega(d)^k0 A
};
// throws DivisibleByP; checks the interpolation property at k0, k0 + (p-1), k0 + 2(p-1)
ASeries a_d_series(i64 d, int k0, const RingPtr& R, int deg);
// A_d((1+p)^k - 1) minus omega(d)^-k d^(k-1); returns the valuation of the difference
int interpolation_valuation(const ASeries& a, int k, int* loss = nullptr);

// eigenform with coefficients a_0..a_{cap-1} in the Galois ring
struct PadicEigen {
    int weight = 0; // elliptic weight
    std::vector<PadicScalar> a;
    bool cm = false; // a_l = 0 at every inert l tested
    const PadicScalar& aD(i64 D) const { return a.at(D); }
};

// ordinary eigenforms of S_w(D, chi_{-D}) whose coefficients lie in R, via the p-saturated
// integral basis; sorted non-CM first, then by the residue of a_3
std::vector<PadicEigen> ordinary_eigenforms(int w, i64 D, i64 p, const RingPtr& R, i64 cap);
// images of an exact eigenform orbit under every embedding into R
std::vector<PadicEigen> embed_orbit(const Eigenform& h, const RingPtr& R, i64 cap);
// a_{ln} = a_l a_n - chi(l) l^(w-1) a_{n/l} for primes l < lmax, ln < cap
bool padic_hecke_holds(const PadicEigen& h, i64 D, i64 lmax);

struct BranchData {
    int k = 0; // Hermitian weight; the elliptic weight is k - 1
    PadicEigen h;
    std::vector<PadicScalar> hc, g, f, hal; // h^c, h - h^c, g - beta g(p tau), h - beta h(p tau)
    PadicScalar alpha, beta;
};

struct FamilySample {
    i64 D = 7, p = 11;
    int k0 = 6, M = 8;
    RingPtr R;
    PadicScalar z; // image of sqrt(-D)
    std::vector<int> weights;
    std::vector<BranchData> data;
    std::map<std::string, std::string> metadata;
    const BranchData& at(int k) const;
};

// unit root alpha of X^2 - a_p X + chi(p) p^(w-1), beta = a_p - alpha, and the derived expansions
BranchData stabilize_branch(const PadicEigen& h, int k, i64 D, i64 p);

// the unique candidate whose a_l agree with the anchor mod p for primes l <= bound, l not
// dividing pD; throws NoBranch / AmbiguousBranch
size_t branch_match(const std::vector<PadicEigen>& candidates, const PadicEigen& anchor, i64 D, i64 p, i64 bound);

struct FamilyOptions {
    i64 D = 7, p = 11;
    int k0 = 6, M = 8, f = 1;
    std::vector<int> weights{6, 16, 26};
    int anchor = 0;  // index into the ordinary list at weight k0 - 1
    int z_root = 0;  // which square root of -D in R
    i64 cap = 201;   // q-expansion length per weight
    i64 match_bound = 60;
};
FamilySample build_family(const FamilyOptions& opt);

struct TripleValue {
    PadicScalar direct, factored, bformula;
};
// a_n(f'_{k-1}) three ways; throws CrossCheckFailure
TripleValue family_b(const FamilySample& s, i64 n, int k);

// sum over d | eps(T), p not dividing d, of A_{k0,d}((1+p)^k - 1) B_{detD/d^2}, B_n = -z b_n / a_D(n)
PadicScalar lambda_assemble(const FamilySample& s, const std::map<i64, ASeries>& A, const QuadField& F, const HermIndex& T,
                            int k, int* loss = nullptr);
// the Maass lift of f' at weight k, evaluated by the templated hermitian code
HermForm<PadicScalar> direct_lift(const FamilySample& s, const QuadField& F, int k, i64 bound);

struct CongruenceRow {
    i64 n;
    int k1, k2;
    int valuation;     // of b_n(k1) - b_n(k2), M when equal
    int v;             // k1 = k2 mod (p-1) p^v
    bool higher;       // valuation >= v + 1 (recorded, not asserted)
};
std::vector<CongruenceRow> congruence_check(const FamilySample& s, const std::vector<i64>& ns, const std::vector<std::pair<int, int>>& pairs);

} // namespace hml
