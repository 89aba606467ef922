#pragma once

#include <utility>
#include <vector>

#include "hml/core_field.hpp"
#include "hml/embedding.hpp"
#include "hml/linalg.hpp"
#include "hml/qseries.hpp"

namespace hml {

struct Eigenform {
    i64 level = 0;
    int weight = 0;
    DirChar chi;
    FieldPtr field;
    QExp coeffs;
    NFElem aD; // coefficient at the prime D dividing the level
    NFElem a(i64 n) const { return coeffs.coeff(n); }
};

// one Eisenstein building block; kinds are listed in elliptic.cpp
struct EisGen {
    int kind = 0;
    int j = 0;
    bool operator==(const EisGen&) const = default;
};
using Recipe = std::vector<EisGen>;

struct SpaceBasis {
    int weight = 0;
    i64 level = 0;
    DirChar chi;
    i64 prec = 0;
    std::vector<QExp> basis; // M_w, reduced echelon over Q
    std::vector<QExp> cusp;  // S_w, reduced echelon over Q
    int dim = 0;
    int cusp_dim = 0;
    RatMatrix M_rows, S_rows;
    std::vector<int> M_piv, S_piv;
    std::vector<Recipe> recipes; // products spanning M_w
};

QExp eisenstein(int w, const DirChar& chi, const DirChar& psi, i64 prec); // throws ParityMismatch
// generalized Bernoulli number B_{k,chi}
mpq_class bernoulli_chi(int k, const DirChar& chi);
int dim_oracle(int w, i64 N, const DirChar& chi); // dim S_w(N, chi); throws UnsupportedWeight
int dim_eisenstein(int w, i64 N, const DirChar& chi);
SpaceBasis build_space(int w, i64 N, const DirChar& chi, i64 prec); // throws SaturationFailure
// re-evaluate the same space at a larger precision
SpaceBasis extend_space(const SpaceBasis& S, i64 prec);
// T_l on the cusp rows: T_l(b_i) = sum_j A[i][j] b_j
RatMatrix hecke_matrix(const SpaceBasis& S, i64 l);
// coordinates of f (rational) in the cusp basis; throws NotInSpan
std::vector<mpq_class> cusp_coords(const SpaceBasis& S, const std::vector<mpq_class>& f);

// one eigenform per Galois orbit, coefficient field Q[x]/(factor)
std::vector<Eigenform> eigen_decompose(const SpaceBasis& S, const std::vector<i64>& primes);
// the same orbits evaluated at a higher precision (requires S of matching weight/level)
Eigenform reexpand(const Eigenform& h, const SpaceBasis& S);
Eigenform conjugate_form(const Eigenform& h, const QuadField& F); // throws NotNewform
bool is_plus(const QExp& f, i64 level, int weight, const QuadField& F); // throws InsufficientPrecision
std::vector<QExp> plus_basis(const SpaceBasis& S, const QuadField& F);
bool euler_recursion_holds(const Eigenform& h, i64 upto);
bool hecke_eigen_holds(const Eigenform& h, i64 upto);

// coefficients a_0 .. a_{n-1} as elements of F (or as images under an embedding)
std::vector<NFElem> coeff_vector(const QExp& f, const FieldPtr& F, i64 n);
std::vector<PadicScalar> coeff_vector(const QExp& f, const TowerEmbedding& emb, i64 n);
// F(sqrt(-D)) with generator "z"; sqrt(-D) = i sqrt(D) is fixed by the cyclotomic model
FieldPtr with_sqrt_minus_D(const FieldPtr& F, i64 D);

// adjoin a square root of d (in the top field) as generator var
FieldPtr adjoin_sqrt(const FieldPtr& base, const NFElem& d, const std::string& var);

struct Stabilized {
    FieldPtr field; // K(y), y^2 = a_p^2 - 4 chi(p) p^(w-1)
    NFElem alpha, beta;
    QExp g; // h - h^c
    QExp f; // g - beta g(p tau)
};
// embedding must already carry the field of h; y is embedded so that alpha is the unit root
Stabilized p_stabilize(const Eigenform& h, i64 p, TowerEmbedding& emb, const QuadField& F); // throws NotOrdinary
// f = sum lambda_i g_i + mu_i g_i(p tau); throws NotInSpan
std::pair<std::vector<NFElem>, std::vector<NFElem>> decompose_p_old(const QExp& f, const std::vector<QExp>& g, i64 p);

} // namespace hml
