#include "hml/elliptic.hpp"

#include <algorithm>
#include <map>

#include "hml/error.hpp"
#include "hml/poly.hpp"

namespace hml {

// ---------------------------------------------------------------- Eisenstein series

mpq_class bernoulli_chi(int k, const DirChar& chi) {
    if (chi.is_trivial()) return k == 1 ? mpq_class(1, 2) : bernoulli(k);
    const i64 f = chi.modulus;
    mpq_class s = 0;
    for (i64 a = 1; a <= f; ++a)
        if (chi(a)) s += chi(a) * bernoulli_poly(k, frac(a, f));
    return s * mpq_class(mpz_pow(f, k - 1));
}

namespace {

std::vector<mpq_class> eisenstein_dense(int w, const DirChar& chi, const DirChar& psi, i64 P) {
    if (chi(-1) * psi(-1) != (w % 2 ? -1 : 1))
        throw ParityMismatch("chi*psi(-1) does not match (-1)^" + std::to_string(w));
    std::vector<mpq_class> a(P);
    if (P == 0) return a;
    if (chi.is_trivial()) a[0] = -bernoulli_chi(w, psi) / (2 * w);
    else if (psi.is_trivial() && w == 1) a[0] = -bernoulli_chi(1, chi) / 2;
    // divisor sums by a sieve over d
    std::vector<mpz_class> s(P);
    for (i64 d = 1; d < P; ++d) {
        int pd = psi(d);
        if (!pd) continue;
        mpz_class dw = mpz_pow(d, w - 1) * pd;
        for (i64 n = d; n < P; n += d) {
            int c = chi(n / d);
            if (c == 1) s[n] += dw;
            else if (c == -1) s[n] -= dw;
        }
    }
    for (i64 n = 1; n < P; ++n) a[n] = s[n];
    return a;
}

// Building blocks for level N prime and the quadratic character chi of conductor N:
//   0: E_j(1, chi)   1: E_j(chi, 1)   2: E_j(1, 1)   3: E_j(1, 1)(N tau)   4: E_2 - N E_2(N tau)
std::vector<mpq_class> gen_dense(const EisGen& g, i64 N, const DirChar& chi, i64 P) {
    DirChar one = DirChar::trivial();
    switch (g.kind) {
    case 0: return eisenstein_dense(g.j, one, chi, P);
    case 1: return eisenstein_dense(g.j, chi, one, P);
    case 2: return eisenstein_dense(g.j, one, one, P);
    case 3: {
        auto e = eisenstein_dense(g.j, one, one, (P + N - 1) / N);
        std::vector<mpq_class> r(P);
        for (size_t n = 0; n < e.size(); ++n) r[n * N] = e[n];
        return r;
    }
    case 4: {
        auto e = eisenstein_dense(2, one, one, P);
        std::vector<mpq_class> r(e);
        for (i64 n = 0; n * N < P; ++n) r[n * N] -= N * e[n];
        return r;
    }
    }
    throw std::logic_error("unknown Eisenstein block");
}

std::vector<EisGen> gens_of_weight(int j, bool chi_class) {
    std::vector<EisGen> out;
    if (chi_class) {
        if (j % 2 == 1) {
            out.push_back({0, j});
            if (j >= 3) out.push_back({1, j});
        }
    } else if (j % 2 == 0) {
        if (j == 2) out.push_back({4, 2});
        else if (j >= 4) {
            out.push_back({2, j});
            out.push_back({3, j});
        }
    }
    return out;
}

// candidate products of total weight w in a fixed order: singles, pairs, triples
std::vector<Recipe> candidates(int w, bool target_chi, int arity) {
    std::vector<Recipe> out;
    if (arity == 1) {
        for (auto& g : gens_of_weight(w, target_chi)) out.push_back({g});
        return out;
    }
    if (arity == 2) {
        for (int j1 = 1; j1 <= w / 2; ++j1) {
            int j2 = w - j1;
            for (int c1 = 0; c1 < 2; ++c1) {
                int c2 = c1 ^ (target_chi ? 1 : 0);
                auto A = gens_of_weight(j1, c1), B = gens_of_weight(j2, c2);
                for (size_t a = 0; a < A.size(); ++a)
                    for (size_t b = 0; b < B.size(); ++b) {
                        if (j1 == j2 && c1 == c2 && b < a) continue;
                        out.push_back({A[a], B[b]});
                    }
            }
        }
        return out;
    }
    for (int j1 = 1; j1 <= w; ++j1)
        for (int j2 = j1; j1 + j2 < w; ++j2) {
            int j3 = w - j1 - j2;
            if (j3 < j2) continue;
            for (int c1 = 0; c1 < 2; ++c1)
                for (int c2 = 0; c2 < 2; ++c2) {
                    int c3 = c1 ^ c2 ^ (target_chi ? 1 : 0);
                    for (auto& a : gens_of_weight(j1, c1))
                        for (auto& b : gens_of_weight(j2, c2))
                            for (auto& c : gens_of_weight(j3, c3)) out.push_back({a, b, c});
                }
        }
    return out;
}

struct GenCache {
    i64 N;
    DirChar chi;
    i64 P;
    std::map<std::pair<int, int>, std::pair<std::vector<mpz_class>, mpz_class>> cache;

    // integer vector and its denominator
    const std::pair<std::vector<mpz_class>, mpz_class>& get(const EisGen& g) {
        auto key = std::make_pair(g.kind, g.j);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto d = gen_dense(g, N, chi, P);
        mpz_class den = 1;
        for (auto& x : d) den = lcm(den, mpz_class(x.get_den()));
        std::vector<mpz_class> z(P);
        for (i64 n = 0; n < P; ++n) z[n] = d[n].get_num() * (den / d[n].get_den());
        return cache.emplace(key, std::make_pair(std::move(z), den)).first->second;
    }
};

std::vector<mpq_class> eval_recipe(const Recipe& r, GenCache& gc) {
    const auto& first = gc.get(r[0]);
    std::vector<mpz_class> acc = first.first;
    mpz_class den = first.second;
    for (size_t i = 1; i < r.size(); ++i) {
        const auto& nx = gc.get(r[i]);
        acc = series_mul(acc, nx.first, gc.P);
        den *= nx.second;
    }
    std::vector<mpq_class> out(gc.P);
    for (i64 n = 0; n < gc.P; ++n) {
        out[n] = frac(acc[n], den);
        out[n].canonicalize();
    }
    return out;
}

// reduce v against a reduced echelon basis; returns true if v was independent (and inserts it)
bool insert_echelon(RatMatrix& ech, std::vector<int>& piv, std::vector<mpq_class> v) {
    for (size_t r = 0; r < ech.size(); ++r) {
        if (v[piv[r]] == 0) continue;
        mpq_class f = v[piv[r]];
        for (size_t j = 0; j < v.size(); ++j)
            if (ech[r][j] != 0) v[j] -= f * ech[r][j];
    }
    size_t c = 0;
    while (c < v.size() && v[c] == 0) ++c;
    if (c == v.size()) return false;
    mpq_class s = 1 / v[c];
    for (auto& x : v) x *= s;
    for (auto& row : ech) {
        if (row[c] == 0) continue;
        mpq_class f = row[c];
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) row[j] -= f * v[j];
    }
    // keep rows sorted by pivot
    size_t pos = 0;
    while (pos < piv.size() && piv[pos] < static_cast<int>(c)) ++pos;
    ech.insert(ech.begin() + pos, std::move(v));
    piv.insert(piv.begin() + pos, static_cast<int>(c));
    return true;
}

std::vector<QExp> rows_to_qexp(const RatMatrix& rows) {
    std::vector<QExp> out;
    for (auto& r : rows) out.push_back(QExp::from_rationals(r));
    return out;
}

i64 first_good_prime(i64 N) {
    for (i64 l = 2;; ++l)
        if (is_prime(l) && N % l != 0) return l;
}

std::vector<mpq_class> hecke_dense(const std::vector<mpq_class>& f, i64 l, int w, const DirChar& chi) {
    const i64 P = static_cast<i64>(f.size());
    const i64 Q = (P + l - 1) / l; // n*l < P
    std::vector<mpq_class> r(Q);
    mpq_class s = mpq_class(chi(l)) * mpq_class(mpz_pow(l, w - 1));
    for (i64 n = 0; n < Q; ++n) {
        r[n] = f[n * l];
        if (n % l == 0 && s != 0) r[n] += s * f[n / l];
    }
    return r;
}

// rows truncated to P and re-echelonized
void truncate_rows(RatMatrix& rows, std::vector<int>& piv, i64 P) {
    for (auto& r : rows) r.resize(P);
    piv = rref(rows);
}

void assemble(SpaceBasis& S, i64 prec) {
    const int w = S.weight;
    const i64 N = S.level;
    const i64 l = first_good_prime(N);
    int max_piv = 0;
    for (int c : S.M_piv) max_piv = std::max(max_piv, c);
    const i64 P = std::max<i64>({prec, l * (max_piv + 1) + 1, sturm_bound(w, N) + 1});
    GenCache gc{N, S.chi, P, {}};
    RatMatrix rows;
    for (auto& r : S.recipes) rows.push_back(eval_recipe(r, gc));
    S.M_piv = rref(rows);
    if (static_cast<int>(S.M_piv.size()) != S.dim) throw SaturationFailure("recipes lost rank at high precision");
    S.M_rows = rows;

    // Eisenstein eigenvalues of T_l; their product kills the Eisenstein part
    mpq_class lw = mpq_class(mpz_pow(l, w - 1));
    mpq_class e1 = 1 + S.chi(l) * lw, e2 = S.chi(l) + lw;
    const int d = S.dim;
    RatMatrix A(d, std::vector<mpq_class>(d));
    for (int i = 0; i < d; ++i) {
        auto t = hecke_dense(S.M_rows[i], l, w, S.chi);
        for (int j = 0; j < d; ++j) A[i][j] = t[S.M_piv[j]];
    }
    RatMatrix B1 = A, B2 = A;
    for (int i = 0; i < d; ++i) {
        B1[i][i] -= e1;
        B2[i][i] -= e2;
    }
    RatMatrix Pm = matmul(B1, B2);
    RatMatrix cusp(d, std::vector<mpq_class>(P));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            if (Pm[i][k] == 0) continue;
            for (i64 n = 0; n < P; ++n)
                if (S.M_rows[k][n] != 0) cusp[i][n] += Pm[i][k] * S.M_rows[k][n];
        }
    S.S_piv = rref(cusp);
    S.S_rows = cusp;
    if (static_cast<int>(S.S_piv.size()) != S.cusp_dim)
        throw SaturationFailure("cusp rank " + std::to_string(S.S_piv.size()) + " but the dimension formula gives " + std::to_string(S.cusp_dim));
    for (auto& r : S.S_rows)
        if (r[0] != 0) throw SaturationFailure("cusp projection left a constant term");
    if (P > prec) {
        truncate_rows(S.M_rows, S.M_piv, prec);
        truncate_rows(S.S_rows, S.S_piv, prec);
        if (static_cast<int>(S.M_rows.size()) != S.dim || static_cast<int>(S.S_rows.size()) != S.cusp_dim)
            throw InsufficientPrecision("precision " + std::to_string(prec) + " does not separate the space");
    }
    S.prec = prec;
    S.basis = rows_to_qexp(S.M_rows);
    S.cusp = rows_to_qexp(S.S_rows);
}

} // namespace

// public order: chi weights the divisor d, psi the codivisor n/d
QExp eisenstein(int w, const DirChar& chi, const DirChar& psi, i64 prec) {
    return QExp::from_rationals(eisenstein_dense(w, psi, chi, prec));
}

int dim_oracle(int k, i64 N, const DirChar& chi) {
    if (k <= 1) throw UnsupportedWeight("weight " + std::to_string(k));
    if (chi(-1) != (k % 2 ? -1 : 1)) return 0;
    if (N % chi.modulus != 0) throw std::invalid_argument("character modulus must divide the level");
    // Cohen-Oesterle
    mpq_class mu = N;
    for (auto [p, r] : factorize(N)) mu = mu * (p + 1) / p;
    mpq_class t = frac(k - 1, 12) * mu;
    mpq_class lam = 1;
    for (auto [p, r] : factorize(N)) {
        int s = chi.modulus == 1 ? 0 : valuation(chi.modulus, p);
        i64 v;
        if (2 * s <= r) {
            if (r % 2 == 0) v = ipow(p, r / 2) + ipow(p, r / 2 - 1);
            else v = 2 * ipow(p, r / 2);
        } else {
            v = 2 * ipow(p, r - s);
        }
        lam *= v;
    }
    t -= lam / 2;
    mpq_class g4 = k % 2 ? mpq_class(0) : (k % 4 == 2 ? frac(-1, 4) : mpq_class(1, 4));
    mpq_class g3 = k % 3 == 2 ? frac(-1, 3) : (k % 3 == 1 ? mpq_class(0) : mpq_class(1, 3));
    mpq_class s4 = 0, s3 = 0;
    for (i64 x = 0; x < N; ++x) {
        if (mod(x * x + 1, N) == 0) s4 += chi(x);
        if (mod(x * x + x + 1, N) == 0) s3 += chi(x);
    }
    t += g4 * s4 + g3 * s3;
    if (k == 2 && chi.is_trivial()) t += 1; // dim M_0 = 1
    if (t.get_den() != 1) throw std::logic_error("dimension formula returned a non-integer");
    return static_cast<int>(t.get_num().get_si());
}

int dim_eisenstein(int w, i64 N, const DirChar& chi) {
    if (w <= 1) throw UnsupportedWeight("weight " + std::to_string(w));
    if (chi(-1) != (w % 2 ? -1 : 1)) return 0;
    for (auto [p, r] : factorize(N))
        if (r > 1) throw std::invalid_argument("Eisenstein dimension implemented for squarefree level");
    int c = 1 << factorize(N).size();
    if (w == 2 && chi.is_trivial()) c -= 1;
    return c;
}

SpaceBasis build_space(int w, i64 N, const DirChar& chi, i64 prec) {
    if (!is_prime(N)) throw std::invalid_argument("build_space: prime level expected");
    if (!chi.is_trivial() && chi.modulus != N) throw std::invalid_argument("build_space: character of conductor N expected");
    if (prec < sturm_bound(w, N)) throw InsufficientPrecision("precision below the Sturm bound");
    SpaceBasis S;
    S.weight = w;
    S.level = N;
    S.chi = chi;
    S.cusp_dim = dim_oracle(w, N, chi);
    S.dim = S.cusp_dim + dim_eisenstein(w, N, chi);
    const bool target_chi = !chi.is_trivial();
    if (S.dim == 0) {
        S.prec = prec;
        return S;
    }
    // choose spanning products at low precision
    const i64 Plow = sturm_bound(w, N) + 10;
    GenCache gc{N, chi, Plow, {}};
    RatMatrix ech;
    std::vector<int> piv;
    for (int arity = 1; arity <= 3 && static_cast<int>(ech.size()) < S.dim; ++arity) {
        for (auto& r : candidates(w, target_chi, arity)) {
            if (insert_echelon(ech, piv, eval_recipe(r, gc))) S.recipes.push_back(r);
            if (static_cast<int>(ech.size()) == S.dim) break;
        }
    }
    if (static_cast<int>(ech.size()) < S.dim)
        throw SaturationFailure("Eisenstein products span rank " + std::to_string(ech.size()) + " < " + std::to_string(S.dim));
    S.M_piv = piv;
    assemble(S, prec);
    return S;
}

SpaceBasis extend_space(const SpaceBasis& S0, i64 prec) {
    SpaceBasis S = S0;
    if (S.dim == 0) {
        S.prec = prec;
        return S;
    }
    assemble(S, prec);
    return S;
}

RatMatrix hecke_matrix(const SpaceBasis& S, i64 l) {
    const int d = S.cusp_dim;
    RatMatrix A(d, std::vector<mpq_class>(d));
    for (int i = 0; i < d; ++i) {
        auto t = hecke_dense(S.S_rows[i], l, S.weight, S.chi);
        for (int j = 0; j < d; ++j) {
            if (S.S_piv[j] >= static_cast<int>(t.size()))
                throw InsufficientPrecision("T_" + std::to_string(l) + " needs precision > " + std::to_string(l * (S.S_piv[j] + 1)));
            A[i][j] = t[S.S_piv[j]];
        }
    }
    return A;
}

std::vector<mpq_class> cusp_coords(const SpaceBasis& S, const std::vector<mpq_class>& f) {
    std::vector<mpq_class> c(S.cusp_dim);
    for (int j = 0; j < S.cusp_dim; ++j) c[j] = f[S.S_piv[j]];
    for (size_t n = 0; n < f.size() && n < static_cast<size_t>(S.prec); ++n) {
        mpq_class s = 0;
        for (int j = 0; j < S.cusp_dim; ++j) s += c[j] * S.S_rows[j][n];
        if (s != f[n]) throw NotInSpan("coefficient " + std::to_string(n));
    }
    return c;
}

// ---------------------------------------------------------------- eigenforms

namespace {

QExp combine(const std::vector<NFElem>& c, const RatMatrix& rows, const FieldPtr& K, i64 P) {
    QExp h(K, 1, mpq_class(P));
    for (i64 n = 0; n < P; ++n) {
        NFElem s(K);
        for (size_t i = 0; i < c.size(); ++i)
            if (rows[i][n] != 0) s += c[i] * rows[i][n];
        h.set(n, s);
    }
    return h;
}

} // namespace

std::vector<Eigenform> eigen_decompose(const SpaceBasis& S, const std::vector<i64>& primes) {
    const int d = S.cusp_dim;
    if (d == 0) return {};
    RatMatrix A;
    QPoly cp;
    bool found = false;
    for (i64 l : primes) {
        if (S.level % l == 0) continue;
        A = hecke_matrix(S, l);
        cp = charpoly(A);
        if (poly::is_squarefree(cp)) {
            found = true;
            break;
        }
    }
    if (!found) throw NotDiagonalizable("no listed Hecke operator has a squarefree characteristic polynomial");
    auto factors = poly::factor_squarefree_monic(poly::to_z_monic(cp));
    std::vector<Eigenform> out;
    RatMatrix At = transpose(A);
    for (auto& fz : factors) {
        QPoly fq = poly::to_q(fz);
        FieldPtr K;
        NFElem theta;
        if (fq.size() == 2) {
            K = NumberField::rationals();
            theta = NFElem::rational(K, -fq[0]);
        } else {
            if (fq.size() - 1 > 8) throw NotDiagonalizable("Hecke field of degree " + std::to_string(fq.size() - 1) + " exceeds the desk-scale cap 8");
            K = NumberField::simple(fq, "a");
            theta = NFElem::generator(K);
        }
        Mat<NFElem> M(d, std::vector<NFElem>(d, NFElem(K)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) M[i][j] = NFElem::rational(K, At[i][j]);
        for (int i = 0; i < d; ++i) M[i][i] -= theta;
        auto ker = kernel(M, d, NFElem(K));
        if (ker.size() != 1) throw NotDiagonalizable("eigenspace of dimension " + std::to_string(ker.size()));
        QExp h = combine(ker[0], S.S_rows, K, S.prec);
        NFElem a1 = h.coeff(1);
        if (a1.is_zero()) throw NotNewform("eigenvector with a_1 = 0");
        NFElem s = a1.inv();
        std::vector<NFElem> c = ker[0];
        for (auto& x : c) x *= s;
        Eigenform e;
        e.level = S.level;
        e.weight = S.weight;
        e.chi = S.chi;
        e.field = K;
        e.coeffs = combine(c, S.S_rows, K, S.prec);
        e.aD = e.coeffs.known(S.level) ? e.coeffs.coeff(S.level) : NFElem(K);
        out.push_back(std::move(e));
    }
    return out;
}

Eigenform reexpand(const Eigenform& h, const SpaceBasis& S) {
    if (S.level != h.level || S.weight != h.weight) throw LevelMismatch("reexpand: different space");
    std::vector<NFElem> c;
    for (int j = 0; j < S.cusp_dim; ++j) c.push_back(h.coeffs.coeff(S.S_piv[j]));
    Eigenform e = h;
    e.coeffs = combine(c, S.S_rows, h.field, S.prec);
    if (!e.coeffs.truncate(h.coeffs.prec()).agrees_with(h.coeffs)) throw NotInSpan("reexpanded form disagrees with the original");
    e.aD = e.coeffs.coeff(S.level);
    return e;
}

Eigenform conjugate_form(const Eigenform& h, const QuadField& F) {
    if (h.level != F.D()) throw NotNewform("conjugation rule needs level exactly D");
    const FieldPtr& K = h.field;
    const i64 P = h.coeffs.key_bound();
    const i64 D = F.D();
    const int w = h.weight;
    if (h.a(1) != NFElem::rational(K, 1)) throw NotNewform("a_1 != 1");
    std::vector<i64> spf(std::max<i64>(P, 2), 0);
    for (i64 i = 2; i < P; ++i)
        if (!spf[i])
            for (i64 j = i; j < P; j += i)
                if (!spf[j]) spf[j] = i;
    std::vector<NFElem> a(P, NFElem(K));
    if (P > 1) a[1] = NFElem::rational(K, 1);
    NFElem aDc = NFElem::rational(K, mpq_class(mpz_pow(D, w - 1))) * h.aD.inv();
    for (i64 n = 2; n < P; ++n) {
        i64 l = spf[n], m = n, pe = 1;
        while (m % l == 0) {
            m /= l;
            pe *= l;
        }
        if (m > 1) {
            a[n] = a[pe] * a[m];
            continue;
        }
        // n = l^e
        if (l == D) {
            a[n] = a[n / l] * aDc;
        } else if (n == l) {
            a[n] = h.a(l) * mpq_class(F.chi(l));
        } else {
            a[n] = a[l] * a[n / l] - a[n / l / l] * (mpq_class(h.chi(l)) * mpq_class(mpz_pow(l, w - 1)));
        }
    }
    Eigenform c = h;
    c.coeffs = QExp(K, 1, h.coeffs.prec());
    for (i64 n = 1; n < P; ++n) c.coeffs.set(n, a[n]);
    c.aD = aDc;
    return c;
}

bool is_plus(const QExp& f, i64 level, int weight, const QuadField& F) {
    if (f.prec() < sturm_bound(weight, level)) throw InsufficientPrecision("plus-space test below the Sturm bound");
    for (auto& [n, v] : f.coeffs())
        if (F.chi(n) == 1 && !v.is_zero()) return false;
    return true;
}

std::vector<QExp> plus_basis(const SpaceBasis& S, const QuadField& F) {
    const int d = S.cusp_dim;
    if (d == 0) return {};
    RatMatrix E;
    for (i64 n = 1; n < S.prec; ++n) {
        if (F.chi(n) != 1) continue;
        std::vector<mpq_class> row(d);
        for (int i = 0; i < d; ++i) row[i] = S.S_rows[i][n];
        E.push_back(std::move(row));
    }
    auto ker = kernel(E, d, mpq_class(0));
    RatMatrix rows;
    for (auto& c : ker) {
        std::vector<mpq_class> r(S.prec);
        for (int i = 0; i < d; ++i)
            if (c[i] != 0)
                for (i64 n = 0; n < S.prec; ++n) r[n] += c[i] * S.S_rows[i][n];
        rows.push_back(std::move(r));
    }
    rref(rows);
    return rows_to_qexp(rows);
}

bool euler_recursion_holds(const Eigenform& h, i64 upto) {
    const i64 P = std::min(upto, h.coeffs.key_bound());
    const FieldPtr& K = h.field;
    for (i64 l = 2; l < P; ++l) {
        if (!is_prime(l) || h.level % l == 0) continue;
        mpq_class s = mpq_class(h.chi(l)) * mpq_class(mpz_pow(l, h.weight - 1));
        NFElem prev = NFElem::rational(K, 1), cur = h.a(l);
        for (i64 q = l * l; q < P; q *= l) {
            NFElem next = h.a(l) * cur - prev * s;
            if (next != h.a(q)) return false;
            prev = cur;
            cur = next;
        }
    }
    // multiplicativity on coprime pairs
    for (i64 m = 2; m < P; ++m)
        for (i64 n = m + 1; m * n < P; ++n)
            if (gcd(m, n) == 1 && h.a(m * n) != h.a(m) * h.a(n)) return false;
    return true;
}

bool hecke_eigen_holds(const Eigenform& h, i64 upto) {
    for (i64 l = 2; l < upto; ++l) {
        if (!is_prime(l) || h.level % l == 0) continue;
        QExp t = hecke_T(h.coeffs, l, h.weight, h.chi);
        if (t.key_bound() < 2) break;
        QExp rhs = h.a(l) * h.coeffs.truncate(t.prec());
        if (!t.agrees_with(rhs)) return false;
    }
    return true;
}

std::vector<NFElem> coeff_vector(const QExp& f, const FieldPtr& F, i64 n) {
    std::vector<NFElem> out;
    out.reserve(n);
    for (i64 l = 0; l < n; ++l) out.push_back(f.coeff(l).lift_to(F));
    return out;
}

std::vector<PadicScalar> coeff_vector(const QExp& f, const TowerEmbedding& emb, i64 n) {
    std::vector<PadicScalar> out;
    out.reserve(n);
    for (i64 l = 0; l < n; ++l) out.push_back(emb.map(f.coeff(l)));
    return out;
}

FieldPtr with_sqrt_minus_D(const FieldPtr& F, i64 D) {
    return adjoin_sqrt(F, NFElem::rational(F, -D), "z");
}

FieldPtr adjoin_sqrt(const FieldPtr& base, const NFElem& d, const std::string& var) {
    return NumberField::extend(base, {-d.lift_to(base), NFElem(base)}, var);
}

Stabilized p_stabilize(const Eigenform& h, i64 p, TowerEmbedding& emb, const QuadField& F) {
    if (F.chi(p) != 1) throw NotSplit(std::to_string(p));
    if (!emb.has(h.field)) throw EmbeddingAmbiguity("Hecke field of h is not embedded");
    const FieldPtr& K = h.field;
    NFElem ap = h.a(p);
    PadicScalar app = emb.map(ap);
    if (!app.is_unit()) throw NotOrdinary("a_p has positive valuation under the chosen embedding");
    mpq_class pw = mpq_class(h.chi(p)) * mpq_class(mpz_pow(p, h.weight - 1));
    NFElem disc = ap * ap - NFElem::rational(K, 4 * pw);
    FieldPtr L = adjoin_sqrt(K, disc, "y");
    auto roots = emb.candidate_roots(L);
    int pick = -1;
    for (size_t i = 0; i < roots.size(); ++i)
        if (agree_val(roots[i], app) >= 1) pick = static_cast<int>(i);
    if (pick < 0) throw NotOrdinary("no square root of the discriminant reduces to a_p");
    emb.attach_with_root(L, roots[pick]);
    Stabilized s;
    s.field = L;
    NFElem y = NFElem::generator(L);
    s.alpha = (ap.lift_to(L) + y) * mpq_class(1, 2);
    s.beta = ap.lift_to(L) - s.alpha;
    Eigenform hc = conjugate_form(h, F);
    s.g = (h.coeffs - hc.coeffs).lift_to(L);
    s.f = s.g - s.beta * v_shift(s.g, p);
    return s;
}

std::pair<std::vector<NFElem>, std::vector<NFElem>> decompose_p_old(const QExp& f, const std::vector<QExp>& g, i64 p) {
    FieldPtr F = f.field();
    for (auto& x : g) F = common_field(F, x.field());
    const size_t n = g.size();
    if (n == 0) {
        if (!f.is_zero()) throw NotInSpan("empty basis");
        return {};
    }
    mpq_class prec = f.prec();
    for (auto& x : g) prec = std::min(prec, x.prec());
    QExp ff = f.lift_to(F).truncate(prec);
    std::vector<QExp> gs, vs;
    for (auto& x : g) {
        gs.push_back(x.lift_to(F));
        vs.push_back(v_shift(gs.back(), p));
    }
    const i64 P = ff.key_bound();
    Mat<NFElem> M;
    std::vector<NFElem> rhs;
    for (i64 m = 0; m < P; ++m) {
        std::vector<NFElem> row;
        for (size_t i = 0; i < n; ++i) row.push_back(gs[i].coeff(m));
        for (size_t i = 0; i < n; ++i) row.push_back(vs[i].coeff(m));
        M.push_back(std::move(row));
        rhs.push_back(ff.coeff(m));
    }
    std::vector<NFElem> x;
    if (!solve(M, rhs, x)) throw NotInSpan("f is not a combination of the g_i and g_i(p tau)");
    return {std::vector<NFElem>(x.begin(), x.begin() + n), std::vector<NFElem>(x.begin() + n, x.end())};
}

} // namespace hml
