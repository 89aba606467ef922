#include "hml/padic.hpp"

#include <algorithm>

#include "hml/error.hpp"

namespace hml {

PadicScalar teichmuller(i64 d, const RingPtr& R) {
    if (mod(d, R->p()) == 0) throw DivisibleByP("teichmuller(" + std::to_string(d) + ")");
    return PadicScalar::from_int(R, d).teichmuller();
}

PadicScalar PowerSeriesT::eval(const PadicScalar& T, int* loss) const {
    PadicScalar acc(R);
    for (size_t i = c.size(); i-- > 0;) acc = acc * T + c[i];
    if (loss) *loss = std::max(0, R->K() - static_cast<int>(c.size()) * T.valuation());
    return acc;
}

namespace {

PadicScalar one_plus_p_pow(const RingPtr& R, int k) {
    return PadicScalar::from_int(R, 1 + R->p()).pow(k) - PadicScalar::from_int(R, 1);
}

PadicScalar ipow_s(const PadicScalar& x, i64 e) {
    if (e >= 0) return x.pow(e);
    return x.inv().pow(-e);
}

} // namespace

int interpolation_valuation(const ASeries& a, int k, int* loss) {
    const RingPtr& R = a.A.R;
    PadicScalar v = a.A.eval(one_plus_p_pow(R, k), loss);
    PadicScalar w = teichmuller(a.d, R);
    PadicScalar target = ipow_s(w, -k) * PadicScalar::from_int(R, a.d).pow(k - 1);
    return (v - target).valuation();
}

ASeries a_d_series(i64 d, int k0, const RingPtr& R, int deg) {
    const i64 p = R->p();
    if (mod(d, p) == 0) throw DivisibleByP("a_d_series(" + std::to_string(d) + ")");
    // s = log<d>/log(1+p) mod p^N, N large enough that (1+T)^(p^N) = 1 mod (p^K, T^deg)
    int N = R->K() + 1;
    for (i64 t = 1; t < deg; t *= p) ++N;
    const mpz_class pN = mpz_pow(p, N), pN1 = pN * p;
    mpz_class dd = mpz_class(d) % pN1;
    if (dd < 0) dd += pN1;
    mpz_class om;
    mpz_powm(om.get_mpz_t(), dd.get_mpz_t(), pN.get_mpz_t(), pN1.get_mpz_t());
    mpz_class x, tmp;
    mpz_invert(tmp.get_mpz_t(), om.get_mpz_t(), pN1.get_mpz_t());
    x = dd * tmp % pN1; // <d>
    mpz_class s = 0, pi = 1, gam = 1 + p;
    for (int i = 0; i < N; ++i) {
        mpz_class digit = ((x - 1) / (pi * p)) % p;
        if (digit < 0) digit += p;
        // x *= (1+p)^(-digit p^i)
        mpz_class e = digit * pi, g, gi;
        mpz_powm(g.get_mpz_t(), gam.get_mpz_t(), e.get_mpz_t(), pN1.get_mpz_t());
        mpz_invert(gi.get_mpz_t(), g.get_mpz_t(), pN1.get_mpz_t());
        x = x * gi % pN1;
        s += digit * pi;
        pi *= p;
    }
    if (x != 1) throw CrossCheckFailure("discrete logarithm of <d> did not converge");
    ASeries a;
    a.d = d;
    a.s = s;
    a.A.R = a.Ak0.R = R;
    const PadicScalar dinv = PadicScalar::from_int(R, d).inv(), wk0 = teichmuller(d, R).pow(k0);
    for (int n = 0; n < deg; ++n) {
        mpz_class b;
        mpz_bin_ui(b.get_mpz_t(), s.get_mpz_t(), n);
        a.A.c.push_back(dinv * PadicScalar::from_int(R, b));
        a.Ak0.c.push_back(wk0 * a.A.c.back());
    }
    for (int j = 0; j < 3; ++j) {
        int loss = 0, k = k0 + j * static_cast<int>(p - 1);
        if (interpolation_valuation(a, k, &loss) < R->K() - loss)
            throw CrossCheckFailure("A_" + std::to_string(d) + " fails to interpolate at k = " + std::to_string(k));
    }
    return a;
}

// ---------------------------------------------------------------- ordinary eigenforms

namespace {

int qval(const mpq_class& q, i64 p) {
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

i64 residue_mod(const mpq_class& q, i64 p) {
    mpz_class n = q.get_num() % p, d = q.get_den() % p;
    return mod(n.get_si() * inv_mod(mod(d.get_si(), p), p), p);
}

void make_primitive(std::vector<mpq_class>& r, i64 p) {
    int v = 1 << 30;
    for (auto& x : r)
        if (x != 0) v = std::min(v, qval(x, p));
    if (v == 1 << 30 || v == 0) return;
    mpq_class s = v > 0 ? mpq_class(1, 1) / mpq_class(mpz_pow(p, v)) : mpq_class(mpz_pow(p, -v));
    for (auto& x : r) x *= s;
}

// rank of the rows mod p; on deficiency returns a dependency c (c[j] = 1 for some j)
// and j, otherwise the pivot columns
struct ModP {
    bool full = true;
    std::vector<i64> dep;
    int j = -1;
    std::vector<int> cols;
};

ModP mod_p_rank(const RatMatrix& rows, i64 p) {
    const int d = static_cast<int>(rows.size()), n = static_cast<int>(rows[0].size());
    std::vector<std::vector<i64>> A(d, std::vector<i64>(n + d, 0));
    for (int i = 0; i < d; ++i) {
        for (int c = 0; c < n; ++c) A[i][c] = residue_mod(rows[i][c], p);
        A[i][n + i] = 1;
    }
    ModP out;
    int r = 0;
    for (int c = 0; c < n && r < d; ++c) {
        int piv = -1;
        for (int i = r; i < d; ++i)
            if (A[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[r], A[piv]);
        i64 inv = inv_mod(A[r][c], p);
        for (auto& x : A[r]) x = x * inv % p;
        for (int i = 0; i < d; ++i)
            if (i != r && A[i][c]) {
                i64 f = A[i][c];
                for (int t = 0; t < n + d; ++t) A[i][t] = mod(A[i][t] - f * A[r][t], p);
            }
        out.cols.push_back(c);
        ++r;
    }
    if (r == d) return out;
    out.full = false;
    out.dep.assign(A[r].begin() + n, A[r].end());
    for (int i = 0; i < d; ++i)
        if (out.dep[i]) {
            i64 inv = inv_mod(out.dep[i], p);
            for (auto& x : out.dep) x = x * inv % p;
            out.j = i;
            break;
        }
    return out;
}

std::vector<mpq_class> hecke_row(const std::vector<mpq_class>& r, i64 l, int w, const DirChar& chi) {
    const i64 P = static_cast<i64>(r.size());
    const i64 n_max = (P - 1) / l + 1; // l n < P
    std::vector<mpq_class> out(n_max);
    const mpq_class s = mpq_class(chi(l)) * mpq_class(mpz_pow(l, w - 1));
    for (i64 n = 0; n < n_max; ++n) {
        out[n] = r[l * n];
        if (n % l == 0) out[n] += s * r[n / l];
    }
    return out;
}

Mat<PadicScalar> to_ring(const RatMatrix& A, const RingPtr& R) {
    Mat<PadicScalar> M(A.size());
    for (size_t i = 0; i < A.size(); ++i)
        for (auto& x : A[i]) M[i].push_back(PadicScalar::from_mpq(R, x));
    return M;
}

Mat<PadicScalar> mat_pow(Mat<PadicScalar> A, i64 e) {
    auto Rm = identity(static_cast<int>(A.size()), A[0][0]);
    while (e > 0) {
        if (e & 1) Rm = matmul(Rm, A);
        A = matmul(A, A);
        e >>= 1;
    }
    return Rm;
}

bool residue_less(const PadicScalar& a, const PadicScalar& b) {
    return a.residue() < b.residue();
}

} // namespace

std::vector<PadicEigen> ordinary_eigenforms(int w, i64 D, i64 p, const RingPtr& R, i64 cap) {
    const DirChar chi = DirChar::kronecker_minus(D);
    const int d = dim_oracle(w, D, chi);
    if (d == 0) return {};
    const std::vector<i64> ells{3, 5, 13, 17, 19};
    const i64 lmax = std::max<i64>(p, 19);
    i64 P = std::max({cap, sturm_bound(w, D) + 1, lmax * (d + 12)});
    SpaceBasis S = build_space(w, D, chi, P);
    RatMatrix rows;
    ModP mp;
    for (;;) {
        rows.clear();
        for (auto& b : S.cusp) {
            std::vector<mpq_class> r(P);
            for (i64 n = 0; n < P; ++n) r[n] = b.coeff(n).rational_value();
            make_primitive(r, p);
            rows.push_back(std::move(r));
        }
        // saturate: divide p-divisible combinations by p
        for (int guard = 0;; ++guard) {
            mp = mod_p_rank(rows, p);
            if (mp.full) break;
            if (guard > 64 * d) throw SaturationFailure("p-saturation did not terminate");
            std::vector<mpq_class> nr(P, 0);
            for (int i = 0; i < d; ++i)
                if (mp.dep[i])
                    for (i64 n = 0; n < P; ++n) nr[n] += mp.dep[i] * rows[i][n];
            for (auto& x : nr) x /= p;
            make_primitive(nr, p);
            rows[mp.j] = std::move(nr);
        }
        const i64 need = lmax * (mp.cols.back() + 2);
        if (need <= P) break;
        P = need;
        S = extend_space(S, P);
    }
    // Hecke matrices in the saturated basis, exact over Q
    RatMatrix RC(d, std::vector<mpq_class>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) RC[i][j] = rows[i][mp.cols[j]];
    const RatMatrix RCi = inverse(RC);
    auto hecke = [&](i64 l) {
        RatMatrix A(d);
        for (int i = 0; i < d; ++i) {
            auto t = hecke_row(rows[i], l, w, chi);
            std::vector<mpq_class> tc(d);
            for (int j = 0; j < d; ++j) tc[j] = t[mp.cols[j]];
            A[i] = matmul(RatMatrix{tc}, RCi)[0];
            // consistency on every known column
            for (size_t n = 0; n < t.size(); ++n) {
                mpq_class s = 0;
                for (int j = 0; j < d; ++j) s += A[i][j] * rows[j][n];
                if (s != t[n]) throw NotInSpan("Hecke image left the cusp space");
            }
        }
        return to_ring(A, R);
    };
    const int K = R->K();
    auto Ap = hecke(p);
    auto E = mat_pow(Ap, 2 * static_cast<i64>(K) * d + 2);
    auto piv = unit_echelon(E);
    const int r = static_cast<int>(piv.size());
    for (int i = r; i < d; ++i)
        for (auto& x : E[i])
            if (!x.is_zero()) throw NotDiagonalizable("ordinary projector has not converged");
    if (r == 0) return {};
    Mat<PadicScalar> B(E.begin(), E.begin() + r);
    auto restrict_to = [&](const Mat<PadicScalar>& A) {
        auto BA = matmul(B, A);
        Mat<PadicScalar> Rl(r, std::vector<PadicScalar>(r, PadicScalar(R)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) Rl[i][j] = BA[i][piv[j]];
        if (matmul(Rl, B) != BA) throw NotInSpan("ordinary part is not Hecke stable");
        return Rl;
    };
    std::vector<Mat<PadicScalar>> Rs;
    for (i64 l : ells) Rs.push_back(restrict_to(hecke(l)));
    // an operator with simple eigenvalues mod p
    std::vector<Mat<PadicScalar>> ops = Rs;
    for (size_t i = 0; i < Rs.size(); ++i)
        for (size_t j = i + 1; j < Rs.size(); ++j) {
            auto S2 = Rs[i];
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) S2[a][b] += Rs[j][a][b];
            ops.push_back(S2);
        }
    std::vector<PadicScalar> roots;
    const Mat<PadicScalar>* op = nullptr;
    for (auto& O : ops) {
        try {
            roots = simple_roots(charpoly(O));
            op = &O;
            break;
        } catch (const NotDiagonalizable&) {
        }
    }
    if (!op) throw NotDiagonalizable("no tested Hecke combination has simple eigenvalues mod p");
    // rows mapped to R on the first cap columns
    Mat<PadicScalar> rowsR(d);
    for (int i = 0; i < d; ++i)
        for (i64 n = 0; n < cap; ++n) rowsR[i].push_back(PadicScalar::from_mpq(R, rows[i][n]));
    std::vector<PadicEigen> out;
    for (auto& th : roots) {
        Mat<PadicScalar> Mt(r, std::vector<PadicScalar>(r, PadicScalar(R)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) Mt[j][i] = (*op)[i][j] - (i == j ? th : PadicScalar(R));
        auto kp = unit_echelon(Mt);
        if (static_cast<int>(kp.size()) != r - 1) throw NotDiagonalizable("eigenspace is not a line");
        int freec = 0;
        while (std::find(kp.begin(), kp.end(), freec) != kp.end()) ++freec;
        std::vector<PadicScalar> x(r, PadicScalar(R));
        x[freec] = PadicScalar::from_int(R, 1);
        for (int i = 0; i < r - 1; ++i) x[kp[i]] = -Mt[i][freec];
        std::vector<PadicScalar> y(d, PadicScalar(R));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < d; ++j) y[j] += x[i] * B[i][j];
        PadicEigen h;
        h.weight = w;
        h.a.assign(cap, PadicScalar(R));
        for (int j = 0; j < d; ++j)
            for (i64 n = 0; n < cap; ++n) h.a[n] += y[j] * rowsR[j][n];
        if (!h.a[1].is_unit()) throw NotDiagonalizable("eigenvector has a_1 = 0 mod p");
        PadicScalar s = h.a[1].inv();
        for (auto& c : h.a) c *= s;
        h.cm = true;
        for (i64 l = 2; l < std::min<i64>(cap, 60); ++l)
            if (is_prime(l) && chi(l) == -1 && !h.a[l].is_zero()) h.cm = false;
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const PadicEigen& a, const PadicEigen& b) {
        if (a.cm != b.cm) return !a.cm;
        return residue_less(a.a[3], b.a[3]);
    });
    return out;
}

std::vector<PadicEigen> embed_orbit(const Eigenform& h, const RingPtr& R, i64 cap) {
    std::vector<PadicEigen> out;
    if (h.field->degree() == 1) {
        TowerEmbedding e(R);
        PadicEigen x{h.weight, coeff_vector(h.coeffs, e, cap), false};
        out.push_back(std::move(x));
        return out;
    }
    TowerEmbedding probe(R);
    for (auto& root : probe.candidate_roots(h.field)) {
        TowerEmbedding e(R);
        e.attach_with_root(h.field, root);
        out.push_back({h.weight, coeff_vector(h.coeffs, e, cap), false});
    }
    return out;
}

bool padic_hecke_holds(const PadicEigen& h, i64 D, i64 lmax) {
    const DirChar chi = DirChar::kronecker_minus(D);
    const RingPtr& R = h.a[1].ring();
    const i64 cap = static_cast<i64>(h.a.size());
    for (i64 l = 2; l < lmax; ++l) {
        if (!is_prime(l)) continue;
        PadicScalar s = PadicScalar::from_int(R, chi(l) * mpz_pow(l, h.weight - 1));
        for (i64 n = 1; l * n < cap; ++n) {
            PadicScalar rhs = h.a[l] * h.a[n];
            if (n % l == 0) rhs -= s * h.a[n / l];
            if (h.a[l * n] != rhs) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- branches

BranchData stabilize_branch(const PadicEigen& h, int k, i64 D, i64 p) {
    const RingPtr& R = h.a[1].ring();
    const DirChar chi = DirChar::kronecker_minus(D);
    const int w = k - 1;
    if (h.weight != w) throw std::invalid_argument("stabilize_branch: weight mismatch");
    const i64 cap = static_cast<i64>(h.a.size());
    BranchData b;
    b.k = k;
    b.h = h;
    const PadicScalar ap = h.a.at(p);
    if (!ap.is_unit()) throw NotOrdinary("a_p is not a unit");
    std::vector<PadicScalar> poly{PadicScalar::from_int(R, chi(p) * mpz_pow(p, w - 1)), -ap, PadicScalar::from_int(R, 1)};
    auto roots = simple_roots(poly);
    for (auto& x : roots)
        if (x.is_unit()) b.alpha = x;
    if (b.alpha.ring() == nullptr) throw NotOrdinary("no unit root");
    b.beta = ap - b.alpha;
    const PadicScalar aD = h.a.at(D);
    const PadicScalar abar = PadicScalar::from_int(R, mpz_pow(D, w - 1)) * aD.inv();
    b.hc.assign(cap, PadicScalar(R));
    for (i64 n = 1; n < cap; ++n) {
        i64 m = n;
        int s = 0;
        while (m % D == 0) {
            m /= D;
            ++s;
        }
        b.hc[n] = PadicScalar::from_int(R, chi(m)) * h.a[m] * abar.pow(s);
    }
    b.g.assign(cap, PadicScalar(R));
    b.f = b.hal = b.g;
    for (i64 n = 0; n < cap; ++n) {
        b.g[n] = h.a[n] - b.hc[n];
        b.f[n] = b.g[n];
        b.hal[n] = h.a[n];
        if (n % p == 0) {
            b.f[n] -= b.beta * (h.a[n / p] - b.hc[n / p]);
            b.hal[n] -= b.beta * h.a[n / p];
        }
    }
    return b;
}

size_t branch_match(const std::vector<PadicEigen>& cands, const PadicEigen& anchor, i64 D, i64 p, i64 bound) {
    std::vector<size_t> hits;
    for (size_t i = 0; i < cands.size(); ++i) {
        bool ok = true;
        for (i64 l = 2; l <= bound && ok; ++l) {
            if (!is_prime(l) || l == p || l == D) continue;
            if (l >= static_cast<i64>(cands[i].a.size()) || l >= static_cast<i64>(anchor.a.size())) break;
            ok = (cands[i].a[l] - anchor.a[l]).valuation() >= 1;
        }
        if (ok) hits.push_back(i);
    }
    if (hits.empty()) throw NoBranch("no ordinary eigenform at weight " + std::to_string(cands.empty() ? 0 : cands[0].weight) + " matches the anchor mod p");
    if (hits.size() > 1) throw AmbiguousBranch(std::to_string(hits.size()) + " eigenforms match the anchor mod p");
    return hits[0];
}

const BranchData& FamilySample::at(int k) const {
    for (auto& b : data)
        if (b.k == k) return b;
    throw OutOfRange("weight " + std::to_string(k) + " is not in the sample");
}

FamilySample build_family(const FamilyOptions& opt) {
    QuadField F(opt.D);
    if (F.chi(opt.p) != 1) throw NotSplit("p = " + std::to_string(opt.p) + " does not split");
    if (opt.p % 2 == 0) throw ConfigError("p must be odd (p = 1 mod #O^x = 2)");
    if (opt.k0 % 2) throw ConfigError("k0 must be even (#O^x = 2 divides k0)");
    for (int k : opt.weights)
        if (mod(k - opt.k0, opt.p - 1) != 0) throw ConfigError("weight " + std::to_string(k) + " is not k0 mod p-1");
    FamilySample s;
    s.D = opt.D;
    s.p = opt.p;
    s.k0 = opt.k0;
    s.M = opt.M;
    s.R = make_ring(opt.p, opt.M, opt.f);
    s.weights = opt.weights;
    auto zr = simple_roots({PadicScalar::from_int(s.R, opt.D), PadicScalar(s.R), PadicScalar::from_int(s.R, 1)});
    std::sort(zr.begin(), zr.end(), residue_less);
    if (zr.size() != 2) throw ConfigError("-D has no square root in the p-adic ring");
    if (opt.z_root < 0 || opt.z_root > 1) throw ConfigError("z_root must be 0 or 1");
    s.z = zr[opt.z_root];
    s.metadata["sqrt(-D)"] = s.z.str();
    s.metadata["i"] = "not adjoined: -i sqrt(D) = -sqrt(-D) under sqrt(-D) = i sqrt(D)";
    s.metadata["ring"] = "GR(" + std::to_string(opt.p) + "^" + std::to_string(opt.M) + ", " + std::to_string(opt.f) + ")";
    auto anchors = ordinary_eigenforms(opt.k0 - 1, opt.D, opt.p, s.R, opt.cap);
    if (anchors.empty()) throw NoBranch("no ordinary eigenform at weight k0 - 1");
    if (opt.anchor < 0 || opt.anchor >= static_cast<int>(anchors.size())) throw ConfigError("anchor index out of range");
    const PadicEigen anchor = anchors[opt.anchor];
    s.metadata["anchor_cm"] = anchor.cm ? "yes" : "no";
    s.metadata["anchor_a3"] = anchor.a[3].str();
    for (int k : opt.weights) {
        auto cands = k == opt.k0 ? anchors : ordinary_eigenforms(k - 1, opt.D, opt.p, s.R, opt.cap);
        size_t i = branch_match(cands, anchor, opt.D, opt.p, opt.match_bound);
        s.data.push_back(stabilize_branch(cands[i], k, opt.D, opt.p));
        s.metadata["ordinary_count_k" + std::to_string(k)] = std::to_string(cands.size());
    }
    return s;
}

// ---------------------------------------------------------------- family formulas

TripleValue family_b(const FamilySample& s, i64 n, int k) {
    if (n < 1) throw std::invalid_argument("family_b: n >= 1");
    const BranchData& b = s.at(k);
    const RingPtr& R = s.R;
    const DirChar chi = DirChar::kronecker_minus(s.D);
    i64 Mm = n;
    int sd = 0, r = 0;
    while (Mm % s.D == 0) {
        Mm /= s.D;
        ++sd;
    }
    while (Mm % s.p == 0) {
        Mm /= s.p;
        ++r;
    }
    const auto& a = b.h.a;
    const PadicScalar aD = a.at(s.D), one = PadicScalar::from_int(R, 1);
    const PadicScalar Dk = PadicScalar::from_int(R, mpz_pow(s.D, k - 2));
    const PadicScalar cm = PadicScalar::from_int(R, chi(Mm));
    TripleValue t;
    t.direct = b.f.at(n);
    const i64 pr = ipow(s.p, r);
    PadicScalar last = r == 0 ? one : a.at(pr) - b.beta * a.at(pr / s.p);
    PadicScalar abar = Dk * aD.inv();
    t.factored = a.at(Mm) * (aD.pow(sd) - cm * abar.pow(sd)) * last;
    // c_{M p^r} of the stabilized family member, mu(Frob_D) -> a_D, (iota omega^(k0-2))(Frob_D) -> D^(k-2)
    t.bformula = b.hal.at(Mm * pr) * (aD.pow(sd) - cm * Dk.pow(sd) * aD.inv().pow(sd));
    if (t.direct != t.factored || t.direct != t.bformula)
        throw CrossCheckFailure("n = " + std::to_string(n) + " k = " + std::to_string(k) + ": " + t.direct.str() + " / " + t.factored.str() + " / " + t.bformula.str());
    return t;
}

PadicScalar lambda_assemble(const FamilySample& s, const std::map<i64, ASeries>& A, const QuadField& F, const HermIndex& T,
                            int k, int* loss) {
    const RingPtr& R = s.R;
    const PadicScalar Tk = one_plus_p_pow(R, k);
    const i64 e = eps(F, T), det = det_D(F, T);
    PadicScalar sum(R);
    int worst = 0;
    for (i64 d = 1; d <= e; ++d) {
        if (e % d || d % s.p == 0) continue;
        const i64 n = det / (d * d);
        const int c = a_D(F, n);
        if (c == 0) continue;
        PadicScalar bn = n == 0 ? s.at(k).f.at(0) : family_b(s, n, k).bformula;
        PadicScalar B = -s.z * bn * PadicScalar::from_mpq(R, frac(1, c));
        int l = 0;
        sum += A.at(d).Ak0.eval(Tk, &l) * B;
        worst = std::max(worst, l);
    }
    if (loss) *loss = worst;
    return sum;
}

HermForm<PadicScalar> direct_lift(const FamilySample& s, const QuadField& F, int k, i64 bound) {
    const BranchData& b = s.at(k);
    SpecialJacobiForm<PadicScalar> phi{F.D(), k, s.p, alpha_from_coeffs(F, b.f, s.z)};
    return lift(F, phi, bound);
}

std::vector<CongruenceRow> congruence_check(const FamilySample& s, const std::vector<i64>& ns, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<CongruenceRow> out;
    for (auto [k1, k2] : pairs) {
        int v = 0;
        const i64 diff = std::abs(k1 - k2);
        if (diff == 0) v = s.M;
        else if (diff % (s.p - 1) == 0) {
            i64 t = diff / (s.p - 1);
            while (t % s.p == 0) {
                t /= s.p;
                ++v;
            }
        } else {
            v = -1;
        }
        for (i64 n : ns) {
            if (n % s.p == 0) continue;
            auto b1 = family_b(s, n, k1).bformula, b2 = family_b(s, n, k2).bformula;
            int val = (b1 - b2).valuation();
            out.push_back({n, k1, k2, val, v, val >= v + 1});
        }
    }
    return out;
}

} // namespace hml
