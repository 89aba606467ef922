#include "hml/suites.hpp"

#include <random>
#include <set>
#include <sstream>

#include "hml/core_field.hpp"
#include "hml/jacobi.hpp"
#include "hml/theta.hpp"

namespace hml {

bool Report::passed() const {
    if (checks.empty()) return false;
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Check& Report::add(std::string name, bool pass, std::string witness, int val) {
    checks.push_back({std::move(name), pass, val, std::move(witness)});
    return checks.back();
}

json report_json(const Report& r) {
    json cs = json::array();
    for (auto& c : r.checks) {
        json j{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}};
        j["worst_valuation"] = c.worst_valuation >= 0 ? json(c.worst_valuation) : json(nullptr);
        cs.push_back(j);
    }
    json out{{"suite", r.suite}, {"status", r.passed() ? "pass" : "fail"}, {"checks", cs}};
    if (!r.meta.empty()) out["metadata"] = r.meta;
    return out;
}

namespace {

std::string str(i64 x) { return std::to_string(x); }

NFElem rat(const FieldPtr& K, const mpq_class& q) { return NFElem::rational(K, q); }

std::string idx_str(const HermIndex& T) {
    return "(" + str(T.n) + "," + str(T.m) + "," + to_string(T.alpha) + ")";
}

std::vector<Eigenform> eigenbasis(int w, i64 D, i64 cap) {
    auto S = build_space(w, D, DirChar::kronecker_minus(D), cap);
    return eigen_decompose(S, {3, 5, 13});
}

// eta(tau)^3 eta(7 tau)^3, the weight-3 oracle at level 7
std::vector<mpz_class> eta_product(i64 P) {
    std::vector<mpz_class> s(P, 0);
    if (P > 1) s[1] = 1;
    for (i64 n = 1; n < P; ++n)
        for (i64 step : {n, 7 * n}) {
            if (step >= P) continue;
            for (int r = 0; r < 3; ++r)
                for (i64 i = P - 1; i >= step; --i) s[i] -= s[i - step];
        }
    return s;
}

// first nonzero element of S+_{k-1} over the configured weights
struct PlusPick {
    int k = 0;
    std::vector<NFElem> g;
    NFElem z;
};

std::optional<PlusPick> first_plus(const QuadField& F, const RunConfig& c, i64 cap) {
    for (int k : c.weights) {
        auto S = build_space(k - 1, c.D, DirChar::kronecker_minus(c.D), cap);
        auto P = plus_basis(S, F);
        if (P.empty()) continue;
        FieldPtr Kz = with_sqrt_minus_D(NumberField::rationals(), c.D);
        return PlusPick{k, coeff_vector(P[0], Kz, cap), NFElem::generator(Kz)};
    }
    return std::nullopt;
}

} // namespace

std::vector<PlusForm> plus_forms(const QuadField& F, int w, i64 cap) {
    std::vector<PlusForm> out;
    for (auto& h : eigenbasis(w, F.D(), cap)) {
        QExp g = h.coeffs - conjugate_form(h, F).coeffs;
        if (g.is_zero()) continue;
        PlusForm pf;
        pf.h = h;
        pf.Kz = with_sqrt_minus_D(h.field, F.D());
        pf.z = NFElem::generator(pf.Kz);
        pf.g = coeff_vector(g, pf.Kz, cap);
        out.push_back(std::move(pf));
    }
    return out;
}

std::optional<ExactBranch> exact_branch(const QuadField& F, int w, i64 cap, const RunConfig& c) {
    for (auto& h : eigenbasis(w, F.D(), cap)) {
        try {
            auto emb = std::make_shared<TowerEmbedding>(make_ring(c.p, c.padic_M, std::max(2, c.padic_f)));
            if (h.field->is_rationals()) emb->attach(h.field, {});
            else emb->attach(h.field, {{h.field->var(), c.embedding}});
            Stabilized st = p_stabilize(h, c.p, *emb, F);
            if (st.g.is_zero()) continue; // CM
            ExactBranch b;
            b.w = w;
            b.p = c.p;
            b.h = h;
            b.Kz = with_sqrt_minus_D(st.field, F.D());
            emb->attach(b.Kz, {{"z", c.z_root}});
            b.z = NFElem::generator(b.Kz);
            b.alpha = st.alpha.lift_to(b.Kz);
            b.beta = st.beta.lift_to(b.Kz);
            b.g = coeff_vector(st.g, b.Kz, cap);
            b.f = coeff_vector(st.f, b.Kz, cap);
            b.st = std::move(st);
            b.emb = emb;
            return b;
        } catch (const EmbeddingAmbiguity&) {
        } catch (const NotOrdinary&) {
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- 1

Report gauss_suite(const RunConfig& c) {
    Report r{"gauss", {}};
    QuadField F(c.D);
    int n = 0;
    std::string bad;
    for (i64 N = 1; N <= 45; N += 2) {
        if (gcd(N, c.D) != 1) continue;
        for (i64 a = 1; a <= N * c.D; ++a) {
            if (gcd(a, N * c.D) != 1) continue;
            ++n;
            if (gauss_sum(F, a, N) != CycloNum(N * F.chi(N)) && bad.empty()) bad = "a=" + str(a) + " N=" + str(N);
        }
    }
    r.add("G(a,N) = N chi(N), odd N <= 45", bad.empty(), bad.empty() ? str(n) + " pairs" : bad);
    for (i64 p : {i64(11), i64(23)}) {
        if (F.chi(p) != 1) continue;
        n = 0;
        bad.clear();
        for (i64 cc = 1; cc <= 12; ++cc)
            for (i64 a = 1; a <= p * cc; ++a) {
                if (gcd(a, p * cc) != 1) continue;
                ++n;
                if (gauss_sum(F, a, p * cc) * frac(1, p * cc) != gauss_sum(F, a, cc) * frac(1, cc) && bad.empty())
                    bad = "a=" + str(a) + " c=" + str(cc);
            }
        r.add("G(a,pc)/pc = G(a,c)/c, p = " + str(p), bad.empty(), bad.empty() ? str(n) + " pairs" : bad);
    }
    return r;
}

// ---------------------------------------------------------------- 2

Report theta_suite(const RunConfig& c) {
    Report r{"theta", {}};
    QuadField F(c.D);
    std::mt19937_64 rng(c.seed);
    int bad = -1;
    for (int i = 0; i < 50; ++i) {
        auto s1 = random_sl2(rng, 20), s2 = random_sl2(rng, 20);
        if (theta_matrix(F, s1 * s2).entries != matmul(theta_matrix(F, s1).entries, theta_matrix(F, s2).entries) && bad < 0) bad = i;
    }
    r.add("cocycle, 50 random pairs", bad < 0, bad < 0 ? "" : "pair " + str(bad));
    bad = -1;
    int neg = 0;
    for (int i = 0; i < 20;) {
        auto s = random_gamma0(rng, c.D, 60);
        if (s.c == 0) continue;
        if (s.c < 0) s = -s;
        neg += s.d < 0;
        if (theta_matrix(F, s).entries != theta_closed_form(F, s) && bad < 0) bad = i;
        ++i;
    }
    r.add("closed form for D | c, 20 matrices", bad < 0, bad < 0 ? str(neg) + " with d < 0" : "matrix " + str(bad));
    std::vector<i64> ps{c.p};
    if (c.p != 23 && F.chi(23) == 1) ps.push_back(23);
    for (i64 p : ps) {
        auto pi = split_prime(F, p);
        std::string w;
        int n = 0;
        for (auto& g : gamma0_generators(p)) {
            ++n;
            if (!pi_twist_check(F, g, p, pi) && w.empty()) w = "generator " + str(n);
        }
        for (int i = 0; i < 30; ++i) {
            ++n;
            if (!pi_twist_check(F, random_gamma0(rng, p, 50), p, pi) && w.empty()) w = "random " + str(i);
        }
        r.add("pi-twist, Gamma0(" + str(p) + ") generators + 30 random", w.empty(), w.empty() ? str(n) + " matrices" : w);
    }
    return r;
}

// ---------------------------------------------------------------- 3

Report elliptic_suite(const RunConfig& c) {
    Report r{"elliptic", {}};
    QuadField F(c.D);
    const DirChar chi = DirChar::kronecker_minus(c.D);
    if (c.D == 7) {
        const i64 st = sturm_bound(3, 7);
        auto S = build_space(3, 7, chi, std::max<i64>(st + 1, 5));
        bool ok = S.cusp_dim == 1;
        std::string w = "dim " + str(S.cusp_dim);
        if (ok) {
            auto& f = S.cusp[0];
            ok = f.coeff(2).rational_value() == -3 && f.coeff(3).rational_value() == 0 && f.coeff(4).rational_value() == 5;
            auto eta = eta_product(std::max<i64>(st + 1, 5));
            for (i64 n = 0; n < static_cast<i64>(eta.size()); ++n)
                if (f.coeff(n).rational_value() != mpq_class(eta[n])) {
                    ok = false;
                    w = "differs from eta product at n = " + str(n);
                    break;
                }
        }
        r.add("S_3(7) = <eta^3(tau) eta^3(7 tau)>", ok, w);
    }
    for (size_t i = 0; i < std::min<size_t>(2, c.weights.size()); ++i) {
        const int w = c.weights[i] - 1;
        const i64 st = sturm_bound(w, c.D);
        auto E = eigenbasis(w, c.D, st + 40);
        int deg = 0;
        std::string eu, pl;
        for (size_t j = 0; j < E.size(); ++j) {
            auto& h = E[j];
            deg += h.field->degree();
            if ((!euler_recursion_holds(h, st) || !hecke_eigen_holds(h, st)) && eu.empty()) eu = "orbit " + str(j);
            if (!is_plus(h.coeffs - conjugate_form(h, F).coeffs, c.D, w, F) && pl.empty()) pl = "orbit " + str(j);
        }
        const int dim = dim_oracle(w, c.D, chi);
        r.add("weight " + str(w) + ": orbits fill S_w", deg == dim, str(E.size()) + " orbits, total degree " + str(deg) + " of " + str(dim));
        r.add("weight " + str(w) + ": Euler recursion to Sturm bound " + str(st), eu.empty(), eu);
        r.add("weight " + str(w) + ": h - h^c in the plus space", pl.empty(), pl);
    }
    return r;
}

// ---------------------------------------------------------------- 4

Report roundtrip_suite(const RunConfig& c) {
    Report r{"roundtrip", {}};
    QuadField F(c.D);
    const int w = c.k0 - 1;
    const i64 cap = std::max<i64>(c.effective_qprec(), 200);
    auto S = build_space(w, c.D, DirChar::kronecker_minus(c.D), cap);
    auto P = plus_basis(S, F);
    FieldPtr Kz = with_sqrt_minus_D(NumberField::rationals(), c.D);
    const NFElem z = NFElem::generator(Kz);
    std::string bad;
    for (size_t i = 0; i < P.size(); ++i) {
        auto g = coeff_vector(P[i], Kz, cap);
        if (descend_W_D(F, krieg_components(F, g, c.k0, z), 1, z) != g && bad.empty()) bad = "basis element " + str(i);
    }
    r.add("S+_" + str(w) + " nonzero", !P.empty(), "dim " + str(P.size()));
    if (!P.empty()) r.add("descend(krieg(g)) = g on S+_" + str(w), bad.empty(), bad.empty() ? "cap " + str(cap) : bad);

    auto br = exact_branch(F, w, cap, c);
    r.add("non-CM ordinary branch at weight " + str(w), br.has_value(), br ? "Hecke field degree " + str(br->h.field->degree()) : "only CM or non-ordinary forms");
    if (!br) return r;
    const auto pi = split_prime(F, c.p);
    const NFElem one = rat(br->Kz, 1);
    auto phi = p_old_components(F, one, br->g, -br->beta, br->g, c.p, pi, c.k0, br->z);
    auto H = lift(F, phi, c.herm_bound);
    auto m = maass_membership(F, H);
    r.add("maass_membership(lift(f))", m.ok, m.witness ? idx_str(*m.witness) : str(H.table.size()) + " indices");
    if (!m.ok) return r;
    const i64 L = c.D * c.herm_bound * c.herm_bound;
    // representable: l occurs as detD of some index in the window
    std::set<i64> rep;
    for (auto& [T, v] : H.table) rep.insert(det_D(F, T));
    std::string ba, bf;
    int n = 0;
    for (i64 l = 1; l <= L; ++l) {
        if (!a_D(F, l) || !rep.count(l)) continue;
        ++n;
        if (m.alpha[l] != phi.alpha[l] && ba.empty()) ba = "l = " + str(l);
        NFElem al = br->z * mpq_class(frac(a_D(F, l) * F.chi(c.p), c.D)) * m.alpha[l];
        if (al != br->f[l] && bf.empty()) bf = "l = " + str(l);
    }
    r.add("recovered alpha* = alpha*(f), l <= " + str(L), ba.empty(), ba.empty() ? str(n) + " representable l" : ba);
    r.add("a_l(f) from alpha*, l <= " + str(L), bf.empty(), bf);
    return r;
}

// ---------------------------------------------------------------- 5

Report fourier_jacobi_suite(const RunConfig& c) {
    Report r{"fourier_jacobi", {}};
    QuadField F(c.D);
    const i64 b = std::max<i64>(4, c.herm_bound), strip = 4 * b, cap = c.D * strip + 1;
    auto pk = first_plus(F, c, cap);
    r.add("nonzero plus form among the weights", pk.has_value(), pk ? "k = " + str(pk->k) : "");
    if (pk) {
        auto H = lift(F, krieg_components(F, pk->g, pk->k, pk->z), b, strip);
        for (i64 m = 1; m <= 4; ++m)
            r.add("level 1, k = " + str(pk->k) + ", m = " + str(m), fourier_jacobi_check(F, H, m));
    }
    auto br = exact_branch(F, c.k0 - 1, cap, c);
    if (br) {
        const auto pi = split_prime(F, c.p);
        auto H = maass_lift(F, rat(br->Kz, 1), br->g, -br->beta, br->g, c.p, pi, c.k0, br->z, b, strip);
        for (i64 m = 1; m <= 4; ++m)
            r.add("level " + str(c.p) + ", k = " + str(c.k0) + ", m = " + str(m), fourier_jacobi_check(F, H, m));
    }
    return r;
}

// ---------------------------------------------------------------- 6

Report descent_suite(const RunConfig& c) {
    Report r{"descent", {}};
    QuadField F(c.D);
    const int w = c.k0 - 1;
    const i64 b = c.herm_bound, cap = c.D * c.p * c.p * b * b + 1;
    auto br = exact_branch(F, w, cap, c);
    r.add("non-CM ordinary branch at weight " + str(w), br.has_value(), br ? "" : "nothing to test: only CM or non-ordinary forms");
    if (!br) return r;
    const i64 st = sturm_bound(w, c.D * c.p);
    auto uf = u_shift(br->st.f, c.p).truncate(st + 1);
    r.add("U_p f = alpha f to Sturm bound " + str(st), uf.agrees_with((br->st.alpha * br->st.f).truncate(st + 1)));
    r.add("alpha is a p-adic unit", br->emb->map(br->alpha).is_unit());

    const auto pi = split_prime(F, c.p);
    auto phi = p_old_components(F, rat(br->Kz, 1), br->g, -br->beta, br->g, c.p, pi, c.k0, br->z);
    auto U = u_p(F, lift_multiples(F, phi, b, c.p), c.p, UpNorm::arithmetic);
    auto L = lift(F, phi, b);
    const NFElem a2 = br->alpha * br->alpha;
    std::string bad;
    int worst = c.padic_M;
    const PadicScalar a2p = br->emb->map(a2);
    for (auto& [T, v] : U.table) {
        const NFElem& l = L.at(F, T);
        if (v != a2 * l && bad.empty()) bad = idx_str(T);
        worst = std::min(worst, agree_val(br->emb->map(v), a2p * br->emb->map(l)));
    }
    r.add("U_p lift = alpha^2 lift, max(n,m) <= " + str(b), bad.empty(), bad.empty() ? str(U.table.size()) + " indices" : bad);
    r.add("same mod p^" + str(c.padic_M), worst >= c.padic_M, "", worst);
    return r;
}

// ---------------------------------------------------------------- 7

namespace {

void interp_checks(Report& r, const RunConfig& c, const RingPtr& R) {
    int worst = c.padic_M, eps_max = 0;
    std::string bad;
    for (i64 d = 1; d <= 20; ++d) {
        if (d % c.p == 0) continue;
        ASeries A = a_d_series(d, c.k0, R, c.deg);
        for (int k : c.weights) {
            int loss = 0;
            int v = interpolation_valuation(A, k, &loss);
            eps_max = std::max(eps_max, loss);
            worst = std::min(worst, v);
            if (v < c.padic_M - loss && bad.empty()) bad = "d = " + str(d) + ", k = " + str(k);
        }
    }
    r.add("A_d((1+p)^k - 1) = omega(d)^-k d^(k-1), d <= 20", bad.empty(), bad, worst);
    r.add("truncation loss eps <= 2", eps_max <= 2, "eps = " + str(eps_max));
}

} // namespace

Report interp_suite(const RunConfig& c) {
    Report r{"interp", {}};
    interp_checks(r, c, make_ring(c.p, c.padic_M, c.padic_f));
    return r;
}

Report family_suite(const RunConfig& c) {
    Report r{"family", {}};
    QuadField F(c.D);
    FamilySample s = build_family(family_options(c));
    r.meta = s.metadata;
    bool nonzero = false;
    for (auto& b : s.data)
        for (auto& x : b.f) nonzero = nonzero || !x.is_zero();
    r.add("branch is not CM (f' != 0)", nonzero,
          nonzero ? "anchor a_3 = " + s.metadata["anchor_a3"] : "anchor at weight " + str(c.k0 - 1) + " is the CM form, so f' = 0 at every weight");
    interp_checks(r, c, s.R);

    std::string bad;
    for (auto& b : s.data) {
        if (!padic_hecke_holds(b.h, c.D, 30) && bad.empty()) bad = "k = " + str(b.k);
        if (b.alpha * b.beta != PadicScalar::from_int(s.R, mpz_pow(c.p, b.k - 2)) || !b.alpha.is_unit()) bad = "alpha beta at k = " + str(b.k);
    }
    r.add("eigen relations, alpha beta = p^(k-2), v(alpha) = 0", bad.empty(), bad);

    bad.clear();
    for (int k : c.weights)
        for (i64 n = 1; n <= 200 && bad.empty(); ++n) {
            try {
                family_b(s, n, k);
            } catch (const CrossCheckFailure& e) {
                bad = e.what();
            }
        }
    r.add("a_n(f') three ways, n <= 200", bad.empty(), bad);

    std::map<i64, ASeries> A;
    for (i64 d = 1; d <= std::max<i64>(c.herm_bound, 1); ++d)
        if (d % c.p) A.emplace(d, a_d_series(d, c.k0, s.R, c.deg));
    bad.clear();
    int worst = c.padic_M, cnt = 0;
    for (int k : c.weights) {
        auto H = direct_lift(s, F, k, c.herm_bound);
        for (auto& [T, v] : H.table) {
            int loss = 0;
            PadicScalar lam = lambda_assemble(s, A, F, T, k, &loss);
            int val = agree_val(lam, v);
            worst = std::min(worst, val);
            ++cnt;
            if (val < c.padic_M - loss && bad.empty()) bad = "k = " + str(k) + " T = " + idx_str(T);
        }
    }
    r.add("Lambda-adic assembly = direct lift, max(n,m) <= " + str(c.herm_bound), bad.empty(), bad.empty() ? str(cnt) + " coefficients" : bad, worst);

    std::vector<i64> ns;
    for (i64 n = 1; n <= 60; ++n)
        if (n % c.p) ns.push_back(n);
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < c.weights.size(); ++i)
        for (size_t j = i + 1; j < c.weights.size(); ++j) pairs.emplace_back(c.weights[i], c.weights[j]);
    auto rows = congruence_check(s, ns, pairs);
    worst = c.padic_M;
    int higher = 0;
    bad.clear();
    for (auto& row : rows) {
        worst = std::min(worst, row.valuation);
        higher += row.higher;
        if (row.valuation < 1 && bad.empty()) bad = "n = " + str(row.n) + " k = " + str(row.k1) + "," + str(row.k2);
    }
    r.add("b_n(k) = b_n(k') mod p", bad.empty(), bad.empty() ? str(higher) + "/" + str(rows.size()) + " also agree mod p^(v+1) (recorded only)" : bad, worst);
    return r;
}

// ---------------------------------------------------------------- 8

Report negative_suite(const RunConfig& c) {
    Report r{"negative", {}};
    QuadField F(c.D);
    const i64 b = c.herm_bound, st = b * b, cap = c.D * st + 1;
    auto pk = first_plus(F, c, cap);
    r.add("nonzero plus form among the weights", pk.has_value());
    if (pk) {
        auto H = lift(F, krieg_components(F, pk->g, pk->k, pk->z), b, st);
        int total = 0, cm = 0, cfj = 0;
        for (auto& [T, v] : H.table) {
            if (std::max(T.n, T.m) > b) continue;
            auto bad = H;
            bad.table[T] += rat(v.field(), 1);
            ++total;
            cm += !maass_membership(F, bad).ok;
            bool fj = true;
            for (i64 m = 1; m <= b && fj; ++m) fj = fourier_jacobi_check(F, bad, m);
            cfj += !fj;
        }
        r.add("single corruption breaks maass_membership", total > 0 && cm == total, str(cm) + "/" + str(total));
        r.add("single corruption breaks fourier_jacobi_check", total > 0 && cfj == total, str(cfj) + "/" + str(total));
    }
    RunConfig bad = c;
    bad.p = 3;
    while (!is_prime(bad.p) || F.chi(bad.p) != -1) ++bad.p;
    bool rejected = false;
    try {
        validate(bad);
    } catch (const NotSplit&) {
        rejected = true;
    }
    r.add("non-split p rejected at config load", rejected, "p = " + str(bad.p));
    bool schema = false;
    try {
        qexp_from_json(json::parse(R"({"field": [], "den": 1, "prec": "5", "coeffs": [[1, ["1", "2"]]]})"));
    } catch (const SchemaViolation&) {
        schema = true;
    }
    r.add("malformed expansion rejected", schema);
    return r;
}

std::vector<Report> run_suite(const std::string& name, const RunConfig& c) {
    if (name == "theta") return {theta_suite(c)};
    if (name == "gauss") return {gauss_suite(c)};
    if (name == "hecke") return {elliptic_suite(c), descent_suite(c)};
    if (name == "family") return {family_suite(c)};
    if (name == "all")
        return {gauss_suite(c), theta_suite(c), elliptic_suite(c), roundtrip_suite(c), fourier_jacobi_suite(c),
                descent_suite(c), family_suite(c), negative_suite(c)};
    throw ConfigError("unknown suite '" + name + "'");
}

} // namespace hml
