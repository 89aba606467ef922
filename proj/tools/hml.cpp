// hml: batch front end. Every command writes JSON (stdout, or --output); errors go to stderr
// as {"error": kind, "message": ...}. Exit 0 ok, 1 check failure or module error, 2 usage/schema.
#include <iostream>

#include "CLI11.hpp"

#include "hml/core_field.hpp"
#include "hml/suites.hpp"

using namespace hml;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int fail(const std::string& kind, const std::string& msg, int code) {
    std::cerr << json{{"error", kind}, {"message", msg}}.dump() << "\n";
    return code;
}

void emit(const RunConfig& c, const json& j, const std::string& suffix = ".json") {
    const std::string body = j.dump(1) + "\n";
    if (c.output.empty()) std::cout << body;
    else write_file(c.output + suffix, body);
}

json config_json(const RunConfig& c) {
    return {{"D", c.D}, {"p", c.p}, {"k0", c.k0}, {"weights", c.weights}, {"herm_bound", c.herm_bound}, {"qprec", c.effective_qprec()},
            {"padic_M", c.padic_M}, {"padic_f", c.padic_f}, {"deg", c.deg}, {"seed", c.seed}, {"anchor", c.anchor},
            {"z_root", c.z_root}, {"embedding", c.embedding}};
}

int reports_out(const RunConfig& c, const std::vector<Report>& rs) {
    json arr = json::array();
    bool ok = true;
    for (auto& r : rs) {
        arr.push_back(report_json(r));
        ok = ok && r.passed();
    }
    emit(c, {{"config", config_json(c)}, {"reports", arr}, {"status", ok ? "pass" : "fail"}});
    return ok ? 0 : 1;
}

int cmd_field_info(const RunConfig& c) {
    QuadField F(c.D);
    json chi = json::array(), aD = json::array();
    for (i64 n = 0; n < c.D; ++n) chi.push_back(F.chi(n));
    for (i64 n = 0; n <= 30; ++n) aD.push_back(a_D(F, n));
    json j{{"D", c.D}, {"omega_norm", F.omega_norm()}, {"class_number", F.class_number()}, {"chi_mod_D", chi}, {"a_D_0_30", aD},
           {"sqrt_minus_D", sqrt_minus_D(F).str()}};
    if (F.chi(c.p) == 1) j["split_prime"] = {{"p", c.p}, {"pi", to_string(split_prime(F, c.p))}};
    else j["split_prime"] = {{"p", c.p}, {"pi", nullptr}, {"note", F.chi(c.p) == 0 ? "ramified" : "inert"}};
    emit(c, j);
    return 0;
}

int cmd_basis(const RunConfig& c, int w, i64 prec) {
    const DirChar chi = DirChar::kronecker_minus(c.D);
    auto S = build_space(w, c.D, chi, prec ? prec : sturm_bound(w, c.D) + 1);
    json cusp = json::array();
    for (auto& f : S.cusp) cusp.push_back(qexp_to_json(f));
    QuadField F(c.D);
    json plus = json::array();
    for (auto& f : plus_basis(S, F)) plus.push_back(qexp_to_json(f));
    emit(c, {{"weight", w}, {"level", c.D}, {"dim", S.dim}, {"cusp_dim", S.cusp_dim}, {"dim_oracle", dim_oracle(w, c.D, chi)},
             {"cusp", cusp}, {"plus", plus}});
    return 0;
}

QExp as_qexp(const std::vector<NFElem>& a, const FieldPtr& K) {
    QExp f(K, 1, mpq_class(static_cast<long>(a.size())));
    for (size_t n = 0; n < a.size(); ++n)
        if (!a[n].is_zero()) f.set(static_cast<i64>(n), a[n]);
    return f;
}

int cmd_eigenforms(const RunConfig& c, int w, i64 prec) {
    QuadField F(c.D);
    const i64 P = prec ? prec : c.effective_qprec();
    auto S = build_space(w, c.D, DirChar::kronecker_minus(c.D), P);
    auto E = eigen_decompose(S, {3, 5, 13});
    json arr = json::array();
    bool ok = true;
    for (auto& h : E) {
        const i64 st = std::min<i64>(sturm_bound(w, c.D), P - 1);
        bool eu = euler_recursion_holds(h, st);
        ok = ok && eu;
        QExp g = h.coeffs - conjugate_form(h, F).coeffs;
        json o{{"field", field_to_json(h.field)}, {"degree", h.field->degree()}, {"coeffs", qexp_to_json(h.coeffs)},
               {"euler_ok", eu}, {"cm", g.is_zero()}};
        if (!g.is_zero()) {
            FieldPtr Kz = with_sqrt_minus_D(h.field, c.D);
            o["lift_input"] = {{"k", w + 1}, {"form", qexp_to_json(g.lift_to(Kz))}};
        }
        arr.push_back(o);
    }
    emit(c, {{"weight", w}, {"level", c.D}, {"orbits", arr}});
    return ok ? 0 : 1;
}

int cmd_lift(const RunConfig& c, int k, int orbit, bool stabilize) {
    QuadField F(c.D);
    const i64 cap = c.effective_qprec();
    SpecialJacobiForm<NFElem> phi;
    std::string source;
    if (!c.input.empty()) {
        json in;
        try {
            in = json::parse(read_file(c.input));
        } catch (const json::exception& e) {
            throw SchemaViolation(e.what());
        }
        if (!in.is_object() || !in.contains("k") || !in.contains("form") || !in["k"].is_number_integer())
            throw SchemaViolation("lift input needs integer 'k' and a 'form' expansion");
        k = in["k"].get<int>();
        QExp g = qexp_from_json(in["form"]);
        FieldPtr Kz = g.field();
        bool has_z = false;
        for (const NumberField* L = Kz.get(); L && !L->is_rationals(); L = L->base().get()) has_z = has_z || L->var() == "z";
        if (!has_z) Kz = with_sqrt_minus_D(Kz, c.D);
        if (g.key_bound() < cap) throw InsufficientPrecision("form known below " + std::to_string(g.key_bound()) + ", need " + std::to_string(cap));
        const NFElem z = NFElem::generator(Kz);
        std::vector<NFElem> a = coeff_vector(g.lift_to(Kz), Kz, cap);
        phi = krieg_components(F, a, k, z);
        source = c.input;
    } else if (stabilize) {
        auto br = exact_branch(F, c.k0 - 1, cap, c);
        if (!br) throw NoBranch("no non-CM ordinary branch at weight " + std::to_string(c.k0 - 1));
        k = c.k0;
        phi = p_old_components(F, NFElem::rational(br->Kz, 1), br->g, -br->beta, br->g, c.p, split_prime(F, c.p), c.k0, br->z);
        source = "p-stabilized branch, weight " + std::to_string(c.k0 - 1);
    } else {
        auto P = plus_forms(F, k - 1, cap);
        if (orbit < 0 || orbit >= static_cast<int>(P.size()))
            throw Usage("orbit " + std::to_string(orbit) + " out of range; weight " + std::to_string(k - 1) + " has " + std::to_string(P.size()) + " non-CM orbits");
        phi = krieg_components(F, P[orbit].g, k, P[orbit].z);
        source = "orbit " + std::to_string(orbit) + ", weight " + std::to_string(k - 1);
    }
    auto H = lift(F, phi, c.herm_bound);
    // round trip: alpha* back from the table
    auto m = maass_membership(F, H);
    bool verified = m.ok;
    if (m.ok)
        for (auto& [T, v] : H.table) {
            const i64 d = det_D(F, T);
            if (m.alpha[d] != phi.alpha[d]) verified = false;
        }
    auto sparse = H;
    for (auto it = sparse.table.begin(); it != sparse.table.end();)
        it = it->second.is_zero() ? sparse.table.erase(it) : std::next(it);
    json j = herm_to_json(F, sparse);
    j["field"] = field_to_json(phi.alpha.at(0).field());
    j["source"] = source;
    j["verified"] = verified;
    const std::string base = c.output.empty() ? "lift" : c.output;
    write_file(base + ".json", j.dump(1) + "\n");
    write_file(base + ".csv", herm_csv(F, sparse));
    std::cout << json{{"json", base + ".json"}, {"csv", base + ".csv"}, {"entries", sparse.table.size()}, {"verified", verified}}.dump() << "\n";
    return verified ? 0 : 1;
}

int cmd_family(const RunConfig& c) {
    Report r = family_suite(c);
    json j = report_json(r);
    json out{{"D", c.D}, {"p", c.p}, {"k0", c.k0}, {"weights", c.weights}, {"M", c.padic_M}, {"checks", j["checks"]}};
    if (j.contains("metadata")) out["metadata"] = j["metadata"];
    emit(c, out);
    return r.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermitian Maass lifts: exact pipeline and p-adic checks"};
    app.set_config("--config", "", "flat 'key = value' file; command-line flags win");
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig c;
    app.add_option("--D", c.D, "prime discriminant, D = 3 mod 4, D > 3")->capture_default_str();
    app.add_option("--p", c.p, "split prime")->capture_default_str();
    app.add_option("--k0", c.k0, "anchor weight")->capture_default_str();
    app.add_option("--weights", c.weights, "Hermitian weights k = k0 mod p-1")->capture_default_str();
    app.add_option("--herm-bound,--herm_bound", c.herm_bound, "max(n, m) of the Hermitian table")->capture_default_str();
    app.add_option("--qprec", c.qprec, "q-expansion length; 0 means D*herm_bound^2 + 1")->capture_default_str();
    app.add_option("--padic-M,--padic_M", c.padic_M, "p-adic precision")->capture_default_str();
    app.add_option("--padic-f,--padic_f", c.padic_f, "residue degree of the p-adic ring")->capture_default_str();
    app.add_option("--deg", c.deg, "T-adic truncation of A_d")->capture_default_str();
    app.add_option("--seed", c.seed, "rng seed for random matrices")->capture_default_str();
    app.add_option("--anchor", c.anchor, "index of the anchor among ordinary forms at weight k0-1")->capture_default_str();
    app.add_option("--z-root,--z_root", c.z_root, "which square root of -D mod p^M")->capture_default_str();
    app.add_option("--embedding", c.embedding, "root index for the Hecke field generator")->capture_default_str();
    app.add_option("--match-bound,--match_bound", c.match_bound, "primes used to match branches mod p")->capture_default_str();
    app.add_option("--family-cap,--family_cap", c.family_cap, "q-expansion length per family weight")->capture_default_str();
    app.add_option("--input", c.input, "input file");
    app.add_option("--output", c.output, "output path (stem for lift)");

    int w = 7, k = 8, orbit = 0;
    i64 prec = 0;
    bool stabilize = false;
    std::string suite;
    auto* field_info = app.add_subcommand("field-info", "arithmetic of Q(sqrt(-D)) and the split prime");
    auto* basis = app.add_subcommand("basis", "basis of M_w(D, chi) and S+_w");
    basis->add_option("--weight", w, "elliptic weight")->required();
    basis->add_option("--prec", prec, "expansion length");
    auto* eig = app.add_subcommand("eigenforms", "Galois orbits of newforms in S_w(D, chi)");
    eig->add_option("--weight", w, "elliptic weight")->required();
    eig->add_option("--prec", prec, "expansion length");
    auto* lft = app.add_subcommand("lift", "Maass lift table (JSON + CSV) with round-trip verification");
    lft->add_option("--k", k, "Hermitian weight when lifting an internal orbit");
    lft->add_option("--orbit", orbit, "index among the non-CM orbits");
    lft->add_flag("--stabilize", stabilize, "lift the p-stabilized branch at weight k0-1 (level p)");
    auto* up = app.add_subcommand("up-check", "U_p on the branch and on its lift");
    auto* th = app.add_subcommand("theta-check", "cocycle, closed form and pi-twist of the theta matrices");
    auto* ga = app.add_subcommand("gauss-check", "quadratic Gauss sums");
    auto* fam = app.add_subcommand("family", "p-adic family report");
    auto* itp = app.add_subcommand("interp-check", "interpolation of d^(k-1) by A_d(T)");
    auto* chk = app.add_subcommand("check", "run an acceptance suite");
    chk->add_option("--suite", suite, "theta, gauss, hecke, family or all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        validate(c);
        if (*field_info) return cmd_field_info(c);
        if (*basis) return cmd_basis(c, w, prec);
        if (*eig) return cmd_eigenforms(c, w, prec);
        if (*lft) return cmd_lift(c, k, orbit, stabilize);
        if (*up) return reports_out(c, {descent_suite(c)});
        if (*th) return reports_out(c, {theta_suite(c)});
        if (*ga) return reports_out(c, {gauss_suite(c)});
        if (*fam) return cmd_family(c);
        if (*itp) return reports_out(c, {interp_suite(c)});
        if (*chk) {
            if (suite != "theta" && suite != "gauss" && suite != "hecke" && suite != "family" && suite != "all")
                return fail("Usage", "unknown suite '" + suite + "'", 2);
            return reports_out(c, run_suite(suite, c));
        }
    } catch (const Usage& e) {
        return fail("Usage", e.what(), 2);
    } catch (const Error& e) {
        const bool schema = e.kind() == "SchemaViolation" || e.kind() == "ConfigError" || e.kind() == "NotSplit" ||
                            e.kind() == "UnsupportedDiscriminant";
        return fail(e.kind(), e.what(), schema ? 2 : 1);
    } catch (const std::exception& e) {
        return fail("InternalError", e.what(), 1);
    }
    return 2;
}
