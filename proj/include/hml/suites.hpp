#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hml/config.hpp"
#include "hml/elliptic.hpp"
#include "hml/embedding.hpp"
#include "hml/io.hpp"

namespace hml {

struct Check {
    std::string name;
    bool pass = false;
    int worst_valuation = -1; // p-adic checks only
    std::string witness;      // first failure, or what was covered
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    std::map<std::string, std::string> meta;
    bool passed() const; // false when empty
    Check& add(std::string name, bool pass, std::string witness = {}, int val = -1);
};
json report_json(const Report& r);

// h - h^c over Q(h)(sqrt(-D)), one per eigen-orbit with h != h^c
struct PlusForm {
    Eigenform h;
    FieldPtr Kz;
    NFElem z;
    std::vector<NFElem> g;
};
std::vector<PlusForm> plus_forms(const QuadField& F, int w, i64 cap);

// a non-CM branch at elliptic weight w, p-stabilized with alpha the unit root, exactly
struct ExactBranch {
    int w = 0;
    i64 p = 0;
    Eigenform h;
    Stabilized st;
    FieldPtr Kz; // st.field(sqrt(-D))
    NFElem z, alpha, beta;
    std::vector<NFElem> g, f;
    std::shared_ptr<TowerEmbedding> emb; // into GR(p^M, 2), carries Kz
};
// first orbit that embeds, is ordinary and not CM; nullopt if there is none
std::optional<ExactBranch> exact_branch(const QuadField& F, int w, i64 cap, const RunConfig& c);

// one report per acceptance criterion
Report gauss_suite(const RunConfig& c);
Report theta_suite(const RunConfig& c);
Report elliptic_suite(const RunConfig& c);
Report roundtrip_suite(const RunConfig& c);
Report fourier_jacobi_suite(const RunConfig& c);
Report descent_suite(const RunConfig& c);
Report family_suite(const RunConfig& c);
Report negative_suite(const RunConfig& c);
Report interp_suite(const RunConfig& c);

// theta, gauss, hecke, family, all; throws ConfigError for anything else
std::vector<Report> run_suite(const std::string& name, const RunConfig& c);

} // namespace hml
