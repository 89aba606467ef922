#pragma once

#include <string>

#include "json.hpp"

#include "hml/hermitian.hpp"
#include "hml/jacobi.hpp"
#include "hml/padic.hpp"
#include "hml/qseries.hpp"

namespace hml {

using json = nlohmann::json; // keys sorted, so dumps are deterministic

// towers: [{"var": "a", "minpoly": [coords of c_0, ..., c_{d-1}]}, ...] bottom level first,
// monic term implied; coordinates are rational strings over the level below
json field_to_json(const FieldPtr& F);
FieldPtr field_from_json(const json& j); // throws SchemaViolation
json elem_to_json(const NFElem& x);
NFElem elem_from_json(const json& j, const FieldPtr& F);
json qexp_to_json(const QExp& f);
QExp qexp_from_json(const json& j);

json alpha_table_json(const SpecialJacobiForm<NFElem>& phi);

json scalar_json(const NFElem& x);
json scalar_json(const PadicScalar& x);

template <class S>
json herm_to_json(const QuadField& F, const HermForm<S>& H) {
    json entries = json::array();
    for (auto& [T, v] : H.table) // std::map order: sorted canonical indices
        entries.push_back({{"n", T.n}, {"m", T.m}, {"x", T.alpha.x}, {"y", T.alpha.y}, {"detD", det_D(F, T)}, {"eps", eps(F, T)}, {"C", scalar_json(v)}});
    return {{"D", H.D}, {"k", H.k}, {"N", H.N}, {"bound", H.bound}, {"c0", scalar_json(H.c0)}, {"entries", entries}};
}

// n,m,x,y,detD,eps,C with C rounded to doubles per coordinate; lossy
std::string herm_csv(const QuadField& F, const HermForm<NFElem>& H);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& body);

} // namespace hml
