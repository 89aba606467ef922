#include "hml/embedding.hpp"

#include <algorithm>

#include "hml/error.hpp"

namespace hml {

bool TowerEmbedding::has(const FieldPtr& F) const { return F->is_rationals() || gen_.count(F.get()); }

std::vector<PadicScalar> TowerEmbedding::candidate_roots(const FieldPtr& F) const {
    if (F->is_rationals()) return {};
    if (!has(F->base())) throw EmbeddingAmbiguity("base of '" + F->var() + "' is not embedded");
    std::vector<PadicScalar> poly;
    for (const auto& c : F->minpoly()) poly.push_back(map(c));
    poly.push_back(PadicScalar::from_int(R_, 1));
    std::vector<PadicScalar> roots;
    try {
        roots = simple_roots(poly);
    } catch (const NotDiagonalizable&) {
        throw EmbeddingAmbiguity("minimal polynomial of '" + F->var() + "' has a repeated root modulo p");
    }
    std::sort(roots.begin(), roots.end(), [](const PadicScalar& a, const PadicScalar& b) { return a.coords() < b.coords(); });
    return roots;
}

void TowerEmbedding::attach(const FieldPtr& F, const EmbeddingChoice& choice) {
    if (has(F)) return;
    attach(F->base(), choice);
    auto roots = candidate_roots(F);
    if (roots.empty())
        throw EmbeddingAmbiguity("no root of the minimal polynomial of '" + F->var() + "' in GR(" + std::to_string(R_->p()) + "^" + std::to_string(R_->K()) + ", " + std::to_string(R_->f()) + "); raise the residue degree");
    int idx = 0;
    auto it = choice.find(F->var());
    if (it != choice.end()) {
        idx = it->second;
        if (idx < 0 || idx >= static_cast<int>(roots.size()))
            throw EmbeddingAmbiguity("choice " + std::to_string(idx) + " for '" + F->var() + "' out of range (" + std::to_string(roots.size()) + " roots)");
    } else if (roots.size() > 1) {
        throw EmbeddingAmbiguity(std::to_string(roots.size()) + " embeddings of '" + F->var() + "'; set embed_" + F->var());
    }
    gen_.emplace(F.get(), roots[idx]);
    keep_.push_back(F);
}

void TowerEmbedding::attach_with_root(const FieldPtr& F, const PadicScalar& root) {
    if (!has(F->base())) throw EmbeddingAmbiguity("base of '" + F->var() + "' is not embedded");
    gen_[F.get()] = root;
    keep_.push_back(F);
}

PadicScalar TowerEmbedding::map_coords(const NumberField* F, const mpq_class* c) const {
    if (F->is_rationals()) return PadicScalar::from_mpq(R_, c[0]);
    auto it = gen_.find(F);
    if (it == gen_.end()) throw EmbeddingAmbiguity("field '" + F->var() + "' is not embedded");
    const int nb = F->base()->degree();
    PadicScalar r(R_), pw = PadicScalar::from_int(R_, 1);
    for (int i = 0; i < F->rel_degree(); ++i) {
        r += map_coords(F->base().get(), c + i * nb) * pw;
        pw *= it->second;
    }
    return r;
}

PadicScalar TowerEmbedding::map(const NFElem& x) const { return map_coords(x.field().get(), x.coords().data()); }

std::vector<std::pair<std::string, std::string>> TowerEmbedding::describe() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& F : keep_) out.push_back({F->var(), gen_.at(F.get()).str()});
    return out;
}

} // namespace hml
