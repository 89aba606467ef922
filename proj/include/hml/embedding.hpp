#pragma once

#include <map>
#include <string>
#include <vector>

#include "hml/numfield.hpp"
#include "hml/padic_ring.hpp"

namespace hml {

// generator name -> index into the sorted list of candidate roots
using EmbeddingChoice = std::map<std::string, int>;

// A ring map from a number-field tower into GR(p^K, f), fixed one generator at a time.
class TowerEmbedding {
public:
    explicit TowerEmbedding(RingPtr R) : R_(std::move(R)) {}
    const RingPtr& ring() const { return R_; }

    // roots of the top minimal polynomial of F over the (already embedded) base, sorted
    std::vector<PadicScalar> candidate_roots(const FieldPtr& F) const;
    // embeds F and its ancestors; throws EmbeddingAmbiguity when a level has several
    // roots and no choice, or no root at all
    void attach(const FieldPtr& F, const EmbeddingChoice& choice);
    void attach_with_root(const FieldPtr& F, const PadicScalar& root);
    bool has(const FieldPtr& F) const;

    PadicScalar map(const NFElem& x) const;
    PadicScalar map(const mpq_class& q) const { return PadicScalar::from_mpq(R_, q); }
    // human-readable record of the generator images
    std::vector<std::pair<std::string, std::string>> describe() const;

private:
    PadicScalar map_coords(const NumberField* F, const mpq_class* c) const;
    RingPtr R_;
    std::map<const NumberField*, PadicScalar> gen_;
    std::vector<FieldPtr> keep_;
};

} // namespace hml
