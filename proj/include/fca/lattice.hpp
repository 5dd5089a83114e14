#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fca/context.hpp"

namespace fca {

/// (extent, intent) with extent' = intent and intent' = extent.
struct FormalConcept {
    ObjectSet extent;
    AttributeSet intent;

    friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

struct EnumerationOptions {
    std::size_t max_concepts = 1'000'000;
};

/// (lower, upper): `lower` is a lower cover of `upper`.
using CoverEdge = std::pair<std::size_t, std::size_t>;

/// All concepts of a context, indexed in lectic order of their intents
/// (index 0 is the top concept, the last index the bottom), plus the cover
/// relation sorted by (lower, upper).
class ConceptLattice {
public:
    ConceptLattice(FormalContext context, std::vector<FormalConcept> concepts, std::vector<CoverEdge> covers);

    const FormalContext& context() const noexcept { return context_; }
    const std::vector<FormalConcept>& concepts() const noexcept { return concepts_; }
    std::size_t size() const noexcept { return concepts_.size(); }
    const FormalConcept& operator[](std::size_t i) const { return concepts_[i]; }
    const std::vector<CoverEdge>& covers() const noexcept { return covers_; }

    /// Canonical index of the concept with this intent, if the intent is closed.
    std::optional<std::size_t> index_of(const AttributeSet& intent) const;

    const FormalConcept& top() const { return concepts_[top_]; }
    const FormalConcept& bottom() const { return concepts_[bottom_]; }
    std::size_t top_index() const noexcept { return top_; }
    std::size_t bottom_index() const noexcept { return bottom_; }

private:
    FormalContext context_;
    std::vector<FormalConcept> concepts_;
    std::vector<CoverEdge> covers_;
    std::unordered_map<BitVector, std::size_t, BitVectorHash> by_intent_;
    std::size_t top_ = 0;
    std::size_t bottom_ = 0;
};

/// Concept generated by an attribute set: (X', X'').
FormalConcept concept_of(const FormalContext& ctx, const AttributeSet& attributes);
/// Concept generated by an object set: (A'', A').
FormalConcept concept_of(const FormalContext& ctx, const ObjectSet& objects);

/// Lectic successor of a closed intent: the next closed set after `intent`
/// in lectic order, or nullopt when `intent` is the full attribute set.
std::optional<AttributeSet> next_closure(const FormalContext& ctx, const AttributeSet& intent);

/// Enumerates every concept in lectic order and computes the covers.
/// Throws CapacityExceeded when the count would exceed options.max_concepts.
ConceptLattice enumerate_concepts(const FormalContext& ctx, const EnumerationOptions& options = {});

/// Lower covers of each concept via single-attribute extensions of its
/// intent, as (lower, upper) edges sorted ascending.
std::vector<CoverEdge> compute_covers(const FormalContext& ctx, std::span<const FormalConcept> concepts,
                                      const std::unordered_map<BitVector, std::size_t, BitVectorHash>& by_intent);

/// (A1, B1) <= (A2, B2) iff A1 is a subset of A2.
bool is_subconcept(const FormalConcept& lower, const FormalConcept& upper);

/// Greatest common subconcept: (intersection of extents, its derivation).
/// Throws EmptyInput or ContextMismatch.
FormalConcept meet(const FormalContext& ctx, std::span<const FormalConcept> concepts);
/// Least common superconcept: (closure of union of extents, intersection of intents).
FormalConcept join(const FormalContext& ctx, std::span<const FormalConcept> concepts);

FormalConcept top(const ConceptLattice& lattice);
FormalConcept bottom(const ConceptLattice& lattice);

}  // namespace fca
