#include "fca/lattice.hpp"

#include <algorithm>
#include <string>

namespace fca {

ConceptLattice::ConceptLattice(FormalContext context, std::vector<FormalConcept> concepts,
                               std::vector<CoverEdge> covers)
    : context_(std::move(context)), concepts_(std::move(concepts)), covers_(std::move(covers)) {
    if (concepts_.empty()) throw Error(ErrorKind::EmptyInput, "a concept lattice has at least one concept");
    by_intent_.reserve(concepts_.size());
    for (std::size_t i = 0; i < concepts_.size(); ++i) {
        context_.check_owns(concepts_[i].intent);
        context_.check_owns(concepts_[i].extent);
        by_intent_.emplace(concepts_[i].intent.bits(), i);
        if (concepts_[i].extent.size() > concepts_[top_].extent.size()) top_ = i;
        if (concepts_[i].extent.size() < concepts_[bottom_].extent.size()) bottom_ = i;
    }
}

std::optional<std::size_t> ConceptLattice::index_of(const AttributeSet& intent) const {
    context_.check_owns(intent);
    auto it = by_intent_.find(intent.bits());
    if (it == by_intent_.end()) return std::nullopt;
    return it->second;
}

FormalConcept concept_of(const FormalContext& ctx, const AttributeSet& attributes) {
    ObjectSet extent = derive_attributes(ctx, attributes);
    AttributeSet intent = derive_objects(ctx, extent);
    return {std::move(extent), std::move(intent)};
}

FormalConcept concept_of(const FormalContext& ctx, const ObjectSet& objects) {
    AttributeSet intent = derive_objects(ctx, objects);
    ObjectSet extent = derive_attributes(ctx, intent);
    return {std::move(extent), std::move(intent)};
}

std::optional<AttributeSet> next_closure(const FormalContext& ctx, const AttributeSet& intent) {
    ctx.check_owns(intent);
    const std::size_t n = ctx.attribute_count();
    AttributeSet base = intent;
    for (std::size_t i = n; i-- > 0;) {
        if (base.contains(i)) {
            base.erase(i);
            continue;
        }
        AttributeSet candidate = base;
        candidate.insert(i);
        AttributeSet closed = close_attributes(ctx, candidate);
        // Canonicity: closing must not add any attribute smaller than i.
        if (closed.bits().equal_below(base.bits(), i)) return closed;
    }
    return std::nullopt;
}

std::vector<CoverEdge> compute_covers(const FormalContext& ctx, std::span<const FormalConcept> concepts,
                                      const std::unordered_map<BitVector, std::size_t, BitVectorHash>& by_intent) {
    std::vector<CoverEdge> edges;
    std::vector<BitVector> candidates;
    for (std::size_t upper = 0; upper < concepts.size(); ++upper) {
        const FormalConcept& c = concepts[upper];
        candidates.clear();
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
            if (c.intent.contains(m)) continue;
            BitVector extent = c.extent.bits() & ctx.column(m);
            if (std::find(candidates.begin(), candidates.end(), extent) == candidates.end())
                candidates.push_back(std::move(extent));
        }
        // Lower covers have the inclusion-maximal extents among the candidates.
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            bool maximal = true;
            for (std::size_t l = 0; l < candidates.size() && maximal; ++l)
                if (l != k && candidates[k].is_subset_of(candidates[l])) maximal = false;
            if (!maximal) continue;
            const AttributeSet intent = derive_objects(ctx, ctx.objects_from_bits(candidates[k]));
            auto it = by_intent.find(intent.bits());
            if (it == by_intent.end())
                throw Error(ErrorKind::DimensionMismatch, "cover target missing from concept list");
            edges.emplace_back(it->second, upper);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

ConceptLattice enumerate_concepts(const FormalContext& ctx, const EnumerationOptions& options) {
    std::vector<FormalConcept> concepts;
    std::unordered_map<BitVector, std::size_t, BitVectorHash> by_intent;
    std::optional<AttributeSet> intent = close_attributes(ctx, ctx.no_attributes());
    while (intent) {
        if (concepts.size() >= options.max_concepts)
            throw Error(ErrorKind::CapacityExceeded,
                        "more than " + std::to_string(options.max_concepts) + " concepts");
        by_intent.emplace(intent->bits(), concepts.size());
        concepts.push_back({derive_attributes(ctx, *intent), *intent});
        intent = next_closure(ctx, *intent);
    }
    auto covers = compute_covers(ctx, concepts, by_intent);
    return ConceptLattice(ctx, std::move(concepts), std::move(covers));
}

bool is_subconcept(const FormalConcept& lower, const FormalConcept& upper) {
    return lower.extent.is_subset_of(upper.extent);
}

FormalConcept meet(const FormalContext& ctx, std::span<const FormalConcept> concepts) {
    if (concepts.empty()) throw Error(ErrorKind::EmptyInput, "meet of an empty concept set");
    ObjectSet extent = ctx.all_objects();
    for (const auto& c : concepts) {
        ctx.check_owns(c.extent);
        extent &= c.extent;
    }
    AttributeSet intent = derive_objects(ctx, extent);
    return {std::move(extent), std::move(intent)};
}

FormalConcept join(const FormalContext& ctx, std::span<const FormalConcept> concepts) {
    if (concepts.empty()) throw Error(ErrorKind::EmptyInput, "join of an empty concept set");
    AttributeSet intent = ctx.all_attributes();
    ObjectSet objects = ctx.no_objects();
    for (const auto& c : concepts) {
        ctx.check_owns(c.intent);
        intent &= c.intent;
        objects |= c.extent;
    }
    return {close_objects(ctx, objects), std::move(intent)};
}

FormalConcept top(const ConceptLattice& lattice) { return lattice.top(); }
FormalConcept bottom(const ConceptLattice& lattice) { return lattice.bottom(); }

}  // namespace fca
