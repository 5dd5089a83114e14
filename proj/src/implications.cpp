#include "fca/implications.hpp"

namespace fca {

bool holds(const FormalContext& ctx, const Implication& implication) {
    ctx.check_owns(implication.premise);
    ctx.check_owns(implication.conclusion);
    return derive_attributes(ctx, implication.premise).is_subset_of(derive_attributes(ctx, implication.conclusion));
}

bool independent(const FormalContext& ctx, const AttributeSet& attributes) {
    ctx.check_owns(attributes);
    for (std::size_t x : attributes.indices()) {
        AttributeSet rest = attributes;
        rest.erase(x);
        AttributeSet single = ctx.no_attributes();
        single.insert(x);
        if (holds(ctx, {std::move(rest), std::move(single)})) return false;
    }
    return true;
}

}  // namespace fca
