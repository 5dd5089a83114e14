#pragma once

#include "fca/context.hpp"

namespace fca {

/// X -> Y over the attributes of one context.
struct Implication {
    AttributeSet premise;
    AttributeSet conclusion;
};

/// True iff every object having all of the premise also has all of the
/// conclusion, i.e. premise' is a subset of conclusion'.
bool holds(const FormalContext& ctx, const Implication& implication);

/// True iff no x in X is implied by X \ {x}. For a singleton {x} this tests
/// the empty-premise implication {} -> {x}, so an attribute every object has
/// is never independent.
bool independent(const FormalContext& ctx, const AttributeSet& attributes);

}  // namespace fca
