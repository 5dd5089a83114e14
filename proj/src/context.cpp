#include "fca/context.hpp"

#include <atomic>

namespace fca {
namespace {

ContextId next_context_id() {
    static std::atomic<ContextId> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

std::unordered_map<std::string, std::size_t> index_names(const std::vector<std::string>& names, const char* what) {
    std::unordered_map<std::string, std::size_t> lookup;
    lookup.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) throw Error(ErrorKind::UnknownName, std::string("empty ") + what + " name");
        if (!lookup.emplace(names[i], i).second)
            throw Error(ErrorKind::DuplicateName, std::string(what) + " '" + names[i] + "' declared twice");
    }
    return lookup;
}

}  // namespace

FormalContext::FormalContext() : FormalContext({}, {}, {}) {}

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<BitVector> rows)
    : id_(next_context_id()),
      objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      rows_(std::move(rows)),
      object_lookup_(index_names(objects_, "object")),
      attribute_lookup_(index_names(attributes_, "attribute")) {
    if (rows_.size() != objects_.size())
        throw Error(ErrorKind::DimensionMismatch, std::to_string(rows_.size()) + " incidence rows for " +
                                                      std::to_string(objects_.size()) + " objects");
    columns_.assign(attributes_.size(), BitVector(objects_.size()));
    for (std::size_t g = 0; g < rows_.size(); ++g) {
        if (rows_[g].width() != attributes_.size())
            throw Error(ErrorKind::DimensionMismatch, "row of object '" + objects_[g] + "' has width " +
                                                          std::to_string(rows_[g].width()) + ", expected " +
                                                          std::to_string(attributes_.size()));
        rows_[g].for_each([&](std::size_t m) { columns_[m].set(g); });
    }
}

FormalContext FormalContext::build(std::vector<std::string> objects, std::vector<std::string> attributes,
                                   std::span<const std::pair<std::string, std::string>> incidence) {
    std::vector<BitVector> rows(objects.size(), BitVector(attributes.size()));
    // Validate names before resolving pairs so duplicates win over unknowns.
    const auto objects_lookup = index_names(objects, "object");
    const auto attributes_lookup = index_names(attributes, "attribute");
    for (const auto& [g, m] : incidence) {
        auto gi = objects_lookup.find(g);
        if (gi == objects_lookup.end()) throw Error(ErrorKind::UnknownName, "undeclared object '" + g + "'");
        auto mi = attributes_lookup.find(m);
        if (mi == attributes_lookup.end()) throw Error(ErrorKind::UnknownName, "undeclared attribute '" + m + "'");
        rows[gi->second].set(mi->second);
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

FormalContext FormalContext::from_rows(std::vector<std::string> objects, std::vector<std::string> attributes,
                                       std::vector<BitVector> rows) {
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

std::optional<std::size_t> FormalContext::find_object(std::string_view name) const {
    auto it = object_lookup_.find(std::string(name));
    if (it == object_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> FormalContext::find_attribute(std::string_view name) const {
    auto it = attribute_lookup_.find(std::string(name));
    if (it == attribute_lookup_.end()) return std::nullopt;
    return it->second;
}

std::size_t FormalContext::object_index(std::string_view name) const {
    if (auto i = find_object(name)) return *i;
    throw Error(ErrorKind::UnknownName, "unknown object '" + std::string(name) + "'");
}

std::size_t FormalContext::attribute_index(std::string_view name) const {
    if (auto i = find_attribute(name)) return *i;
    throw Error(ErrorKind::UnknownName, "unknown attribute '" + std::string(name) + "'");
}

ObjectSet FormalContext::objects(std::span<const std::string> names) const {
    ObjectSet s = no_objects();
    for (const auto& n : names) s.insert(object_index(n));
    return s;
}

AttributeSet FormalContext::attributes(std::span<const std::string> names) const {
    AttributeSet s = no_attributes();
    for (const auto& n : names) s.insert(attribute_index(n));
    return s;
}

ObjectSet FormalContext::objects(std::initializer_list<std::string> names) const {
    return objects(std::span<const std::string>(names.begin(), names.size()));
}

AttributeSet FormalContext::attributes(std::initializer_list<std::string> names) const {
    return attributes(std::span<const std::string>(names.begin(), names.size()));
}

ObjectSet FormalContext::objects_from_bits(BitVector bits) const {
    if (bits.width() != object_count()) throw Error(ErrorKind::DimensionMismatch, "object bit vector width mismatch");
    return {id_, std::move(bits)};
}

AttributeSet FormalContext::attributes_from_bits(BitVector bits) const {
    if (bits.width() != attribute_count())
        throw Error(ErrorKind::DimensionMismatch, "attribute bit vector width mismatch");
    return {id_, std::move(bits)};
}

std::vector<std::string> FormalContext::names_of(const ObjectSet& s) const {
    check_owns(s);
    std::vector<std::string> out;
    s.bits().for_each([&](std::size_t i) { out.push_back(objects_[i]); });
    return out;
}

std::vector<std::string> FormalContext::names_of(const AttributeSet& s) const {
    check_owns(s);
    std::vector<std::string> out;
    s.bits().for_each([&](std::size_t i) { out.push_back(attributes_[i]); });
    return out;
}

AttributeSet derive_objects(const FormalContext& ctx, const ObjectSet& objects) {
    ctx.check_owns(objects);
    BitVector common(ctx.attribute_count(), true);
    objects.bits().for_each([&](std::size_t g) { common &= ctx.row(g); });
    return ctx.attributes_from_bits(std::move(common));
}

ObjectSet derive_attributes(const FormalContext& ctx, const AttributeSet& attributes) {
    ctx.check_owns(attributes);
    BitVector common(ctx.object_count(), true);
    attributes.bits().for_each([&](std::size_t m) { common &= ctx.column(m); });
    return ctx.objects_from_bits(std::move(common));
}

AttributeSet close_attributes(const FormalContext& ctx, const AttributeSet& attributes) {
    return derive_objects(ctx, derive_attributes(ctx, attributes));
}

ObjectSet close_objects(const FormalContext& ctx, const ObjectSet& objects) {
    return derive_attributes(ctx, derive_objects(ctx, objects));
}

}  // namespace fca
