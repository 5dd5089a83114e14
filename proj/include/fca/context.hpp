#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fca/bit_vector.hpp"
#include "fca/error.hpp"

namespace fca {

/// Identity of a FormalContext instance. Copies of a context share it.
using ContextId = std::uint64_t;

struct ObjectTag {};
struct AttributeTag {};

/// Subset of the objects (or attributes) of one context, stored as a bit
/// vector over declaration indices. Binary operations between sets of
/// different contexts raise ContextMismatch.
template <typename Tag>
class IndexSet {
public:
    IndexSet(ContextId owner, BitVector members) : owner_(owner), members_(std::move(members)) {}

    ContextId context_id() const noexcept { return owner_; }
    const BitVector& bits() const noexcept { return members_; }
    std::size_t universe_size() const noexcept { return members_.width(); }
    std::size_t size() const noexcept { return members_.count(); }
    bool empty() const noexcept { return members_.none(); }
    bool contains(std::size_t i) const noexcept { return i < members_.width() && members_.test(i); }
    std::vector<std::size_t> indices() const { return members_.indices(); }

    void insert(std::size_t i) {
        check_index(i);
        members_.set(i);
    }
    void erase(std::size_t i) {
        check_index(i);
        members_.reset(i);
    }

    bool is_subset_of(const IndexSet& o) const {
        check_same(o);
        return members_.is_subset_of(o.members_);
    }

    IndexSet& operator&=(const IndexSet& o) {
        check_same(o);
        members_ &= o.members_;
        return *this;
    }
    IndexSet& operator|=(const IndexSet& o) {
        check_same(o);
        members_ |= o.members_;
        return *this;
    }
    IndexSet& operator-=(const IndexSet& o) {
        check_same(o);
        members_ -= o.members_;
        return *this;
    }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

    void check_same(const IndexSet& o) const {
        if (o.owner_ != owner_) throw Error(ErrorKind::ContextMismatch, "sets belong to different contexts");
    }

private:
    void check_index(std::size_t i) const {
        if (i >= members_.width())
            throw Error(ErrorKind::UnknownName,
                        "index " + std::to_string(i) + " outside universe of " + std::to_string(members_.width()));
    }

    ContextId owner_;
    BitVector members_;
};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

/// The triple (objects, attributes, incidence). Immutable once built; rows
/// and columns of the incidence matrix are both materialized so derivation in
/// either direction is a fold of bit-ands.
class FormalContext {
public:
    /// Empty 0 x 0 context.
    FormalContext();

    /// Builds a context from names and (object, attribute) incidence pairs.
    /// Throws DuplicateName or UnknownName.
    static FormalContext build(std::vector<std::string> objects, std::vector<std::string> attributes,
                               std::span<const std::pair<std::string, std::string>> incidence);

    /// Builds a context from an explicit row matrix; each row has width |attributes|.
    static FormalContext from_rows(std::vector<std::string> objects, std::vector<std::string> attributes,
                                   std::vector<BitVector> rows);

    ContextId id() const noexcept { return id_; }
    std::size_t object_count() const noexcept { return objects_.size(); }
    std::size_t attribute_count() const noexcept { return attributes_.size(); }
    const std::vector<std::string>& object_names() const noexcept { return objects_; }
    const std::vector<std::string>& attribute_names() const noexcept { return attributes_; }

    bool incident(std::size_t object, std::size_t attribute) const noexcept { return rows_[object].test(attribute); }
    /// Attributes of one object.
    const BitVector& row(std::size_t object) const noexcept { return rows_[object]; }
    /// Objects having one attribute.
    const BitVector& column(std::size_t attribute) const noexcept { return columns_[attribute]; }

    std::optional<std::size_t> find_object(std::string_view name) const;
    std::optional<std::size_t> find_attribute(std::string_view name) const;
    /// Throws UnknownName.
    std::size_t object_index(std::string_view name) const;
    std::size_t attribute_index(std::string_view name) const;

    ObjectSet no_objects() const { return {id_, BitVector(object_count())}; }
    ObjectSet all_objects() const { return {id_, BitVector(object_count(), true)}; }
    AttributeSet no_attributes() const { return {id_, BitVector(attribute_count())}; }
    AttributeSet all_attributes() const { return {id_, BitVector(attribute_count(), true)}; }

    ObjectSet objects(std::span<const std::string> names) const;
    AttributeSet attributes(std::span<const std::string> names) const;
    ObjectSet objects(std::initializer_list<std::string> names) const;
    AttributeSet attributes(std::initializer_list<std::string> names) const;
    ObjectSet objects_from_bits(BitVector bits) const;
    AttributeSet attributes_from_bits(BitVector bits) const;

    std::vector<std::string> names_of(const ObjectSet& s) const;
    std::vector<std::string> names_of(const AttributeSet& s) const;

    /// Throws ContextMismatch unless the set was produced by this context.
    template <typename Tag>
    void check_owns(const IndexSet<Tag>& s) const {
        if (s.context_id() != id_) throw Error(ErrorKind::ContextMismatch, "set belongs to a different context");
    }

    /// Content equality: names and incidence, ignoring identity.
    bool same_content(const FormalContext& o) const noexcept {
        return objects_ == o.objects_ && attributes_ == o.attributes_ && rows_ == o.rows_;
    }

private:
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes, std::vector<BitVector> rows);

    ContextId id_;
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<BitVector> rows_;
    std::vector<BitVector> columns_;
    std::unordered_map<std::string, std::size_t> object_lookup_;
    std::unordered_map<std::string, std::size_t> attribute_lookup_;
};

/// A' : attributes shared by every object in A. Empty A yields all attributes.
AttributeSet derive_objects(const FormalContext& ctx, const ObjectSet& objects);
/// B' : objects having every attribute in B. Empty B yields all objects.
ObjectSet derive_attributes(const FormalContext& ctx, const AttributeSet& attributes);
/// X'' on attribute sets.
AttributeSet close_attributes(const FormalContext& ctx, const AttributeSet& attributes);
/// A'' on object sets.
ObjectSet close_objects(const FormalContext& ctx, const ObjectSet& objects);

}  // namespace fca
