#pragma once

// Test-only fixtures and oracles. The oracles read the incidence matrix
// directly and never call the library's derivation or enumeration code.

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fca/context.hpp"
#include "fca/lattice.hpp"

namespace fca::testing {

inline std::string data_path(const std::string& name) { return std::string(FCA_DATA_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

using Rows = std::vector<std::pair<std::string, std::vector<std::string>>>;

inline FormalContext context_from_rows(const std::vector<std::string>& attributes, const Rows& rows) {
    std::vector<std::string> objects;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [g, ms] : rows) {
        objects.push_back(g);
        for (const auto& m : ms) pairs.emplace_back(g, m);
    }
    return FormalContext::build(objects, attributes, pairs);
}

inline const std::vector<std::string>& table1_attributes() {
    static const std::vector<std::string> names{"a",  "b",  "c",  "m",  "f",  "c1", "c2",
                                                "c3", "c4", "g1", "g2", "g3", "g4", "g5"};
    return names;
}

/// Persons x crime data, row by row as printed.
inline const Rows& table1_rows() {
    static const Rows rows{
        {"P1", {"a", "m", "c1", "c3", "g1"}}, {"P2", {"a", "f", "c1", "c4", "g3"}},
        {"P3", {"b", "f", "c1", "c3", "g5"}}, {"P4", {"a", "m", "c1", "c2", "g3"}},
        {"P5", {"c", "m", "c1", "c2", "g1"}}, {"P6", {"b", "m", "c2", "c4", "g1"}},
        {"P7", {"a", "f", "c3", "g1"}},       {"P8", {"b", "f", "c4", "g2"}},
        {"P9", {"a", "m", "c1", "c4", "g4"}},
    };
    return rows;
}

inline FormalContext table1() { return context_from_rows(table1_attributes(), table1_rows()); }

inline const std::vector<std::string>& table2_attributes() {
    static const std::vector<std::string> names{"a", "b", "c", "d", "e", "f", "g",
                                                "h", "i", "j", "k", "l", "m", "n"};
    return names;
}

/// Locations x economic factors, row by row as printed.
inline const Rows& table2_rows() {
    static const Rows rows{
        {"g1", {"a", "e", "k"}}, {"g2", {"b", "f", "l"}}, {"g3", {"a", "e", "m"}},
        {"g4", {"a", "e", "n"}}, {"g5", {"c", "f", "j"}},
    };
    return rows;
}

inline FormalContext table2() { return context_from_rows(table2_attributes(), table2_rows()); }

inline FormalContext random_context(std::mt19937_64& rng, std::size_t max_objects, std::size_t max_attributes) {
    std::uniform_int_distribution<std::size_t> gdist(0, max_objects);
    std::uniform_int_distribution<std::size_t> mdist(0, max_attributes);
    std::uniform_real_distribution<double> density_dist(0.05, 0.95);
    const std::size_t g = gdist(rng);
    const std::size_t m = mdist(rng);
    const double density = density_dist(rng);
    std::bernoulli_distribution mark(density);
    std::vector<std::string> objects, attributes;
    for (std::size_t i = 0; i < g; ++i) objects.push_back("o" + std::to_string(i));
    for (std::size_t j = 0; j < m; ++j) attributes.push_back("m" + std::to_string(j));
    std::vector<BitVector> rows(g, BitVector(m));
    for (auto& r : rows)
        for (std::size_t j = 0; j < m; ++j) r.assign(j, mark(rng));
    return FormalContext::from_rows(objects, attributes, rows);
}

/// Random subset of a universe of size n.
inline BitVector random_bits(std::mt19937_64& rng, std::size_t n) {
    std::bernoulli_distribution coin(0.5);
    BitVector b(n);
    for (std::size_t i = 0; i < n; ++i) b.assign(i, coin(rng));
    return b;
}

namespace oracle {

using Bits = std::vector<bool>;

inline Bits common_attributes(const FormalContext& ctx, const Bits& objects) {
    Bits out(ctx.attribute_count(), true);
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
        for (std::size_t g = 0; g < ctx.object_count(); ++g)
            if (objects[g] && !ctx.incident(g, m)) out[m] = false;
    return out;
}

inline Bits common_objects(const FormalContext& ctx, const Bits& attributes) {
    Bits out(ctx.object_count(), true);
    for (std::size_t g = 0; g < ctx.object_count(); ++g)
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
            if (attributes[m] && !ctx.incident(g, m)) out[g] = false;
    return out;
}

using ConceptSet = std::set<std::pair<Bits, Bits>>;

/// Closes every subset of the smaller side and deduplicates the fixpoints.
inline ConceptSet brute_force_concepts(const FormalContext& ctx) {
    ConceptSet out;
    const std::size_t g = ctx.object_count();
    const std::size_t m = ctx.attribute_count();
    if (m <= g) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            Bits subset(m);
            for (std::size_t j = 0; j < m; ++j) subset[j] = (mask >> j) & 1U;
            Bits extent = common_objects(ctx, subset);
            out.emplace(extent, common_attributes(ctx, extent));
        }
    } else {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
            Bits subset(g);
            for (std::size_t i = 0; i < g; ++i) subset[i] = (mask >> i) & 1U;
            Bits intent = common_attributes(ctx, subset);
            out.emplace(common_objects(ctx, intent), intent);
        }
    }
    return out;
}

inline Bits to_bits(const BitVector& v) {
    Bits out(v.width());
    for (std::size_t i = 0; i < v.width(); ++i) out[i] = v.test(i);
    return out;
}

inline ConceptSet as_set(const ConceptLattice& lattice) {
    ConceptSet out;
    for (const auto& c : lattice.concepts()) out.emplace(to_bits(c.extent.bits()), to_bits(c.intent.bits()));
    return out;
}

inline bool subset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

/// Transitive reduction of extent inclusion by pairwise comparison.
inline std::vector<CoverEdge> quadratic_covers(const ConceptLattice& lattice) {
    const std::size_t n = lattice.size();
    std::vector<Bits> extents;
    for (const auto& c : lattice.concepts()) extents.push_back(to_bits(c.extent.bits()));
    auto less = [&](std::size_t i, std::size_t j) { return i != j && subset(extents[i], extents[j]); };
    std::vector<CoverEdge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!less(i, j)) continue;
            bool direct = true;
            for (std::size_t k = 0; k < n && direct; ++k)
                if (less(i, k) && less(k, j)) direct = false;
            if (direct) edges.emplace_back(i, j);
        }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace oracle
}  // namespace fca::testing
