#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fca/context.hpp"
#include "fca/lattice.hpp"

namespace fca {

/// Location x crime-type counts with marginal totals.
class CrossTab {
public:
    /// Computes totals from counts; counts must be rows x cols.
    CrossTab(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
             std::vector<std::vector<std::uint64_t>> counts);

    const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
    const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }
    std::uint64_t count(std::size_t row, std::size_t col) const { return counts_[row][col]; }
    const std::vector<std::vector<std::uint64_t>>& counts() const noexcept { return counts_; }
    const std::vector<std::uint64_t>& row_totals() const noexcept { return row_totals_; }
    const std::vector<std::uint64_t>& col_totals() const noexcept { return col_totals_; }
    std::uint64_t grand_total() const noexcept { return grand_total_; }

    friend bool operator==(const CrossTab&, const CrossTab&) = default;

private:
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::vector<std::vector<std::uint64_t>> counts_;
    std::vector<std::uint64_t> row_totals_;
    std::vector<std::uint64_t> col_totals_;
    std::uint64_t grand_total_ = 0;
};

struct HotspotEntry {
    std::string location;
    std::uint64_t score;

    friend bool operator==(const HotspotEntry&, const HotspotEntry&) = default;
};

struct HotspotReport {
    std::vector<HotspotEntry> ranking;
};

/// counts[g][c] = number of objects carrying both location g and crime c.
/// Every object must carry exactly one of the location attributes.
/// Throws UnknownAttribute or NonPartition.
CrossTab cross_tab(const FormalContext& ctx, std::span<const std::string> locations,
                   std::span<const std::string> crimes);

/// Locations ranked by row total, descending; ties broken by name.
HotspotReport hotspots(const CrossTab& table);

/// Number of concepts whose intent holds `focus` and at least one companion.
std::size_t concept_cooccurrence_score(const ConceptLattice& lattice, const std::string& focus,
                                       std::span<const std::string> companions);

}  // namespace fca
