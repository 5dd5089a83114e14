#include "fca/analytics.hpp"

#include <algorithm>

namespace fca {
namespace {

std::size_t require_attribute(const FormalContext& ctx, const std::string& name) {
    if (auto i = ctx.find_attribute(name)) return *i;
    throw Error(ErrorKind::UnknownAttribute, "attribute '" + name + "' not in context");
}

}  // namespace

CrossTab::CrossTab(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                   std::vector<std::vector<std::uint64_t>> counts)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      counts_(std::move(counts)),
      row_totals_(row_labels_.size(), 0),
      col_totals_(col_labels_.size(), 0) {
    if (counts_.size() != row_labels_.size())
        throw Error(ErrorKind::DimensionMismatch, "cross-tab has " + std::to_string(counts_.size()) +
                                                      " count rows for " + std::to_string(row_labels_.size()) +
                                                      " labels");
    for (std::size_t r = 0; r < counts_.size(); ++r) {
        if (counts_[r].size() != col_labels_.size())
            throw Error(ErrorKind::DimensionMismatch, "cross-tab row '" + row_labels_[r] + "' has wrong width");
        for (std::size_t c = 0; c < col_labels_.size(); ++c) {
            row_totals_[r] += counts_[r][c];
            col_totals_[c] += counts_[r][c];
            grand_total_ += counts_[r][c];
        }
    }
}

CrossTab cross_tab(const FormalContext& ctx, std::span<const std::string> locations,
                   std::span<const std::string> crimes) {
    std::vector<std::size_t> loc_idx;
    std::vector<std::size_t> crime_idx;
    for (const auto& l : locations) loc_idx.push_back(require_attribute(ctx, l));
    for (const auto& c : crimes) crime_idx.push_back(require_attribute(ctx, c));

    std::vector<std::vector<std::uint64_t>> counts(locations.size(), std::vector<std::uint64_t>(crimes.size(), 0));
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        std::size_t marks = 0;
        std::size_t row = 0;
        for (std::size_t k = 0; k < loc_idx.size(); ++k) {
            if (ctx.incident(g, loc_idx[k])) {
                ++marks;
                row = k;
            }
        }
        if (marks != 1)
            throw Error(ErrorKind::NonPartition, "object '" + ctx.object_names()[g] + "' has " +
                                                     std::to_string(marks) + " location marks");
        for (std::size_t k = 0; k < crime_idx.size(); ++k)
            if (ctx.incident(g, crime_idx[k])) ++counts[row][k];
    }
    return CrossTab({locations.begin(), locations.end()}, {crimes.begin(), crimes.end()}, std::move(counts));
}

HotspotReport hotspots(const CrossTab& table) {
    HotspotReport report;
    for (std::size_t r = 0; r < table.row_labels().size(); ++r)
        report.ranking.push_back({table.row_labels()[r], table.row_totals()[r]});
    std::sort(report.ranking.begin(), report.ranking.end(), [](const HotspotEntry& a, const HotspotEntry& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.location < b.location;
    });
    return report;
}

std::size_t concept_cooccurrence_score(const ConceptLattice& lattice, const std::string& focus,
                                       std::span<const std::string> companions) {
    const FormalContext& ctx = lattice.context();
    const std::size_t f = require_attribute(ctx, focus);
    BitVector wanted(ctx.attribute_count());
    for (const auto& c : companions) wanted.set(require_attribute(ctx, c));
    std::size_t score = 0;
    for (const auto& c : lattice.concepts()) {
        if (!c.intent.contains(f)) continue;
        if (!(c.intent.bits() & wanted).none()) ++score;
    }
    return score;
}

}  // namespace fca
