#include <string>

#include "fca/io.hpp"
#include "text.hpp"

namespace fca {

std::string write_crosstab_csv(const CrossTab& table) {
    std::string out = "location";
    for (const auto& c : table.col_labels()) out += "," + c;
    out += ",Total\n";
    for (std::size_t r = 0; r < table.row_labels().size(); ++r) {
        out += table.row_labels()[r];
        for (std::size_t c = 0; c < table.col_labels().size(); ++c) out += "," + std::to_string(table.count(r, c));
        out += "," + std::to_string(table.row_totals()[r]) + "\n";
    }
    out += "Total";
    for (auto t : table.col_totals()) out += "," + std::to_string(t);
    out += "," + std::to_string(table.grand_total()) + "\n";
    return out;
}

CrossTab parse_crosstab_csv(std::string_view input) {
    auto lines = text::split_lines(input);
    while (!lines.empty() && text::trim(lines.back()).empty()) lines.pop_back();
    if (lines.size() < 2) throw Error(ErrorKind::MalformedCrossTab, "expected a header and a Total row");

    const auto header = text::split(lines.front(), ',');
    if (header.size() < 2 || header.back() != "Total")
        throw Error(ErrorKind::MalformedCrossTab, "header must end with a Total column");
    std::vector<std::string> cols(header.begin() + 1, header.end() - 1);

    auto parse_row = [&](std::string_view line, std::size_t lineno) {
        const auto fields = text::split(line, ',');
        if (fields.size() != header.size())
            throw Error(ErrorKind::MalformedCrossTab, "line " + std::to_string(lineno) + " has wrong width");
        std::vector<std::uint64_t> values;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            auto v = text::parse_uint(text::trim(fields[i]));
            if (!v) throw Error(ErrorKind::MalformedCrossTab, "line " + std::to_string(lineno) + ": non-integer count");
            values.push_back(*v);
        }
        return std::pair{std::string(text::trim(fields[0])), values};
    };

    std::vector<std::string> rows;
    std::vector<std::vector<std::uint64_t>> counts;
    std::vector<std::uint64_t> stated_row_totals;
    for (std::size_t l = 1; l + 1 < lines.size(); ++l) {
        auto [label, values] = parse_row(lines[l], l + 1);
        stated_row_totals.push_back(values.back());
        values.pop_back();
        rows.push_back(std::move(label));
        counts.push_back(std::move(values));
    }
    auto [total_label, totals] = parse_row(lines.back(), lines.size());
    if (total_label != "Total") throw Error(ErrorKind::MalformedCrossTab, "last row must be Total");

    CrossTab table(std::move(rows), std::move(cols), std::move(counts));
    std::vector<std::uint64_t> recomputed = table.col_totals();
    recomputed.push_back(table.grand_total());
    if (recomputed != totals || stated_row_totals != table.row_totals())
        throw Error(ErrorKind::MalformedCrossTab, "stated totals disagree with counts");
    return table;
}

std::string write_plot_data(const CrossTab& table) {
    std::string out = "location,count\n";
    for (std::size_t r = 0; r < table.row_labels().size(); ++r)
        out += table.row_labels()[r] + "," + std::to_string(table.row_totals()[r]) + "\n";
    return out;
}

std::string write_hotspots_csv(const HotspotReport& report) {
    std::string out = "rank,location,score\n";
    for (std::size_t i = 0; i < report.ranking.size(); ++i)
        out += std::to_string(i + 1) + "," + report.ranking[i].location + "," + std::to_string(report.ranking[i].score) +
               "\n";
    return out;
}

std::string write_concept_listing(const ConceptLattice& lattice) {
    const FormalContext& ctx = lattice.context();
    std::string out;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        out += std::to_string(i) + "\t" + text::join(ctx.names_of(lattice[i].extent), ",") + "\t" +
               text::join(ctx.names_of(lattice[i].intent), ",") + "\n";
    }
    return out;
}

}  // namespace fca
