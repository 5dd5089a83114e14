#include <string>

#include "fca/io.hpp"
#include "text.hpp"

namespace fca {

FormalContext parse_cxt(std::string_view input) {
    const auto lines = text::split_lines(input);
    if (lines.size() < 5 || lines[0] != "B") throw Error(ErrorKind::MalformedHeader, "missing 'B' header block");
    const auto objects = text::parse_uint(text::trim(lines[2]));
    const auto attributes = text::parse_uint(text::trim(lines[3]));
    if (!objects || !attributes) throw Error(ErrorKind::MalformedHeader, "object/attribute counts must be integers");
    if (!lines[4].empty()) throw Error(ErrorKind::MalformedHeader, "line 5 must be blank");

    const std::size_t g = *objects;
    const std::size_t m = *attributes;
    const std::size_t body = 5;
    // Trailing blank lines are tolerated; anything else past the rows is not.
    std::size_t used = lines.size();
    while (used > body && lines[used - 1].empty() && used > body + g + m + g) --used;
    if (used != body + g + m + g)
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(g + m + g) + " lines after header, found " +
                                                      std::to_string(used - body));

    std::vector<std::string> object_names(lines.begin() + body, lines.begin() + body + g);
    std::vector<std::string> attribute_names(lines.begin() + body + g, lines.begin() + body + g + m);
    std::vector<BitVector> rows;
    rows.reserve(g);
    for (std::size_t i = 0; i < g; ++i) {
        const std::string_view row = lines[body + g + m + i];
        if (row.size() != m)
            throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(i + 1) + " has " +
                                                          std::to_string(row.size()) + " marks for " +
                                                          std::to_string(m) + " attributes");
        BitVector bits(m);
        for (std::size_t j = 0; j < m; ++j) {
            if (row[j] == 'X') {
                bits.set(j);
            } else if (row[j] != '.') {
                throw Error(ErrorKind::IllegalIncidenceChar, "row " + std::to_string(i + 1) + " column " +
                                                                 std::to_string(j + 1) + ": '" + std::string(1, row[j]) +
                                                                 "'");
            }
        }
        rows.push_back(std::move(bits));
    }
    return FormalContext::from_rows(std::move(object_names), std::move(attribute_names), std::move(rows));
}

std::string write_cxt(const FormalContext& ctx) {
    std::string out = "B\n\n";
    out += std::to_string(ctx.object_count()) + "\n";
    out += std::to_string(ctx.attribute_count()) + "\n\n";
    for (const auto& n : ctx.object_names()) out += n + "\n";
    for (const auto& n : ctx.attribute_names()) out += n + "\n";
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out += ctx.incident(g, m) ? 'X' : '.';
        out += '\n';
    }
    return out;
}

}  // namespace fca
