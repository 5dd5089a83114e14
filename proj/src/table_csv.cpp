#include <limits>
#include <string>

#include "fca/io.hpp"
#include "text.hpp"

namespace fca {

ManyValuedTable parse_csv_table(std::string_view input) {
    const auto lines = text::split_lines(input);
    std::size_t first = 0;
    while (first < lines.size() && text::trim(lines[first]).empty()) ++first;
    if (first == lines.size()) throw Error(ErrorKind::EmptyHeader, "no header row");

    const auto header = text::split(lines[first], ',');
    if (header.size() < 1 || text::trim(header[0]).empty())
        throw Error(ErrorKind::EmptyHeader, "header must start with the row label column");
    std::vector<Column> columns;
    for (std::size_t i = 1; i < header.size(); ++i) {
        const std::string_view field = text::trim(header[i]);
        const std::size_t colon = field.rfind(':');
        if (field.empty() || colon == 0) throw Error(ErrorKind::EmptyHeader, "column " + std::to_string(i + 1) + " has no name");
        if (colon == std::string_view::npos)
            throw Error(ErrorKind::MalformedHeader, "column '" + std::string(field) + "' lacks a :numeric/:categorical kind");
        const std::string_view kind = field.substr(colon + 1);
        ColumnKind k;
        if (kind == "numeric") {
            k = ColumnKind::Numeric;
        } else if (kind == "categorical") {
            k = ColumnKind::Categorical;
        } else {
            throw Error(ErrorKind::MalformedHeader, "unknown column kind '" + std::string(kind) + "'");
        }
        columns.push_back({std::string(text::trim(field.substr(0, colon))), k});
    }

    std::vector<std::string> row_names;
    std::vector<std::vector<Cell>> cells;
    for (std::size_t l = first + 1; l < lines.size(); ++l) {
        if (text::trim(lines[l]).empty()) continue;
        const auto fields = text::split(lines[l], ',');
        const std::string where = "line " + std::to_string(l + 1);
        if (fields.size() != header.size())
            throw Error(ErrorKind::RaggedRow, where + " has " + std::to_string(fields.size()) + " fields, expected " +
                                                  std::to_string(header.size()));
        const std::string_view name = text::trim(fields[0]);
        if (name.empty()) throw Error(ErrorKind::MissingCell, where + " has an empty row label");
        row_names.emplace_back(name);
        std::vector<Cell> row;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const std::string_view raw = text::trim(fields[c + 1]);
            if (columns[c].kind == ColumnKind::Numeric) {
                if (raw.empty()) throw Error(ErrorKind::MissingCell, where + " column '" + columns[c].name + "' is empty");
                const auto v = text::parse_double(raw);
                if (!v || *v == std::numeric_limits<double>::infinity() || *v == -std::numeric_limits<double>::infinity())
                    throw Error(ErrorKind::NonNumericCell,
                                where + " column '" + columns[c].name + "': '" + std::string(raw) + "'");
                row.emplace_back(*v);
            } else {
                Categories values;
                for (auto part : text::split(raw, ';')) {
                    part = text::trim(part);
                    if (!part.empty()) values.emplace_back(part);
                }
                if (values.empty())
                    throw Error(ErrorKind::MissingCell, where + " column '" + columns[c].name + "' is empty");
                row.emplace_back(std::move(values));
            }
        }
        cells.push_back(std::move(row));
    }
    return ManyValuedTable(std::move(row_names), std::move(columns), std::move(cells));
}

}  // namespace fca
