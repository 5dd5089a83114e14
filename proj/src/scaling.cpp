#include "fca/scaling.hpp"

#include <cmath>
#include <limits>
#include <unordered_set>

namespace fca {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_value(double v) {
    std::string s = std::to_string(v);
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

void validate_rule(const std::string& column, const ScalingRule& rule) {
    if (const auto* bins = std::get_if<IntervalBinsRule>(&rule)) {
        if (bins->bins.empty()) throw Error(ErrorKind::InvalidScheme, "column '" + column + "' has no bins");
        for (std::size_t i = 0; i < bins->bins.size(); ++i) {
            const auto& b = bins->bins[i];
            if (std::isnan(b.lower) || std::isnan(b.upper) || !(b.lower < b.upper))
                throw Error(ErrorKind::InvalidScheme, "bin '" + b.attribute + "' has empty or invalid interval");
            if (i > 0 && bins->bins[i - 1].upper > b.lower)
                throw Error(ErrorKind::InvalidScheme,
                            "bin '" + b.attribute + "' overlaps or precedes '" + bins->bins[i - 1].attribute + "'");
        }
    } else if (const auto* th = std::get_if<OrdinalThresholdsRule>(&rule)) {
        if (th->thresholds.empty()) throw Error(ErrorKind::InvalidScheme, "column '" + column + "' has no thresholds");
        for (std::size_t i = 0; i < th->thresholds.size(); ++i) {
            if (std::isnan(th->thresholds[i].threshold))
                throw Error(ErrorKind::InvalidScheme, "threshold '" + th->thresholds[i].attribute + "' is NaN");
            if (i > 0 && !(th->thresholds[i - 1].threshold < th->thresholds[i].threshold))
                throw Error(ErrorKind::InvalidScheme, "thresholds of column '" + column + "' not strictly increasing");
        }
    } else {
        const auto& cat = std::get<CategoricalRule>(rule);
        if (cat.categories.empty())
            throw Error(ErrorKind::InvalidScheme, "column '" + column + "' has no categories");
        std::unordered_set<std::string> values;
        for (const auto& c : cat.categories)
            if (!values.insert(c.value).second)
                throw Error(ErrorKind::InvalidScheme, "category '" + c.value + "' repeated in column '" + column + "'");
    }
}

template <typename F>
void for_each_attribute(const ScalingRule& rule, F&& f) {
    std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, CategoricalRule>) {
                for (const auto& c : r.categories) f(c.attribute);
            } else if constexpr (std::is_same_v<R, IntervalBinsRule>) {
                for (const auto& b : r.bins) f(b.attribute);
            } else {
                for (const auto& t : r.thresholds) f(t.attribute);
            }
        },
        rule);
}

bool same_rule(const ScalingRule& a, const ScalingRule& b) {
    if (a.index() != b.index()) return false;
    if (const auto* ca = std::get_if<CategoricalRule>(&a)) {
        const auto& cb = std::get<CategoricalRule>(b);
        if (ca->categories.size() != cb.categories.size()) return false;
        for (std::size_t i = 0; i < ca->categories.size(); ++i)
            if (ca->categories[i].attribute != cb.categories[i].attribute ||
                ca->categories[i].value != cb.categories[i].value)
                return false;
        return true;
    }
    if (const auto* ba = std::get_if<IntervalBinsRule>(&a)) {
        const auto& bb = std::get<IntervalBinsRule>(b);
        if (ba->lower_closed != bb.lower_closed || ba->bins.size() != bb.bins.size()) return false;
        for (std::size_t i = 0; i < ba->bins.size(); ++i)
            if (ba->bins[i].attribute != bb.bins[i].attribute || ba->bins[i].lower != bb.bins[i].lower ||
                ba->bins[i].upper != bb.bins[i].upper)
                return false;
        return true;
    }
    const auto& ta = std::get<OrdinalThresholdsRule>(a);
    const auto& tb = std::get<OrdinalThresholdsRule>(b);
    if (ta.thresholds.size() != tb.thresholds.size()) return false;
    for (std::size_t i = 0; i < ta.thresholds.size(); ++i)
        if (ta.thresholds[i].attribute != tb.thresholds[i].attribute ||
            ta.thresholds[i].threshold != tb.thresholds[i].threshold)
            return false;
    return true;
}

}  // namespace

ManyValuedTable::ManyValuedTable(std::vector<std::string> row_names, std::vector<Column> columns,
                                 std::vector<std::vector<Cell>> cells)
    : row_names_(std::move(row_names)), columns_(std::move(columns)), cells_(std::move(cells)) {
    std::unordered_set<std::string> seen;
    for (const auto& r : row_names_)
        if (!seen.insert(r).second) throw Error(ErrorKind::DuplicateName, "row '" + r + "' declared twice");
    seen.clear();
    for (const auto& c : columns_) {
        if (c.name.empty()) throw Error(ErrorKind::EmptyHeader, "column with empty name");
        if (!seen.insert(c.name).second) throw Error(ErrorKind::DuplicateName, "column '" + c.name + "' declared twice");
    }
    if (cells_.size() != row_names_.size())
        throw Error(ErrorKind::RaggedRow, std::to_string(cells_.size()) + " cell rows for " +
                                              std::to_string(row_names_.size()) + " row names");
    for (std::size_t r = 0; r < cells_.size(); ++r) {
        if (cells_[r].size() != columns_.size())
            throw Error(ErrorKind::RaggedRow, "row '" + row_names_[r] + "' has " + std::to_string(cells_[r].size()) +
                                                  " cells, expected " + std::to_string(columns_.size()));
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            const Cell& cell = cells_[r][c];
            if (columns_[c].kind == ColumnKind::Numeric) {
                const double* v = std::get_if<double>(&cell);
                if (!v || !std::isfinite(*v))
                    throw Error(ErrorKind::NonNumericCell,
                                "row '" + row_names_[r] + "' column '" + columns_[c].name + "' is not a finite number");
            } else {
                const auto* cats = std::get_if<Categories>(&cell);
                if (!cats)
                    throw Error(ErrorKind::KindMismatch,
                                "row '" + row_names_[r] + "' column '" + columns_[c].name + "' expects categories");
                if (cats->empty())
                    throw Error(ErrorKind::MissingCell,
                                "row '" + row_names_[r] + "' column '" + columns_[c].name + "' is empty");
            }
        }
    }
}

std::size_t ManyValuedTable::column_index(const std::string& name) const {
    for (std::size_t c = 0; c < columns_.size(); ++c)
        if (columns_[c].name == name) return c;
    return columns_.size();
}

ScalingScheme::ScalingScheme(std::vector<ColumnRule> rules) : rules_(std::move(rules)) {
    std::unordered_set<std::string> columns;
    std::unordered_set<std::string> attributes;
    for (const auto& r : rules_) {
        if (!columns.insert(r.column).second)
            throw Error(ErrorKind::InvalidScheme, "column '" + r.column + "' has more than one rule");
        validate_rule(r.column, r.rule);
        for_each_attribute(r.rule, [&](const std::string& a) {
            if (a.empty()) throw Error(ErrorKind::InvalidScheme, "empty attribute name in column '" + r.column + "'");
            if (!attributes.insert(a).second)
                throw Error(ErrorKind::InvalidScheme, "output attribute '" + a + "' is not unique");
        });
    }
}

std::vector<std::string> ScalingScheme::attribute_names() const {
    std::vector<std::string> out;
    for (const auto& r : rules_) for_each_attribute(r.rule, [&](const std::string& a) { out.push_back(a); });
    return out;
}

bool operator==(const ScalingScheme& a, const ScalingScheme& b) {
    if (a.rules_.size() != b.rules_.size()) return false;
    for (std::size_t i = 0; i < a.rules_.size(); ++i)
        if (a.rules_[i].column != b.rules_[i].column || !same_rule(a.rules_[i].rule, b.rules_[i].rule)) return false;
    return true;
}

FormalContext scale(const ManyValuedTable& table, const ScalingScheme& scheme) {
    const auto& columns = table.columns();
    std::vector<bool> covered(columns.size(), false);
    // Column index and first output attribute index per rule.
    std::vector<std::size_t> source(scheme.rules().size());
    std::vector<std::size_t> offset(scheme.rules().size());
    std::size_t width = 0;
    for (std::size_t k = 0; k < scheme.rules().size(); ++k) {
        const auto& rule = scheme.rules()[k];
        const std::size_t c = table.column_index(rule.column);
        if (c == columns.size())
            throw Error(ErrorKind::UncoveredColumn, "scheme column '" + rule.column + "' is not in the table");
        const bool numeric_rule = !std::holds_alternative<CategoricalRule>(rule.rule);
        if (numeric_rule != (columns[c].kind == ColumnKind::Numeric))
            throw Error(ErrorKind::KindMismatch, "rule kind does not match column '" + rule.column + "'");
        covered[c] = true;
        source[k] = c;
        offset[k] = width;
        for_each_attribute(rule.rule, [&](const std::string&) { ++width; });
    }
    for (std::size_t c = 0; c < columns.size(); ++c)
        if (!covered[c]) throw Error(ErrorKind::UncoveredColumn, "no rule for column '" + columns[c].name + "'");

    std::vector<BitVector> rows(table.row_count(), BitVector(width));
    for (std::size_t r = 0; r < table.row_count(); ++r) {
        const std::string& row_name = table.row_names()[r];
        for (std::size_t k = 0; k < scheme.rules().size(); ++k) {
            const auto& rule = scheme.rules()[k];
            const Cell& cell = table.cell(r, source[k]);
            const std::string where = "row '" + row_name + "' column '" + rule.column + "'";
            if (const auto* cat = std::get_if<CategoricalRule>(&rule.rule)) {
                for (const auto& value : std::get<Categories>(cell)) {
                    std::size_t i = 0;
                    while (i < cat->categories.size() && cat->categories[i].value != value) ++i;
                    if (i == cat->categories.size())
                        throw Error(ErrorKind::UnknownCategory, where + ": unknown category '" + value + "'");
                    rows[r].set(offset[k] + i);
                }
            } else if (const auto* bins = std::get_if<IntervalBinsRule>(&rule.rule)) {
                const double v = std::get<double>(cell);
                std::size_t i = 0;
                for (; i < bins->bins.size(); ++i) {
                    const auto& b = bins->bins[i];
                    const bool inside = bins->lower_closed ? (b.lower <= v && v < b.upper) : (b.lower < v && v <= b.upper);
                    if (inside) break;
                }
                if (i == bins->bins.size())
                    throw Error(ErrorKind::ValueOutOfRange, where + ": value " + format_value(v) + " outside all bins");
                rows[r].set(offset[k] + i);
            } else {
                const auto& th = std::get<OrdinalThresholdsRule>(rule.rule);
                const double v = std::get<double>(cell);
                if (v > th.thresholds.back().threshold)
                    throw Error(ErrorKind::ValueOutOfRange,
                                where + ": value " + format_value(v) + " above the largest threshold");
                for (std::size_t i = 0; i < th.thresholds.size(); ++i)
                    if (th.thresholds[i].threshold >= v) rows[r].set(offset[k] + i);
            }
        }
    }
    return FormalContext::from_rows(table.row_names(), scheme.attribute_names(), std::move(rows));
}

ScalingScheme builtin_crime_scheme() {
    IntervalBinsRule age{{{"a", -kInf, 18.0}, {"b", 18.0, 40.0}, {"c", 40.0, kInf}}, /*lower_closed=*/true};
    CategoricalRule sex{{{"m", "male"}, {"f", "female"}}};
    CategoricalRule crime{{{"c1", "drugs"}, {"c2", "rape"}, {"c3", "burglary"}, {"c4", "robbery"}}};
    CategoricalRule location{{{"g1", "g1"}, {"g2", "g2"}, {"g3", "g3"}, {"g4", "g4"}, {"g5", "g5"}}};
    return ScalingScheme({{"age", age}, {"sex", sex}, {"crime", crime}, {"location", location}});
}

ScalingScheme builtin_geo_scheme() {
    IntervalBinsRule income{{{"a", 0.0, 0.25}, {"b", 0.25, 0.5}, {"c", 0.5, 0.75}, {"d", 0.75, 1.0}}};
    IntervalBinsRule education{{{"e", 0.0, 0.2}, {"f", 0.2, 0.4}, {"g", 0.4, 0.6}, {"h", 0.6, 0.8}, {"i", 0.8, 1.0}}};
    IntervalBinsRule population{{{"j", 0.0, 0.2}, {"k", 0.2, 0.4}, {"l", 0.4, 0.6}, {"m", 0.6, 0.8}, {"n", 0.8, 1.0}}};
    return ScalingScheme({{"income", income}, {"education", education}, {"population", population}});
}

}  // namespace fca
