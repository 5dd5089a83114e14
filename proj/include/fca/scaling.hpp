#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fca/context.hpp"

namespace fca {

enum class ColumnKind { Numeric, Categorical };

struct Column {
    std::string name;
    ColumnKind kind;
};

/// A categorical cell holds one or more category values (several crime types
/// committed by one person, for example).
using Categories = std::vector<std::string>;
using Cell = std::variant<double, Categories>;

/// Many-valued data: named rows, typed columns, one cell per (row, column).
class ManyValuedTable {
public:
    ManyValuedTable() = default;

    /// Validates grid shape, unique names, cell kinds, finiteness and
    /// non-empty categorical cells.
    ManyValuedTable(std::vector<std::string> row_names, std::vector<Column> columns,
                    std::vector<std::vector<Cell>> cells);

    const std::vector<std::string>& row_names() const noexcept { return row_names_; }
    const std::vector<Column>& columns() const noexcept { return columns_; }
    std::size_t row_count() const noexcept { return row_names_.size(); }
    const Cell& cell(std::size_t row, std::size_t column) const { return cells_[row][column]; }
    /// Index of a column by name, or columns().size() when absent.
    std::size_t column_index(const std::string& name) const;

private:
    std::vector<std::string> row_names_;
    std::vector<Column> columns_;
    std::vector<std::vector<Cell>> cells_;
};

/// One output attribute per category value.
struct CategoricalRule {
    struct Category {
        std::string attribute;
        std::string value;
    };
    std::vector<Category> categories;
};

/// Exactly one bin attribute per value. Bins are (lower, upper] by default;
/// with `lower_closed` they are [lower, upper).
struct IntervalBinsRule {
    struct Bin {
        std::string attribute;
        double lower;
        double upper;
    };
    std::vector<Bin> bins;
    bool lower_closed = false;
};

/// Cumulative scaling: value v marks every attribute whose threshold is >= v.
struct OrdinalThresholdsRule {
    struct Threshold {
        std::string attribute;
        double threshold;
    };
    std::vector<Threshold> thresholds;
};

using ScalingRule = std::variant<CategoricalRule, IntervalBinsRule, OrdinalThresholdsRule>;

struct ColumnRule {
    std::string column;
    ScalingRule rule;
};

/// Ordered rules, one per input column. The output attribute order is the
/// rule order, then the order of entries inside each rule.
class ScalingScheme {
public:
    ScalingScheme() = default;
    /// Throws InvalidScheme on overlapping/unordered bins, non-increasing
    /// thresholds, duplicate output attributes or duplicate columns.
    explicit ScalingScheme(std::vector<ColumnRule> rules);

    const std::vector<ColumnRule>& rules() const noexcept { return rules_; }
    std::vector<std::string> attribute_names() const;

    friend bool operator==(const ScalingScheme& a, const ScalingScheme& b);

private:
    std::vector<ColumnRule> rules_;
};

/// Conceptual scaling of a many-valued table into a binary context.
/// Throws UncoveredColumn, KindMismatch, ValueOutOfRange, UnknownCategory.
FormalContext scale(const ManyValuedTable& table, const ScalingScheme& scheme);

/// Persons x crime data: age bins a=[-inf,18) b=[18,40) c=[40,inf); sex
/// male/female -> m/f; crime drugs/rape/burglary/robbery -> c1..c4; location
/// g1..g5. Columns: age, sex, crime, location.
ScalingScheme builtin_crime_scheme();

/// Locations x economic factors: income bins a..d at 0.25 steps, education
/// bins e..i and population bins j..n at 0.2 steps, all (lower, upper].
/// Columns: income, education, population.
ScalingScheme builtin_geo_scheme();

}  // namespace fca
