#pragma once

#include <string>
#include <string_view>

#include "fca/analytics.hpp"
#include "fca/context.hpp"
#include "fca/lattice.hpp"
#include "fca/scaling.hpp"

namespace fca {

// Burmeister CXT:
//   B
//   <blank or context name>
//   <object count>
//   <attribute count>
//   <blank>
//   <object names, one per line>
//   <attribute names, one per line>
//   <one row per object: 'X' incident, '.' not>

/// Throws MalformedHeader, DimensionMismatch, IllegalIncidenceChar (plus the
/// build errors DuplicateName for repeated names).
FormalContext parse_cxt(std::string_view text);
/// Canonical form: blank name line, '\n' line endings, trailing newline.
std::string write_cxt(const FormalContext& ctx);

/// Comma-separated many-valued table. The first header field names the row
/// label column; every other header field is `name:numeric` or
/// `name:categorical`. Categorical cells may list several values separated
/// by ';'. Blank lines are ignored.
/// Throws EmptyHeader, MalformedHeader, RaggedRow, NonNumericCell, MissingCell.
ManyValuedTable parse_csv_table(std::string_view text);

// Scheme file, one rule per `column` line followed by its entries:
//
//   # persons x crime data
//   column age bins lower-closed     (bins default to upper-closed)
//     a -inf 18
//     b 18 40
//   column sex categorical
//     m male                         (attribute, then category value)
//   column pop thresholds
//     j 0.2
//
// '#' starts a comment that runs to the end of the line.

/// Throws MalformedScheme on syntax errors and InvalidScheme on rule errors.
ScalingScheme parse_scheme(std::string_view text);
std::string write_scheme(const ScalingScheme& scheme);

enum class Labeling { Full, Reduced };

/// Line diagram as a DOT digraph. Node ids are canonical concept indices;
/// edges run from upper to lower cover. Reduced labeling shows each
/// attribute on its attribute concept (above) and each object on its object
/// concept (below).
std::string export_dot(const ConceptLattice& lattice, Labeling labeling = Labeling::Reduced);

/// Header `location,<crimes...>,Total`, one row per location, trailing
/// `Total` row.
std::string write_crosstab_csv(const CrossTab& table);
/// Inverse of write_crosstab_csv; totals are recomputed and must match the
/// stated ones. Throws MalformedCrossTab.
CrossTab parse_crosstab_csv(std::string_view text);

/// `location,count` per location in declared order: the bar-chart series of
/// crime count against location.
std::string write_plot_data(const CrossTab& table);

/// `rank,location,score`.
std::string write_hotspots_csv(const HotspotReport& report);

/// One line per concept: `<index>\t<extent names>\t<intent names>`, names
/// comma-separated.
std::string write_concept_listing(const ConceptLattice& lattice);

}  // namespace fca
