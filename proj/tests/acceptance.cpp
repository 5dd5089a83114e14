// Acceptance suite: one pass/fail line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <regex>
#include <string>

#include "fca/analytics.hpp"
#include "fca/implications.hpp"
#include "fca/io.hpp"
#include "support.hpp"

using namespace fca;
using namespace fca::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<std::string> kLocations{"g1", "g2", "g3", "g4", "g5"};
const std::vector<std::string> kCrimes{"c1", "c2", "c3", "c4"};

// 1. Singleton derivations on the shipped Table 1 file equal the printed rows.
Outcome fixture_derivations() {
    const FormalContext ctx = parse_cxt(read_file(data_path("table1.cxt")));
    double worst_ms = 0;
    int matched = 0;
    for (const auto& [object, marks] : table1_rows()) {
        const auto start = Clock::now();
        const AttributeSet derived = derive_objects(ctx, ctx.objects({object}));
        worst_ms = std::max(worst_ms, seconds_since(start) * 1e3);
        if (ctx.names_of(derived) == marks) ++matched;
    }
    const bool pass = matched == 9 && worst_ms < 1.0;
    return {pass, std::to_string(matched) + "/9 rows exact, slowest " + std::to_string(worst_ms) + " ms (limit 1 ms)"};
}

// 2. Enumeration equals the powerset-closure oracle.
Outcome oracle_equivalence() {
    const auto start = Clock::now();
    int checked = 0, mismatches = 0;
    auto check = [&](const FormalContext& ctx) {
        ++checked;
        if (oracle::as_set(enumerate_concepts(ctx)) != oracle::brute_force_concepts(ctx)) ++mismatches;
    };
    check(table1());
    check(table2());
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) check(random_context(rng, 10, 10));
    const double secs = seconds_since(start);
    return {mismatches == 0 && checked == 202 && secs < 60.0,
            std::to_string(checked) + " contexts, " + std::to_string(mismatches) + " mismatches, " +
                std::to_string(secs) + " s (limit 60 s)"};
}

// 3. Galois connection and closure operator laws.
Outcome galois_properties() {
    std::mt19937_64 rng(3);
    long violations = 0, checks = 0;
    auto expect = [&](bool ok) {
        ++checks;
        if (!ok) ++violations;
    };
    for (int i = 0; i < 500; ++i) {
        const FormalContext ctx = random_context(rng, 12, 12);
        for (int k = 0; k < 8; ++k) {
            const ObjectSet a2 = ctx.objects_from_bits(random_bits(rng, ctx.object_count()));
            const ObjectSet a1 = a2 & ctx.objects_from_bits(random_bits(rng, ctx.object_count()));
            const AttributeSet b2 = ctx.attributes_from_bits(random_bits(rng, ctx.attribute_count()));
            const AttributeSet b1 = b2 & ctx.attributes_from_bits(random_bits(rng, ctx.attribute_count()));
            // antitone
            expect(derive_objects(ctx, a2).is_subset_of(derive_objects(ctx, a1)));
            expect(derive_attributes(ctx, b2).is_subset_of(derive_attributes(ctx, b1)));
            // extensive
            expect(a1.is_subset_of(close_objects(ctx, a1)));
            expect(b1.is_subset_of(close_attributes(ctx, b1)));
            // A' = A''' and B' = B'''
            expect(derive_objects(ctx, a2) == derive_objects(ctx, close_objects(ctx, a2)));
            expect(derive_attributes(ctx, b2) == derive_attributes(ctx, close_attributes(ctx, b2)));
            // closure operator: monotone, idempotent
            const AttributeSet h1 = close_attributes(ctx, b1);
            const AttributeSet h2 = close_attributes(ctx, b2);
            expect(h1.is_subset_of(h2));
            expect(close_attributes(ctx, h2) == h2);
        }
        expect(derive_objects(ctx, ctx.no_objects()) == ctx.all_attributes());
        expect(derive_attributes(ctx, ctx.no_attributes()) == ctx.all_objects());
    }
    return {violations == 0, std::to_string(checks) + " checks on 500 contexts, " + std::to_string(violations) +
                                 " violations"};
}

// 4. Meet/join are exact glb/lub; covers equal the quadratic transitive reduction.
Outcome lattice_laws() {
    const auto start = Clock::now();
    const FormalContext ctx = table1();
    const ConceptLattice lattice = enumerate_concepts(ctx);
    const auto& cs = lattice.concepts();
    long violations = 0;
    for (const auto& x : cs) {
        for (const auto& y : cs) {
            const std::vector<FormalConcept> pair{x, y};
            const FormalConcept m = meet(ctx, pair);
            const FormalConcept j = join(ctx, pair);
            if (!lattice.index_of(m.intent) || !lattice.index_of(j.intent)) ++violations;
            if (!is_subconcept(m, x) || !is_subconcept(m, y)) ++violations;
            if (!is_subconcept(x, j) || !is_subconcept(y, j)) ++violations;
            for (const auto& z : cs) {
                if (is_subconcept(z, x) && is_subconcept(z, y) && !is_subconcept(z, m)) ++violations;
                if (is_subconcept(x, z) && is_subconcept(y, z) && !is_subconcept(j, z)) ++violations;
            }
        }
    }
    const bool covers_ok = lattice.covers() == oracle::quadratic_covers(lattice);
    const double secs = seconds_since(start);
    return {violations == 0 && covers_ok && secs < 30.0,
            std::to_string(cs.size()) + " concepts, " + std::to_string(violations) + " glb/lub violations, covers " +
                (covers_ok ? "match" : "DIFFER") + ", " + std::to_string(secs) + " s (limit 30 s)"};
}

// 5. CSV -> scale(builtin-crime) -> crosstab gives Table 3.
Outcome crosstab_reproduction() {
    const ManyValuedTable raw = parse_csv_table(read_file(data_path("crimes.csv")));
    const CrossTab xt = cross_tab(scale(raw, builtin_crime_scheme()), kLocations, kCrimes);
    const std::vector<std::vector<std::uint64_t>> counts{
        {2, 2, 2, 1}, {0, 0, 0, 1}, {2, 1, 0, 1}, {1, 0, 0, 1}, {1, 0, 1, 0}};
    const bool pass = xt.counts() == counts && xt.row_totals() == std::vector<std::uint64_t>{7, 1, 4, 2, 2} &&
                      xt.col_totals() == std::vector<std::uint64_t>{6, 3, 3, 4} && xt.grand_total() == 16;
    return {pass, "grand total " + std::to_string(xt.grand_total())};
}

// 6. g1 is the hotspot and the co-occurrence argmax.
Outcome hotspot_conclusion() {
    const FormalContext ctx = table1();
    const HotspotReport report = hotspots(cross_tab(ctx, kLocations, kCrimes));
    const bool rank_ok = report.ranking.front() == HotspotEntry{"g1", 7};
    const ConceptLattice lattice = enumerate_concepts(ctx);
    std::string scores;
    const std::size_t g1 = concept_cooccurrence_score(lattice, "g1", kCrimes);
    bool argmax_ok = true;
    for (const auto& g : kLocations) {
        const std::size_t s = concept_cooccurrence_score(lattice, g, kCrimes);
        scores += g + "=" + std::to_string(s) + " ";
        if (s > g1) argmax_ok = false;
    }
    return {rank_ok && argmax_ok, "first " + report.ranking.front().location + "(" +
                                      std::to_string(report.ranking.front().score) + "), co-occurrence " + scores};
}

// 7. builtin-geo on synthesized indexes reproduces Table 2.
Outcome scaling_reproduction() {
    const FormalContext scaled = scale(parse_csv_table(read_file(data_path("geo.csv"))), builtin_geo_scheme());
    const FormalContext expected = table2();
    const bool exact = scaled.object_count() == 5 && scaled.attribute_count() == 14 && scaled.same_content(expected);
    return {exact, std::to_string(scaled.object_count()) + "x" + std::to_string(scaled.attribute_count()) +
                       (exact ? " bit-exact" : " differs")};
}

/// Kahn's algorithm on the edges of a DOT document.
bool dot_is_bounded_dag(const std::string& dot, std::size_t nodes, std::string& why) {
    const std::regex edge_re(R"(^\s*(\d+) -> (\d+);$)");
    std::vector<std::vector<std::size_t>> out(nodes);
    std::vector<std::size_t> indegree(nodes, 0), outdegree(nodes, 0);
    std::size_t edges = 0;
    std::size_t pos = 0;
    while (pos < dot.size()) {
        std::size_t end = dot.find('\n', pos);
        const std::string line = dot.substr(pos, end - pos);
        pos = end + 1;
        std::smatch m;
        if (!std::regex_match(line, m, edge_re)) continue;
        const std::size_t u = std::stoul(m[1]), v = std::stoul(m[2]);
        if (u >= nodes || v >= nodes) {
            why = "edge to unknown node";
            return false;
        }
        out[u].push_back(v);
        ++indegree[v];
        ++outdegree[u];
        ++edges;
    }
    std::size_t sources = 0, sinks = 0;
    for (std::size_t i = 0; i < nodes; ++i) {
        sources += indegree[i] == 0;
        sinks += outdegree[i] == 0;
    }
    std::queue<std::size_t> ready;
    std::vector<std::size_t> remaining = indegree;
    for (std::size_t i = 0; i < nodes; ++i)
        if (remaining[i] == 0) ready.push(i);
    std::size_t visited = 0;
    while (!ready.empty()) {
        const std::size_t u = ready.front();
        ready.pop();
        ++visited;
        for (std::size_t v : out[u])
            if (--remaining[v] == 0) ready.push(v);
    }
    why = std::to_string(edges) + " edges, " + std::to_string(sources) + " source, " + std::to_string(sinks) +
          " sink, " + (visited == nodes ? "acyclic" : "CYCLE");
    return visited == nodes && sources == 1 && sinks == 1;
}

// 8. CXT round trips; DOT is a DAG with one source and one sink.
Outcome format_round_trips() {
    std::mt19937_64 rng(8);
    int failures = 0;
    for (int i = 0; i < 200; ++i) {
        const FormalContext ctx = random_context(rng, 10, 10);
        const std::string text = write_cxt(ctx);
        const FormalContext back = parse_cxt(text);
        if (!back.same_content(ctx) || write_cxt(back) != text) ++failures;
    }
    const ConceptLattice lattice = enumerate_concepts(table1());
    std::string why;
    const bool dag = dot_is_bounded_dag(export_dot(lattice), lattice.size(), why);
    return {failures == 0 && dag, "200 CXT round trips, " + std::to_string(failures) + " failures; DOT " + why};
}

/// Direct scan: every object with all of X also has all of Y.
bool scan_holds(const FormalContext& ctx, const std::vector<std::string>& x, const std::vector<std::string>& y) {
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        bool all_x = true, all_y = true;
        for (const auto& n : x) all_x = all_x && ctx.incident(g, ctx.attribute_index(n));
        for (const auto& n : y) all_y = all_y && ctx.incident(g, ctx.attribute_index(n));
        if (all_x && !all_y) return false;
    }
    return true;
}

// 9. Implication fixtures against the scan oracle.
Outcome implication_fixtures() {
    const FormalContext ctx = table1();
    const bool c2_m = holds(ctx, {ctx.attributes({"c2"}), ctx.attributes({"m"})});
    const bool c3_c1 = holds(ctx, {ctx.attributes({"c3"}), ctx.attributes({"c1"})});
    const bool indep = independent(ctx, ctx.attributes({"c1", "c4"}));
    const bool oracle_indep = !scan_holds(ctx, {"c1"}, {"c4"}) && !scan_holds(ctx, {"c4"}, {"c1"});
    const bool pass = c2_m && scan_holds(ctx, {"c2"}, {"m"}) && !c3_c1 && !scan_holds(ctx, {"c3"}, {"c1"}) && indep &&
                      oracle_indep;
    return {pass, std::string("{c2}->{m} ") + (c2_m ? "holds" : "fails") + ", {c3}->{c1} " +
                      (c3_c1 ? "holds" : "fails") + ", {c1,c4} " + (indep ? "independent" : "dependent")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 fixture derivations", fixture_derivations},
        {"AC2 oracle equivalence", oracle_equivalence},
        {"AC3 Galois-connection properties", galois_properties},
        {"AC4 lattice laws and covers", lattice_laws},
        {"AC5 cross-tab reproduction", crosstab_reproduction},
        {"AC6 hotspot conclusion", hotspot_conclusion},
        {"AC7 scaling reproduction", scaling_reproduction},
        {"AC8 format round-trips", format_round_trips},
        {"AC9 implication fixtures", implication_fixtures},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
