#include <algorithm>
#include <string>

#include "fca/io.hpp"
#include "text.hpp"

namespace fca {
namespace {

std::string escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

std::string escaped_list(const std::vector<std::string>& names) {
    std::vector<std::string> parts;
    for (const auto& n : names) parts.push_back(escape(n));
    return text::join(parts, ", ");
}

}  // namespace

std::string export_dot(const ConceptLattice& lattice, Labeling labeling) {
    const FormalContext& ctx = lattice.context();
    std::vector<std::string> labels(lattice.size());
    if (labeling == Labeling::Full) {
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            labels[i] = "{" + escaped_list(ctx.names_of(lattice[i].extent)) + "}\\n{" +
                        escaped_list(ctx.names_of(lattice[i].intent)) + "}";
        }
    } else {
        std::vector<std::vector<std::string>> introduced_attributes(lattice.size());
        std::vector<std::vector<std::string>> introduced_objects(lattice.size());
        // Attribute m sits on ({m}', {m}''), object g on ({g}'', {g}').
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
            AttributeSet single = ctx.no_attributes();
            single.insert(m);
            introduced_attributes[*lattice.index_of(close_attributes(ctx, single))].push_back(
                ctx.attribute_names()[m]);
        }
        for (std::size_t g = 0; g < ctx.object_count(); ++g) {
            ObjectSet single = ctx.no_objects();
            single.insert(g);
            introduced_objects[*lattice.index_of(derive_objects(ctx, single))].push_back(ctx.object_names()[g]);
        }
        for (std::size_t i = 0; i < lattice.size(); ++i)
            labels[i] = escaped_list(introduced_attributes[i]) + "\\n" + escaped_list(introduced_objects[i]);
    }

    std::string out = "digraph lattice {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lattice.size(); ++i)
        out += "  " + std::to_string(i) + " [label=\"" + labels[i] + "\"];\n";
    std::vector<CoverEdge> downward;
    for (const auto& [lower, upper] : lattice.covers()) downward.emplace_back(upper, lower);
    std::sort(downward.begin(), downward.end());
    for (const auto& [upper, lower] : downward)
        out += "  " + std::to_string(upper) + " -> " + std::to_string(lower) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace fca
