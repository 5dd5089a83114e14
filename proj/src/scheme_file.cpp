#include <string>

#include "fca/io.hpp"
#include "text.hpp"

namespace fca {
namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
    throw Error(ErrorKind::MalformedScheme, "line " + std::to_string(line) + ": " + what);
}

double number(std::string_view token, std::size_t line) {
    if (auto v = text::parse_double(token)) return *v;
    malformed(line, "'" + std::string(token) + "' is not a number");
}

}  // namespace

ScalingScheme parse_scheme(std::string_view input) {
    std::vector<ColumnRule> rules;
    const auto lines = text::split_lines(input);
    for (std::size_t l = 0; l < lines.size(); ++l) {
        const std::size_t lineno = l + 1;
        const std::string_view line = text::trim(lines[l].substr(0, lines[l].find('#')));
        if (line.empty()) continue;
        const auto tok = text::tokens(line);
        if (tok[0] == "column") {
            if (tok.size() < 3) malformed(lineno, "expected 'column <name> <kind>'");
            ColumnRule rule{std::string(tok[1]), CategoricalRule{}};
            if (tok[2] == "categorical") {
                if (tok.size() != 3) malformed(lineno, "categorical takes no options");
            } else if (tok[2] == "bins") {
                IntervalBinsRule bins;
                if (tok.size() == 4 && tok[3] == "lower-closed") {
                    bins.lower_closed = true;
                } else if (tok.size() == 4 && tok[3] == "upper-closed") {
                    bins.lower_closed = false;
                } else if (tok.size() != 3) {
                    malformed(lineno, "bins option must be lower-closed or upper-closed");
                }
                rule.rule = bins;
            } else if (tok[2] == "thresholds") {
                if (tok.size() != 3) malformed(lineno, "thresholds takes no options");
                rule.rule = OrdinalThresholdsRule{};
            } else {
                malformed(lineno, "unknown rule kind '" + std::string(tok[2]) + "'");
            }
            rules.push_back(std::move(rule));
            continue;
        }
        if (rules.empty()) malformed(lineno, "entry before any 'column' line");
        ScalingRule& rule = rules.back().rule;
        if (auto* cat = std::get_if<CategoricalRule>(&rule)) {
            // Value is the rest of the line so categories may contain spaces.
            const std::string_view rest = text::trim(line.substr(tok[0].size()));
            cat->categories.push_back({std::string(tok[0]), std::string(rest.empty() ? tok[0] : rest)});
        } else if (auto* bins = std::get_if<IntervalBinsRule>(&rule)) {
            if (tok.size() != 3) malformed(lineno, "expected '<attribute> <lower> <upper>'");
            bins->bins.push_back({std::string(tok[0]), number(tok[1], lineno), number(tok[2], lineno)});
        } else {
            auto& th = std::get<OrdinalThresholdsRule>(rule);
            if (tok.size() != 2) malformed(lineno, "expected '<attribute> <threshold>'");
            th.thresholds.push_back({std::string(tok[0]), number(tok[1], lineno)});
        }
    }
    return ScalingScheme(std::move(rules));
}

std::string write_scheme(const ScalingScheme& scheme) {
    std::string out;
    for (const auto& r : scheme.rules()) {
        if (const auto* cat = std::get_if<CategoricalRule>(&r.rule)) {
            out += "column " + r.column + " categorical\n";
            for (const auto& c : cat->categories) out += "  " + c.attribute + " " + c.value + "\n";
        } else if (const auto* bins = std::get_if<IntervalBinsRule>(&r.rule)) {
            out += "column " + r.column + " bins " + (bins->lower_closed ? "lower-closed" : "upper-closed") + "\n";
            for (const auto& b : bins->bins)
                out += "  " + b.attribute + " " + text::format_double(b.lower) + " " + text::format_double(b.upper) + "\n";
        } else {
            out += "column " + r.column + " thresholds\n";
            for (const auto& t : std::get<OrdinalThresholdsRule>(r.rule).thresholds)
                out += "  " + t.attribute + " " + text::format_double(t.threshold) + "\n";
        }
    }
    return out;
}

}  // namespace fca
