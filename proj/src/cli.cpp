#include "fca/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fca/analytics.hpp"
#include "fca/implications.hpp"
#include "fca/io.hpp"
#include "text.hpp"

namespace fca {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Streams {
    std::istream& in;
    std::ostream& out;
};

struct Options {
    std::string input = "-";
    std::string output = "-";
    std::string scheme;
    std::string labels = "reduced";
    std::size_t max_concepts = EnumerationOptions{}.max_concepts;
    bool count_only = false;
    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    std::vector<std::string> locations{"g1", "g2", "g3", "g4", "g5"};
    std::vector<std::string> crimes{"c1", "c2", "c3", "c4"};
    std::vector<std::string> premise;
    std::vector<std::string> conclusion;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    buf << file.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
    if (path == "-") {
        out << data;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
    file << data;
}

ScalingScheme load_scheme(const std::string& spec, std::istream& in) {
    if (spec == "builtin-crime") return builtin_crime_scheme();
    if (spec == "builtin-geo") return builtin_geo_scheme();
    if (spec == "-") throw UsageError("--scheme cannot read from standard input");
    return parse_scheme(read_input(spec, in));
}

FormalContext load_context(const Options& o, Streams s) { return parse_cxt(read_input(o.input, s.in)); }

void add_io(CLI::App* cmd, Options& o, bool with_output = true) {
    cmd->add_option("-i,--input", o.input, "Input file, '-' for standard input");
    if (with_output) cmd->add_option("-o,--output", o.output, "Output file, '-' for standard output");
}

void add_groups(CLI::App* cmd, Options& o) {
    cmd->add_option("--locations", o.locations, "Location attributes")->delimiter(',');
    cmd->add_option("--crimes", o.crimes, "Crime-type attributes")->delimiter(',');
}

std::string joined_line(const std::vector<std::string>& names) { return text::join(names, ",") + "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    Streams s{in, out};
    CLI::App app{"Formal concept analysis of crime and geographic data", "fca"};
    app.require_subcommand(1);

    auto* scale_cmd = app.add_subcommand("scale", "Scale a many-valued CSV table into a CXT context");
    add_io(scale_cmd, o);
    scale_cmd->add_option("--scheme", o.scheme, "Scheme file, or builtin-crime / builtin-geo")->required();

    auto* concepts_cmd = app.add_subcommand("concepts", "List all formal concepts");
    add_io(concepts_cmd, o);
    concepts_cmd->add_option("--max-concepts", o.max_concepts, "Abort beyond this many concepts")
        ->check(CLI::PositiveNumber);
    concepts_cmd->add_flag("--count", o.count_only, "Print only the number of concepts");

    auto* lattice_cmd = app.add_subcommand("lattice", "Export the concept lattice as DOT");
    add_io(lattice_cmd, o);
    lattice_cmd->add_option("--labels", o.labels, "Node labeling")->check(CLI::IsMember({"full", "reduced"}));
    lattice_cmd->add_option("--max-concepts", o.max_concepts, "Abort beyond this many concepts")
        ->check(CLI::PositiveNumber);

    auto* derive_cmd = app.add_subcommand("derive", "Apply the derivation operator to a set of names");
    add_io(derive_cmd, o);
    auto* objects_opt =
        derive_cmd->add_option("--objects", o.objects, "Object names; prints their common attributes")
            ->delimiter(',')
            ->expected(0, -1);
    auto* attributes_opt =
        derive_cmd->add_option("--attributes", o.attributes, "Attribute names; prints the objects having all")
            ->delimiter(',')
            ->expected(0, -1);
    objects_opt->excludes(attributes_opt);

    auto* crosstab_cmd = app.add_subcommand("crosstab", "Location x crime-type counts as CSV");
    add_io(crosstab_cmd, o);
    add_groups(crosstab_cmd, o);

    auto* hotspots_cmd = app.add_subcommand("hotspots", "Rank locations by crime count");
    add_io(hotspots_cmd, o);
    add_groups(hotspots_cmd, o);

    auto* implication_cmd = app.add_subcommand("implication", "Attribute implications");
    implication_cmd->require_subcommand(1);
    auto* check_cmd = implication_cmd->add_subcommand("check", "Does premise -> conclusion hold?");
    add_io(check_cmd, o);
    check_cmd->add_option("--premise", o.premise, "Premise attributes")->delimiter(',')->expected(0, -1);
    check_cmd->add_option("--conclusion", o.conclusion, "Conclusion attributes")->delimiter(',')->expected(0, -1);
    auto* independent_cmd = implication_cmd->add_subcommand("independent", "Are the attributes independent?");
    add_io(independent_cmd, o);
    independent_cmd->add_option("--attributes", o.attributes, "Attribute names")->delimiter(',')->expected(0, -1);

    auto* plot_cmd = app.add_subcommand("plotdata", "Per-location crime counts from a cross-tab CSV");
    add_io(plot_cmd, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "ERROR Usage: " << e.what() << "\n";
        return 2;
    }

    // A bare list option (e.g. `--attributes` alone) arrives as one empty name.
    for (auto* names : {&o.objects, &o.attributes, &o.premise, &o.conclusion})
        std::erase(*names, std::string());

    try {
        if (scale_cmd->parsed()) {
            const ScalingScheme scheme = load_scheme(o.scheme, in);
            const ManyValuedTable table = parse_csv_table(read_input(o.input, in));
            write_output(o.output, write_cxt(scale(table, scheme)), out);
        } else if (concepts_cmd->parsed()) {
            const auto lattice = enumerate_concepts(load_context(o, s), {o.max_concepts});
            if (o.count_only) {
                write_output(o.output, std::to_string(lattice.size()) + "\n", out);
            } else {
                write_output(o.output,
                             "# " + std::to_string(lattice.size()) + " concepts\n" + write_concept_listing(lattice),
                             out);
            }
        } else if (lattice_cmd->parsed()) {
            const auto lattice = enumerate_concepts(load_context(o, s), {o.max_concepts});
            write_output(o.output, export_dot(lattice, o.labels == "full" ? Labeling::Full : Labeling::Reduced), out);
        } else if (derive_cmd->parsed()) {
            const FormalContext ctx = load_context(o, s);
            if (objects_opt->count() > 0) {
                write_output(o.output, joined_line(ctx.names_of(derive_objects(ctx, ctx.objects(o.objects)))), out);
            } else if (attributes_opt->count() > 0) {
                write_output(o.output, joined_line(ctx.names_of(derive_attributes(ctx, ctx.attributes(o.attributes)))),
                             out);
            } else {
                throw UsageError("derive needs --objects or --attributes");
            }
        } else if (crosstab_cmd->parsed()) {
            write_output(o.output, write_crosstab_csv(cross_tab(load_context(o, s), o.locations, o.crimes)), out);
        } else if (hotspots_cmd->parsed()) {
            write_output(o.output, write_hotspots_csv(hotspots(cross_tab(load_context(o, s), o.locations, o.crimes))),
                         out);
        } else if (check_cmd->parsed()) {
            const FormalContext ctx = load_context(o, s);
            const bool ok = holds(ctx, {ctx.attributes(o.premise), ctx.attributes(o.conclusion)});
            write_output(o.output, ok ? "holds\n" : "fails\n", out);
        } else if (independent_cmd->parsed()) {
            const FormalContext ctx = load_context(o, s);
            write_output(o.output, independent(ctx, ctx.attributes(o.attributes)) ? "independent\n" : "dependent\n",
                         out);
        } else if (plot_cmd->parsed()) {
            write_output(o.output, write_plot_data(parse_crosstab_csv(read_input(o.input, in))), out);
        }
    } catch (const UsageError& e) {
        err << "ERROR Usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "ERROR " << kind_name(e.kind()) << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace fca
