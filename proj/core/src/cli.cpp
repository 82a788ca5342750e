#include "twobridge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "twobridge/census.hpp"
#include "twobridge/json_io.hpp"
#include "twobridge/pretzel.hpp"
#include "twobridge/smoothing.hpp"
#include "twobridge/surface.hpp"
#include "twobridge/tree.hpp"

namespace twobridge {

namespace {

// Knot input is either "beta/alpha" or a positive expansion "[n1,n2,...]",
// told apart by the leading character.
Fraction parse_knot_input(const std::string& text) {
    if (!text.empty() && text.front() == '[') {
        Expansion e = Expansion::parse(text);
        if (!e.is_positive())
            throw DomainError("knot expansion must be all-positive with final term >= 2: " + text);
        return normalize_knot_fraction(cf_value(e));
    }
    return normalize_knot_fraction(Fraction::parse(text));
}

Int parse_int_option(const std::string& text, const std::string& name) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw DomainError("option " + name + " expects an integer, got \"" + text + "\"");
    }
}

std::string int_list(const std::vector<Int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += values[i].str();
    }
    return out + "]";
}

void print_surface_table(const std::vector<Surface>& surfaces, std::ostream& out) {
    if (!surfaces.empty()) {
        out << "knot " << surfaces.front().knot.str() << "  n=" << surfaces.front().n.str()
            << "  surfaces=" << surfaces.size() << "\n";
    }
    out << "eps\tm\tslope\torientable\tweight\tdeltas\n";
    for (const Surface& s : surfaces) {
        out << s.eps.str() << "\t" << s.m.str() << "\t" << s.slope.str() << "\t"
            << (s.orientable ? "yes" : "no") << "\t" << s.weight.str() << "\t"
            << int_list(s.deltas) << "\n";
    }
}

void print_pretzel_table(const std::vector<PretzelSurfaceRecord>& table, const Int& p,
                         const Int& q, const Int& r, std::ostream& out) {
    out << "pretzel (" << p.str() << "," << q.str() << "," << r.str()
        << "): conjectural ideal-point weights\n";
    out << "type\tformula\tweight\tslope\tconjectural\n";
    for (const PretzelSurfaceRecord& rec : table) {
        out << (rec.surface_type == PretzelSurfaceType::TypeIII ? "TypeIII" : "TypeII") << "\t"
            << rec.weight_formula_id << "\t" << rec.weight.str() << "\t"
            << (rec.slope ? rec.slope->str() : "-") << "\t"
            << (rec.conjectural ? "yes" : "no") << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"2-bridge knot essential surfaces, ideal-point weights, CGLS seminorms, "
                 "and basic trees"};
    app.require_subcommand(1);

    std::string knot_text;
    bool as_json = false;

    CLI::App* surfaces_cmd = app.add_subcommand("surfaces", "list the essential state surfaces");
    surfaces_cmd->add_option("--knot", knot_text, "knot as beta/alpha or [n1,n2,...]")->required();
    surfaces_cmd->add_flag("--json", as_json, "emit JSON records");

    std::string p_text, q_text, r_text;
    CLI::App* seminorm_cmd = app.add_subcommand("seminorm", "evaluate the CGLS seminorm at (p,q)");
    seminorm_cmd->add_option("--knot", knot_text, "knot as beta/alpha or [n1,n2,...]")->required();
    seminorm_cmd->add_option("--p", p_text, "meridian coefficient")->required();
    seminorm_cmd->add_option("--q", q_text, "longitude coefficient")->required();

    std::string smoothing_text, dot_path;
    bool with_actions = false;
    CLI::App* tree_cmd = app.add_subcommand("tree", "assemble and export the basic tree");
    tree_cmd->add_option("--knot", knot_text, "knot as beta/alpha or [n1,n2,...]")->required();
    tree_cmd->add_option("--smoothing", smoothing_text, "smoothing bits, e.g. 0100")->required();
    tree_cmd->add_option("--dot", dot_path, "write DOT to this file instead of stdout");
    tree_cmd->add_flag("--actions", with_actions, "also list the angle assignments");
    tree_cmd->add_flag("--json", as_json, "print the JSON form instead of DOT");

    std::int64_t max_alpha = 99;
    int jobs = 1;
    CLI::App* census_cmd = app.add_subcommand("census", "verify the invariant suites over all "
                                                        "knot classes with odd alpha <= N");
    census_cmd->add_option("--max-alpha", max_alpha, "largest alpha to include")->required();
    census_cmd->add_option("--jobs", jobs, "worker threads");

    CLI::App* crosscheck_cmd =
        app.add_subcommand("crosscheck", "compare smoothing-generated expansions with the "
                                         "brute-force enumeration");
    crosscheck_cmd->add_option("--knot", knot_text, "knot as beta/alpha or [n1,n2,...]")->required();
    crosscheck_cmd->add_flag("--json", as_json, "emit the report as JSON");

    CLI::App* pretzel_cmd =
        app.add_subcommand("pretzel", "conjectural weight table for the (p,q,r) pretzel knot");
    pretzel_cmd->add_option("--p", p_text, "first twist count (odd, > 1)")->required();
    pretzel_cmd->add_option("--q", q_text, "second twist count (odd, > 1)")->required();
    pretzel_cmd->add_option("--r", r_text, "third twist count (odd, > 1)")->required();
    pretzel_cmd->add_flag("--json", as_json, "emit JSON records");

    std::vector<const char*> argv;
    argv.push_back("twobridge");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (surfaces_cmd->parsed()) {
            std::vector<Surface> surfaces = build_surfaces(parse_knot_input(knot_text));
            if (as_json) out << surfaces_to_json(surfaces);
            else print_surface_table(surfaces, out);
            return 0;
        }
        if (seminorm_cmd->parsed()) {
            PeripheralCurve c{parse_int_option(p_text, "--p"), parse_int_option(q_text, "--q")};
            out << cgls_seminorm(parse_knot_input(knot_text), c).str() << "\n";
            return 0;
        }
        if (tree_cmd->parsed()) {
            Fraction knot = parse_knot_input(knot_text);
            Expansion n = positive_expansion(knot);
            Smoothing s = Smoothing::parse(smoothing_text);
            BasicTree tree = assemble_basic_tree(n, s);
            std::string dot = export_dot(tree);
            if (!dot_path.empty()) {
                std::ofstream file(dot_path, std::ios::binary);
                if (!file) throw DomainError("cannot open " + dot_path + " for writing");
                file << dot;
            }
            if (as_json) out << tree_to_json(tree);
            else if (dot_path.empty()) out << dot;
            if (with_actions) {
                Expansion m = generate_expansion(n, s);
                std::vector<AngleAssignment> actions = enumerate_actions(tree, m);
                out << "actions: " << actions.size() << "\n";
                for (const AngleAssignment& a : actions) {
                    std::string line = "(";
                    for (std::size_t i = 0; i < a.multipliers.size(); ++i) {
                        if (i) line += ",";
                        line += a.multipliers[i].str();
                    }
                    out << line << ")\n";
                }
            }
            return 0;
        }
        if (census_cmd->parsed()) {
            CensusOptions options;
            options.max_alpha = max_alpha;
            options.jobs = jobs;
            CensusReport report = run_census(options);
            print_report(report, out);
            return report.ok() ? 0 : 1;
        }
        if (crosscheck_cmd->parsed()) {
            CrosscheckReport report = crosscheck_expansions(parse_knot_input(knot_text));
            if (as_json) {
                out << crosscheck_to_json(report);
            } else {
                out << "knot " << report.knot.str() << ": " << report.generated.size()
                    << " generated, " << report.enumerated.size() << " enumerated: "
                    << (report.match() ? "MATCH" : "MISMATCH") << "\n";
                for (const Expansion& e : report.only_generated)
                    out << "  only generated: " << e.str() << "\n";
                for (const Expansion& e : report.only_enumerated)
                    out << "  only enumerated: " << e.str() << "\n";
            }
            return report.match() ? 0 : 1;
        }
        if (pretzel_cmd->parsed()) {
            Int p = parse_int_option(p_text, "--p");
            Int q = parse_int_option(q_text, "--q");
            Int r = parse_int_option(r_text, "--r");
            std::vector<PretzelSurfaceRecord> table = pretzel_surface_table(p, q, r);
            if (as_json) out << pretzel_table_to_json(table);
            else print_pretzel_table(table, p, q, r, out);
            return 0;
        }
    } catch (const IntegralityViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace twobridge
