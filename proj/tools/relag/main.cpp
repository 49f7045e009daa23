#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using relag::cli::Options;

namespace {

struct Command {
    const char* name;
    const char* help;
};

const Command commands[] = {
    {"hom", "dimension and basis of Hom(M, N)"},
    {"ext", "dimensions of Ext^i(M, N), i = 1..--degree"},
    {"resolve", "minimal projective (or --injective) resolution"},
    {"pd", "projective dimension"},
    {"id", "injective dimension"},
    {"gldim", "global dimension of an algebra"},
    {"tau", "higher Auslander-Reiten translate tau_n (or --inverse)"},
    {"domdim", "Q-dominant (or --codominant) dimension of X, or of A given an algebra file"},
    {"addq-dim", "add(Q)-dimension (or --codim) of M"},
    {"quasi-degree", "quasi-generator (or --cogenerator) degree of Q"},
    {"check-ig", "Iwanaga-Gorenstein check"},
    {"check-pair", "relative Auslander-Gorenstein pair check for (A, Q)"},
    {"check-qpct", "(n, m, l)-quasi-precluster tilting check for Q over Lambda"},
    {"correspond", "correspondence from a pair (or --from-qpct)"},
    {"cm-check", "Cohen-Macaulay check for M"},
    {"window", "perpendicular window check for X against Q"},
    {"theorem-b", "window and add Q comparison across the correspondence"},
    {"verify", "re-check the certificates of a JSON report"},
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"relag: relative homological algebra over bound quiver algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--cap", o.cap, "search cap for dimensions and sequences")->capture_default_str();
    app.add_flag("--json", o.json, "print the JSON report");
    app.add_option("--seed", o.seed, "seed for randomized decomposition and isomorphism search")
        ->capture_default_str();
    app.add_flag("--force-below-bound", o.force_below_bound, "run checkers even when n < m + l + 2");
    app.add_option("--max-path-len", o.max_path_len, "path length bound when building algebras")
        ->capture_default_str();

    for (auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("files", o.files, "algebra (.alg), module (.mod) or report files")->required();
        std::string name = c.name;
        if (name == "ext") sub->add_option("--degree", o.degree, "highest degree")->capture_default_str();
        if (name == "resolve") {
            sub->add_flag("--injective", o.injective, "injective coresolution");
            sub->add_option("--length", o.length, "number of terms")->capture_default_str();
        }
        if (name == "tau") {
            sub->add_option("--n", o.n, "n >= 1")->capture_default_str();
            sub->add_flag("--inverse", o.inverse, "tau_n^-");
        }
        if (name == "domdim") sub->add_flag("--codominant", o.codominant, "codominant dimension");
        if (name == "addq-dim") sub->add_flag("--codim", o.codim, "add(Q)-codimension");
        if (name == "quasi-degree") sub->add_flag("--cogenerator", o.cogenerator, "cogenerator degree");
        if (name == "check-qpct" || name == "correspond") {
            sub->add_option("--n", o.qn, "n");
            sub->add_option("--m", o.qm, "m");
            sub->add_option("--l", o.ql, "l");
        }
        if (name == "correspond") {
            sub->add_flag("--from-qpct", o.from_qpct, "input is a quasi-precluster tilting module");
            sub->add_option("--write", o.write_prefix, "write PREFIX.alg and PREFIX_q.mod for the far side");
        }
        if (name == "window") {
            sub->add_option("--left", o.left_depth, "Ext^i(X, Q) = 0 for 1 <= i <= L")->capture_default_str();
            sub->add_option("--right", o.right_depth, "Ext^j(Q, X) = 0 for 1 <= j <= R")->capture_default_str();
        }
        if (name == "theorem-b") sub->add_option("--candidate", o.candidates, "candidate module over Lambda");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    o.command = app.get_subcommands().front()->get_name();
    auto out = relag::cli::run(o);
    if (o.json)
        std::cout << out.report.dump(2) << "\n";
    else if (out.exit_code == 2)
        std::cerr << relag::cli::render_text(out.report, out.exit_code);
    else
        std::cout << relag::cli::render_text(out.report, out.exit_code);
    return out.exit_code;
}
