// Command-line front end: decide whether an invariant two-pile removal game
// exists whose P-positions are a prescribed complementary Beatty pair, and
// inspect the objects the decision is built from.
//
// Exit codes: 0 = GOOD / MATCH / pass, 1 = NOT_GOOD / MISMATCH / fail,
// 2 = UNDECIDED / usage or input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "bg/emit.hpp"
#include "bg/errors.hpp"
#include "bg/game.hpp"
#include "bg/goodness.hpp"
#include "bg/torus.hpp"
#include "bg/tuple.hpp"
#include "bg/word.hpp"

namespace {

struct TupleArgs {
    std::string beta, gamma, delta, alpha;
};

void add_tuple_options(CLI::App* cmd, TupleArgs& args, bool need_offset) {
    cmd->add_option("--beta", args.beta, "beta as an exact expression, e.g. \"3.99+sqrt(5)/2\"")
        ->required();
    auto* g = cmd->add_option("--gamma", args.gamma, "gamma expression");
    auto* d = cmd->add_option("--delta", args.delta, "delta expression");
    cmd->add_option("--alpha", args.alpha,
                    "optional alpha expression, cross-checked against beta/(beta-1)");
    if (need_offset) {
        g->excludes(d);
    }
}

bg::Tuple4 build_tuple(const TupleArgs& args) {
    std::optional<bg::Real> gamma, delta;
    if (!args.gamma.empty()) gamma = bg::parse_real(args.gamma);
    if (!args.delta.empty()) delta = bg::parse_real(args.delta);
    bg::Real beta = bg::parse_real(args.beta);
    bg::Tuple4 t = bg::derive_tuple(beta, gamma, delta);
    if (!args.alpha.empty()) {
        bg::Real alpha = bg::parse_real(args.alpha);
        if (!(alpha - t.alpha).is_zero()) {
            throw bg::DomainError("--alpha does not equal beta/(beta-1)");
        }
    }
    return t;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw bg::DomainError("cannot open output file: " + path);
    return file;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant-game decision tool for complementary Beatty pairs"};
    app.require_subcommand(1);

    long precision_bits = 4096;
    long long scan_budget = 10000000;
    app.add_option("--precision-bits", precision_bits, "refinement cap for exact arithmetic");
    app.add_option("--scan-budget", scan_budget, "orbit scan iteration budget");

    TupleArgs derive_args, decide_args, verify_args, word_args, superadd_args, plot_args;
    std::string out_path, format = "text";
    long long bound = 300, horizon = 1000, length = 20, steps = 10;

    auto* cmd_derive = app.add_subcommand("derive", "derive and validate a tuple from beta + one offset");
    add_tuple_options(cmd_derive, derive_args, true);

    auto* cmd_decide = app.add_subcommand("decide", "decide whether an invariant game exists");
    add_tuple_options(cmd_decide, decide_args, true);

    auto* cmd_verify = app.add_subcommand("verify", "brute-force game check on a grid");
    add_tuple_options(cmd_verify, verify_args, true);
    cmd_verify->add_option("--bound", bound, "safe-region bound N (compares on x+y <= N)");

    auto* cmd_word = app.add_subcommand("word", "emit the gap/letter table");
    add_tuple_options(cmd_word, word_args, true);
    cmd_word->add_option("--length", length, "letters to emit");
    cmd_word->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_superadd = app.add_subcommand("superadd", "superadditivity classification");
    add_tuple_options(cmd_superadd, superadd_args, true);
    cmd_superadd->add_option("--horizon", horizon, "pair-scan horizon");

    auto* cmd_plot = app.add_subcommand("plot-torus", "SVG of coding regions and orbit points");
    add_tuple_options(cmd_plot, plot_args, true);
    cmd_plot->add_option("--steps", steps, "orbit points to draw (0..steps)");
    cmd_plot->add_option("--out", out_path, "output file (default stdout)");
    cmd_plot->add_option("--format", format, "svg (default)");

    CLI11_PARSE(app, argc, argv);
    bg::Config::set_precision_bits(precision_bits);
    bg::Config::set_scan_budget(scan_budget);

    try {
        if (cmd_derive->parsed()) {
            bg::Tuple4 t = build_tuple(derive_args);
            std::cout << bg::tuple_record(t, bg::validate_tuple(t));
            return 0;
        }
        if (cmd_decide->parsed()) {
            bg::Tuple4 t = build_tuple(decide_args);
            bg::GoodnessVerdict v = bg::decide_good(t);
            std::cout << v.to_text();
            switch (v.verdict) {
                case bg::Verdict::Good: return 0;
                case bg::Verdict::NotGood: return 1;
                case bg::Verdict::Undecided: return 2;
            }
        }
        if (cmd_verify->parsed()) {
            bg::Tuple4 t = build_tuple(verify_args);
            bg::InvarianceReport rep = bg::verify_invariance(t, bound);
            std::cout << rep.to_text();
            return rep.match ? 0 : 1;
        }
        if (cmd_word->parsed()) {
            bg::Tuple4 t = build_tuple(word_args);
            bg::ProductWord w(t);
            std::ofstream file;
            bg::tsv_word_table(w, length, open_out(file, out_path));
            return 0;
        }
        if (cmd_superadd->parsed()) {
            bg::Tuple4 t = build_tuple(superadd_args);
            bg::SuperadditivityReport rep = bg::check_superadditivity(t, horizon);
            std::cout << rep.to_text(t);
            return rep.cls == bg::SuperadditivityClass::B1Superadditive ? 0 : 1;
        }
        if (cmd_plot->parsed()) {
            bg::Tuple4 t = build_tuple(plot_args);
            std::ofstream file;
            bg::svg_torus(t, steps, open_out(file, out_path));
            return 0;
        }
    } catch (const bg::TupleInvalid& e) {
        std::cerr << e.what();
        return 1;
    } catch (const bg::ParseError& e) {
        std::cerr << "expression error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
