// Command-line front end: every pipeline stage with machine-readable output.
//
// Exit codes: 0 success, 1 invalid input or refused size guard, 2 action not
// effective (and --auto-reduce absent or insufficient), 3 internal invariant
// failure (including failed `verify` checks).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tquot/tquot.hpp"

namespace {

struct CommonOptions {
    std::string file;
    std::string inline_matrix;
    std::string format = "text";
    bool auto_reduce = false;
    bool force = false;
    std::size_t limit = 20;
};

void attach_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("file", opt.file, "path of a matrix file (text or JSON)");
    cmd->add_option("--matrix", opt.inline_matrix, "inline matrix text");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--auto-reduce", opt.auto_reduce,
                  "divide rows by their gcd before requiring effectiveness");
    cmd->add_flag("--force", opt.force, "bypass the subset-size guard");
    cmd->add_option("--limit", opt.limit, "subset-size guard for exponential stages")
        ->default_val(20);
}

std::string read_input(const CommonOptions& opt) {
    if (!opt.file.empty() && !opt.inline_matrix.empty()) {
        throw tquot::ParseError("give either a file or --matrix, not both");
    }
    if (!opt.inline_matrix.empty()) {
        // shells pass "\n" through literally; treat it as a row separator
        std::string text = opt.inline_matrix;
        std::size_t pos = 0;
        while ((pos = text.find("\\n", pos)) != std::string::npos) {
            text.replace(pos, 2, "\n");
            ++pos;
        }
        return text;
    }
    if (!opt.file.empty()) {
        std::ifstream in(opt.file);
        if (!in) throw tquot::ParseError("cannot open file: " + opt.file);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

struct LoadedAction {
    tquot::TorusAction action;
    tquot::report::json auto_reduce_log = tquot::report::json::array();
};

// Parses, optionally row-gcd-reduces, and enforces effectiveness when the
// subcommand needs it.
LoadedAction load_action(const CommonOptions& opt, bool needs_effective) {
    tquot::TorusAction a = tquot::parse_action(read_input(opt));
    LoadedAction out{a};
    if (opt.auto_reduce) {
        tquot::RowGcdReduction red = tquot::reduce_noneffective(a);
        for (const auto& [row, divisor] : red.divisions) {
            out.auto_reduce_log.push_back(tquot::report::json{
                {"op", "divide_row"}, {"row", row}, {"divisor", divisor.str()}});
            std::cerr << "auto-reduce: divided row " << row << " by " << divisor << "\n";
        }
        out.action = red.action;
    }
    if (needs_effective) tquot::require_effective(out.action);
    return out;
}

void emit(const CommonOptions& opt, const std::string& subcommand, tquot::report::json j,
          const tquot::report::json& auto_reduce_log) {
    if (!auto_reduce_log.empty()) j["auto_reduce"] = auto_reduce_log;
    if (opt.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << tquot::report::render_text(subcommand, j);
    }
}

void guard_size(const tquot::TorusAction& a, const CommonOptions& opt) {
    std::size_t n = a.circle_count();
    if (n > opt.limit && !opt.force) {
        throw tquot::SizeLimitError(
            "matrix has " + std::to_string(n) + " columns; exponential stage refused (limit " +
            std::to_string(opt.limit) + "; use --force to override)");
    }
    if (n > 25) {
        std::cerr << "warning: deletion-contraction above 25 elements may take very long\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quotients of odd spheres by linear torus actions: exact homology,"
                 " singular sets, and classification via the weight matroid"};
    app.require_subcommand(1);

    CommonOptions analyze_opt, tutte_opt, flats_opt, singular_opt, classify_opt, canon_opt,
        verify_opt;
    CLI::App* analyze = app.add_subcommand("analyze", "homology of the quotient space");
    CLI::App* tutte = app.add_subcommand("tutte", "Tutte polynomial from both engines");
    CLI::App* flats = app.add_subcommand("flats", "lattice of flats with Mobius values");
    CLI::App* singular = app.add_subcommand("singular", "singular set: strata, wedge, homology");
    CLI::App* classify = app.add_subcommand("classify", "structural classification of the quotient");
    CLI::App* canonicalize =
        app.add_subcommand("canonicalize", "row-gcd reduction with a move log");
    CLI::App* verify = app.add_subcommand("verify", "cross-module identity checks on one input");
    attach_common(analyze, analyze_opt);
    attach_common(tutte, tutte_opt);
    attach_common(flats, flats_opt);
    attach_common(singular, singular_opt);
    attach_common(classify, classify_opt);
    attach_common(canonicalize, canon_opt);
    attach_common(verify, verify_opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            LoadedAction in = load_action(analyze_opt, true);
            emit(analyze_opt, "analyze", tquot::report::analyze_report(in.action),
                 in.auto_reduce_log);
        } else if (tutte->parsed()) {
            LoadedAction in = load_action(tutte_opt, false);
            guard_size(in.action, tutte_opt);
            std::size_t limit = tutte_opt.force ? 63 : tutte_opt.limit;
            emit(tutte_opt, "tutte", tquot::report::tutte_report(in.action, limit),
                 in.auto_reduce_log);
        } else if (flats->parsed()) {
            LoadedAction in = load_action(flats_opt, false);
            guard_size(in.action, flats_opt);
            emit(flats_opt, "flats", tquot::report::flats_report(in.action), in.auto_reduce_log);
        } else if (singular->parsed()) {
            LoadedAction in = load_action(singular_opt, true);
            emit(singular_opt, "singular", tquot::report::singular_report(in.action),
                 in.auto_reduce_log);
        } else if (classify->parsed()) {
            LoadedAction in = load_action(classify_opt, true);
            emit(classify_opt, "classify", tquot::report::classify_report(in.action),
                 in.auto_reduce_log);
        } else if (canonicalize->parsed()) {
            LoadedAction in = load_action(canon_opt, false);
            emit(canon_opt, "canonicalize", tquot::report::canonicalize_report(in.action),
                 in.auto_reduce_log);
        } else if (verify->parsed()) {
            LoadedAction in = load_action(verify_opt, false);
            guard_size(in.action, verify_opt);
            std::size_t limit = verify_opt.force ? 63 : verify_opt.limit;
            tquot::report::json j = tquot::report::verify_report(in.action, limit);
            bool ok = j["all_passed"].get<bool>();
            emit(verify_opt, "verify", std::move(j), in.auto_reduce_log);
            if (!ok) return 3;
        }
    } catch (const tquot::NotEffectiveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "hint: rerun with --auto-reduce to divide rows by their gcd\n";
        return 2;
    } catch (const tquot::InternalError& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
