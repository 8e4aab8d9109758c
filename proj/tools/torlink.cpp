// Command-line front end: homology, cycle classification, linking
// matrices and Wilson-line expectation values on triangulated closed
// oriented 3-manifolds.
//
// Exit codes: 0 success, 2 parse error, 3 validation error,
// 4 constraint rejection, 5 unsupported input class, 1 internal error.

#include "torlink/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace torlink;
using exact::Int;

namespace {

struct CommonOpts {
    std::string manifold;
    std::string link_path;
    std::string output;
    std::string format = "text";
    int decimal_digits = 0;
};

manifold::Triangulation resolve_manifold(const std::string& src) {
    auto builtin = manifold::builtin_manifold(src);
    if (builtin) return std::move(*builtin);
    return manifold::load_triangulation(src);
}

void emit(const CommonOpts& opts, const std::string& report) {
    if (opts.output.empty()) {
        std::cout << report;
        return;
    }
    std::ofstream out(opts.output);
    if (!out) throw ParseError("cannot open output file: " + opts.output);
    out << report;
}

std::vector<Int> parse_charges(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(Int(tok));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad charge value \"" + tok + "\"");
        }
    }
    if (out.empty()) throw ParseError("empty charge list");
    return out;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_link) {
    cmd->add_option("--manifold", opts.manifold,
                    "builtin name (s3, rp3, lens-2..lens-8, s3fine) or path")
        ->required();
    if (with_link)
        cmd->add_option("--link", opts.link_path, "link declaration file");
    cmd->add_option("--output", opts.output, "write report to file");
    cmd->add_option("--format", opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--decimal-digits", opts.decimal_digits,
                    "render the complex value with this many digits");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linking and Wilson-line computations on "
                 "triangulated 3-manifolds"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string level_str;
    std::string charges_str;

    CLI::App* homology = app.add_subcommand("homology", "homology groups");
    add_common(homology, opts, false);

    CLI::App* classify =
        app.add_subcommand("classify", "classify declared or designated cycles");
    add_common(classify, opts, true);

    CLI::App* link_cmd =
        app.add_subcommand("link", "pairwise linking matrix of a framed link");
    add_common(link_cmd, opts, true);

    CLI::App* wilson =
        app.add_subcommand("wilson", "Wilson-line expectation value");
    add_common(wilson, opts, true);
    wilson->add_option("--level", level_str, "level k")->required();
    wilson->add_option("--charges", charges_str,
                       "comma-separated charge overrides");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        bool as_json = opts.format == "json";
        auto m = resolve_manifold(opts.manifold);

        if (homology->parsed()) {
            emit(opts, as_json ? io::homology_report_json(m)
                               : io::homology_report_text(m));
            return 0;
        }

        if (classify->parsed()) {
            std::map<std::string, manifold::DualCycle> cycles;
            if (!opts.link_path.empty()) {
                io::LinkFile lf = io::load_link_file(opts.link_path);
                cycles = io::resolve_cycles(lf, m);
            } else {
                cycles = m.designated_cycles();
            }
            if (cycles.empty())
                throw ValidationError("no cycles to classify");
            emit(opts, as_json ? io::classify_report_json(m, cycles)
                               : io::classify_report_text(m, cycles));
            return 0;
        }

        if (opts.link_path.empty())
            throw ParseError("this command requires --link");
        io::LinkFile lf = io::load_link_file(opts.link_path);
        cs::WilsonLink wl = io::resolve_link(lf, m);

        if (link_cmd->parsed()) {
            emit(opts, as_json ? io::linking_report_json(m, wl)
                               : io::linking_report_text(m, wl));
            return 0;
        }

        // wilson
        Int k;
        try {
            k = Int(level_str);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad level \"" + level_str + "\"");
        }
        if (!charges_str.empty())
            io::apply_charges(wl, parse_charges(charges_str));
        cs::WilsonReport rep = cs::wilson_report(wl, {k});
        emit(opts, as_json ? io::wilson_report_json(rep, opts.decimal_digits)
                           : io::wilson_report_text(rep, opts.decimal_digits));
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ConstraintError& e) {
        std::cerr << "constraint rejection: " << e.what() << "\n";
        return 4;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 5;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
