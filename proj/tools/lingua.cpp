// lingua — transpiler toolkit between OpenQASM and the Quipper ASCII
// circuit format. One multiplexed binary; every transformation is a
// subcommand reading --in and writing --out (default: stdin/stdout).
//
// Exit codes: 0 success, 1 bad input (parse errors, wire-safety violations,
// unrepresentable constructs, failed checks), 2 internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lq/catalog.hpp"
#include "lq/harness.hpp"
#include "lq/io.hpp"
#include "lq/passes.hpp"
#include "lq/support.hpp"
#include "lq/translate.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string &path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lq::input_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string &path, const std::string &text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw lq::input_error("cannot open output file '" + path + "'");
    out << text;
}

struct IoOpts {
    std::string in = "-";
    std::string out = "-";
};

void add_io(CLI::App *cmd, IoOpts &io) {
    cmd->add_option("--in", io.in, "input file ('-' for stdin)");
    cmd->add_option("--out", io.out, "output file ('-' for stdout)");
}

bool looks_like_qasm(const std::string &text) {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) return false;
    if (text.compare(i, 2, "//") == 0) {
        size_t nl = text.find('\n', i);
        if (nl == std::string::npos) return false;
        return looks_like_qasm(text.substr(nl + 1));
    }
    return text.compare(i, 8, "OPENQASM") == 0;
}

std::vector<std::string> include_search_dirs() {
    std::vector<std::string> dirs;
    if (const char *env = std::getenv("LINGUA_INCLUDE_PATH")) {
        std::stringstream ss(env);
        std::string d;
        while (std::getline(ss, d, ':'))
            if (!d.empty()) dirs.push_back(d);
    }
    std::error_code ec;
    fs::path exe = fs::read_symlink("/proc/self/exe", ec);
    if (!ec) {
        dirs.push_back((exe.parent_path() / "lib").string());
        dirs.push_back((exe.parent_path().parent_path() / "lib").string());
    }
    dirs.push_back("lib");
    return dirs;
}

std::string find_whitelist(const std::string &flag) {
    if (!flag.empty()) return flag;
    for (const auto &d : include_search_dirs()) {
        fs::path p = fs::path(d) / "lsc_whitelist.cfg";
        std::error_code ec;
        if (fs::exists(p, ec)) return p.string();
    }
    throw lq::input_error(
        "no whitelist given and lsc_whitelist.cfg not found on "
        "LINGUA_INCLUDE_PATH or next to the binary");
}

// QASM-in / QASM-out pass plumbing shared by most subcommands.
int run_qasm_pass(const IoOpts &io, lq::QasmProgram (*pass)(const lq::QasmProgram &)) {
    lq::QasmProgram p = lq::parse_qasm(slurp(io.in));
    spill(io.out, lq::write_qasm(pass(p)));
    return 0;
}

std::vector<std::string> split_csv(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"lingua: OpenQASM <-> Quipper transpiler toolkit"};
    app.require_subcommand(1);

    IoOpts io;
    std::string whitelist_flag;
    std::string includes_dir = ".";
    uint64_t seed = 0;
    int samples = 100;
    std::string laws_csv;

    auto *elim_ctrls = app.add_subcommand(
        "elim-ctrls", "eliminate control modifiers (Quipper or OpenQASM input)");
    auto *elim_invs =
        app.add_subcommand("elim-invs", "eliminate inverse modifiers (OpenQASM 3)");
    auto *elim_pows =
        app.add_subcommand("elim-pows", "eliminate power modifiers (OpenQASM 3)");
    auto *elim_funs = app.add_subcommand(
        "elim-funs", "inline wire-management calls and fold angles (OpenQASM 3)");
    auto *qasm_to_quip =
        app.add_subcommand("qasm-to-quip", "translate OpenQASM to Quipper ASCII");
    auto *quip_to_qasm =
        app.add_subcommand("quip-to-qasm", "translate Quipper ASCII to OpenQASM 3");
    auto *reg_merge =
        app.add_subcommand("reg-merge", "merge registers into one qubit/bit pair");
    auto *to_lsc = app.add_subcommand(
        "to-lsc", "restrict an OpenQASM 2.0 program to a lattice-surgery gate set");
    auto *to_qasm2 = app.add_subcommand("to-qasm2", "lower OpenQASM 3 to OpenQASM 2.0");
    auto *conformance =
        app.add_subcommand("conformance", "run the randomized law checker");
    auto *verify_catalog =
        app.add_subcommand("verify-catalog", "check every decomposition against the oracle");
    auto *emit_includes =
        app.add_subcommand("emit-includes", "write the generated .inc include files");

    for (auto *cmd : {elim_ctrls, elim_invs, elim_pows, elim_funs, qasm_to_quip,
                      quip_to_qasm, reg_merge, to_lsc, to_qasm2, conformance})
        add_io(cmd, io);
    to_lsc->add_option("--whitelist", whitelist_flag,
                       "whitelist config (default: lsc_whitelist.cfg on the search path)");
    conformance->add_option("--seed", seed, "base RNG seed");
    conformance->add_option("--samples", samples, "samples per law");
    conformance->add_option("--laws", laws_csv,
                            "comma-separated law-name substrings to run");
    emit_includes->add_option("--dir", includes_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (elim_ctrls->parsed()) {
            std::string text = slurp(io.in);
            if (looks_like_qasm(text))
                spill(io.out, lq::write_qasm(lq::elim_ctrls(lq::parse_qasm(text))));
            else
                spill(io.out, lq::write_quip(lq::elim_ctrls(lq::parse_quip(text))));
            return 0;
        }
        if (elim_invs->parsed()) return run_qasm_pass(io, lq::elim_invs);
        if (elim_pows->parsed()) return run_qasm_pass(io, lq::elim_pows);
        if (elim_funs->parsed()) return run_qasm_pass(io, lq::elim_funs);
        if (reg_merge->parsed()) return run_qasm_pass(io, lq::reg_merge);
        if (to_qasm2->parsed()) return run_qasm_pass(io, lq::to_qasm2);
        if (qasm_to_quip->parsed()) {
            spill(io.out, lq::write_quip(lq::qasm_to_quip(lq::parse_qasm(slurp(io.in)))));
            return 0;
        }
        if (quip_to_qasm->parsed()) {
            spill(io.out, lq::write_qasm(lq::quip_to_qasm(lq::parse_quip(slurp(io.in)))));
            return 0;
        }
        if (to_lsc->parsed()) {
            auto wl = lq::parse_lsc_whitelist(slurp(find_whitelist(whitelist_flag)));
            lq::QasmProgram p = lq::parse_qasm(slurp(io.in));
            spill(io.out, lq::write_qasm(lq::to_lsc(p, wl)));
            return 0;
        }
        if (conformance->parsed()) {
            lq::LawReport rep = lq::check_laws(seed, samples, split_csv(laws_csv));
            spill(io.out, lq::format_report(rep));
            return rep.ok() ? 0 : 1;
        }
        if (verify_catalog->parsed()) {
            bool all_ok = true;
            std::ostringstream out;
            out << "rule                     gates  deviation      status\n";
            for (const auto &r : lq::verify_catalog()) {
                bool ok = r.matrix_ok && r.controlled_ok && r.census_ok;
                all_ok = all_ok && ok;
                char dev[32];
                std::snprintf(dev, sizeof dev, "%-13.3e", r.deviation);
                out << r.id << std::string(r.id.size() < 25 ? 25 - r.id.size() : 1, ' ')
                    << r.body_size << (r.body_size < 10 ? "      " : "     ") << dev
                    << "  " << (ok ? "ok" : "FAIL");
                if (!r.matrix_ok) out << " [matrix]";
                if (!r.controlled_ok) out << " [controlled]";
                if (!r.census_ok) out << " [census]";
                out << "\n";
            }
            out << (all_ok ? "all rules verified\n" : "CATALOG FAILURES PRESENT\n");
            std::cout << out.str();
            return all_ok ? 0 : 1;
        }
        if (emit_includes->parsed()) {
            lq::IncludeSet inc = lq::emit_includes();
            fs::create_directories(includes_dir);
            spill((fs::path(includes_dir) / "quipgates.inc").string(), inc.quipgates);
            spill((fs::path(includes_dir) / "quipfuncs.inc").string(), inc.quipfuncs);
            spill((fs::path(includes_dir) / "bkpgates.inc").string(), inc.bkpgates);
            return 0;
        }
        return 2;  // unreachable: require_subcommand(1)
    } catch (const lq::input_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const lq::internal_error &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
