// End-to-end acceptance checks: the decomposition catalog, the randomized
// law suite at release sample counts, the QPE fixture round trip, the full
// lattice-surgery lowering pipeline, and the wire-safety automaton.

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "lq/catalog.hpp"
#include "lq/harness.hpp"
#include "lq/io.hpp"
#include "lq/oracle.hpp"
#include "lq/passes.hpp"
#include "lq/translate.hpp"

using namespace lq;

namespace {

std::string data_file(const std::string &name) {
    const char *dir = std::getenv("LQ_DATA_DIR");
    REQUIRE(dir != nullptr);
    std::ifstream in(std::string(dir) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string lib_file(const std::string &name) {
    const char *dir = std::getenv("LQ_LIB_DIR");
    REQUIRE(dir != nullptr);
    std::ifstream in(std::string(dir) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void require_all_hold(const LawReport &rep, int samples) {
    for (const auto &row : rep.rows) {
        INFO(row.law, "\n", row.counterexample);
        CHECK(row.samples == samples);
        CHECK(row.failures == 0);
    }
    CHECK(rep.ok());
}

}  // namespace

TEST_CASE("catalog: every decomposition verifies against the oracle") {
    auto reports = verify_catalog();
    CHECK(reports.size() >= 40);
    for (const auto &r : reports) {
        INFO(r.id, " deviation=", r.deviation);
        CHECK(r.matrix_ok);
        CHECK(r.controlled_ok);
        CHECK(r.census_ok);
        CHECK(r.deviation < 1e-9);
    }
}

TEST_CASE("laws: retraction on 1000 samples per frontend") {
    LawReport rep = check_laws(2026, 1000, {"retraction"});
    REQUIRE(rep.rows.size() == 3);
    require_all_hold(rep, 1000);
}

TEST_CASE("laws: inversion and idempotence on 500 samples") {
    LawReport rep = check_laws(2027, 500, {"inversion", "idempotence"});
    REQUIRE(rep.rows.size() == 4);
    require_all_hold(rep, 500);
}

TEST_CASE("laws: semantic preservation on 500 measurement-free samples") {
    LawReport rep = check_laws(2028, 500, {"preservation"});
    REQUIRE(rep.rows.size() == 2);
    require_all_hold(rep, 500);
}

TEST_CASE("laws: pass fixpoints and output census on 500 samples") {
    LawReport rep = check_laws(2029, 500, {"fixpoints"});
    REQUIRE(rep.rows.size() == 2);
    require_all_hold(rep, 500);
}

TEST_CASE("QPE fixture: translation shape, arity, and semantics") {
    QuipCircuit q = parse_quip(data_file("qpe.quip"));
    QasmProgram ref = parse_qasm(data_file("qpe.qasm"));

    QasmProgram p1 = quip_to_qasm(q);
    std::string text = write_qasm(p1);
    // Shape: named input array, one ancilla qubit, classical results.
    CHECK(text.find("qubit[4] input_qwires") != std::string::npos);
    CHECK(text.find("qubit qtmp_0") != std::string::npos);
    CHECK(text.find("QInit0(qtmp_0)") != std::string::npos);
    CHECK(text.find("QTerm0(qtmp_0)") != std::string::npos);
    CHECK(text.find("= QMeas(input_qwires[") != std::string::npos);
    CHECK(text.find("CDiscard(ctmp_") != std::string::npos);
    // The ancilla's init/term interval encloses its one controlled gate.
    size_t init = text.find("QInit0(qtmp_0)");
    size_t use = text.find("ctrl @ t qtmp_0, input_qwires[0]");
    size_t term = text.find("QTerm0(qtmp_0)");
    REQUIRE(use != std::string::npos);
    CHECK(init < use);
    CHECK(use < term);

    // Round trip: back to a 4-qubit circuit plus the same ancilla interval.
    QuipCircuit q2 = qasm_to_quip(p1);
    REQUIRE(q2.inputs.size() == 4);
    for (auto [w, t] : q2.inputs) CHECK(t == WireType::Qbit);
    WireSummary s1, s2;
    REQUIRE(!run_dfa(q, &s1));
    REQUIRE(!run_dfa(q2, &s2));
    CHECK(s1.ancilla_intervals.size() == s2.ancilla_intervals.size());

    // Semantics: the unitary prefix agrees with the hand-written OpenQASM
    // reference once the ancilla is traced out.
    PrefixOracle a = prefix_matrix(q);
    PrefixOracle b = prefix_matrix(ref);
    REQUIRE(a.n_main == 4);
    REQUIRE(b.n_main == 4);
    REQUIRE(a.anc_values.size() == 1);
    CHECK(ancilla_identity_check(a.m, b.m, a.anc_values, 1e-9, true));
    // And with the translated copy of the circuit.
    PrefixOracle c = prefix_matrix(q2);
    CHECK(ancilla_identity_check(c.m, b.m, c.anc_values, 1e-9, true));
}

TEST_CASE("pipeline: QPE lowers to the lattice-surgery gate set") {
    QuipCircuit q = parse_quip(data_file("qpe.quip"));
    std::set<std::string> wl = parse_lsc_whitelist(lib_file("lsc_whitelist.cfg"));

    QasmProgram out = to_lsc(
        to_qasm2(reg_merge(elim_funs(elim_pows(elim_invs(
            quip_to_qasm(elim_ctrls(q))))))),
        wl);

    // Parses back as OpenQASM 2.0.
    std::string text = write_qasm(out);
    QasmProgram reparsed = parse_qasm(text);
    CHECK(reparsed.dialect == Dialect::Qasm2);

    // Exactly one quantum and one classical register.
    int nq = 0, nc = 0;
    for (const auto &d : out.decls) (d.quantum ? nq : nc)++;
    CHECK(nq == 1);
    CHECK(nc == 1);

    // Every emitted operation is on the whitelist.
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        size_t i = line.find_first_not_of(" \t");
        if (i == std::string::npos) continue;
        std::string tok = line.substr(i, line.find_first_of(" \t(;", i) - i);
        if (tok == "OPENQASM" || tok == "include" || tok == "qreg" ||
            tok == "creg" || tok.rfind("//", 0) == 0)
            continue;
        INFO("line: ", line);
        CHECK(wl.count(tok) == 1);
    }

    // Semantics match the reference program, ancillas traced out.
    QasmProgram ref = parse_qasm(data_file("qpe.qasm"));
    PrefixOracle low = prefix_matrix(out);
    PrefixOracle b = prefix_matrix(ref);
    int extra = 0;
    for (int d = low.m.dim(); d > b.m.dim(); d /= 2) ++extra;
    std::vector<int> anc(static_cast<size_t>(extra), 0);
    CHECK(ancilla_identity_check(low.m, b.m, anc, 1e-9, true));
}

TEST_CASE("wire safety: the automaton pinpoints violations") {
    auto error_of = [](const QuipCircuit &c) {
        auto err = run_dfa(c);
        REQUIRE(err.has_value());
        return *err;
    };

    QuipCircuit c;
    c.inputs = {{0, WireType::Qbit}};
    c.gates = {QuipGate::simple(QuipGate::Kind::QInit, 0, 0)};
    DfaError e = error_of(c);
    CHECK(e.name == "DoubleInit");
    CHECK(e.wire == 0);
    CHECK(e.gate_index == 0);

    c.gates = {QuipGate::unitary(GateKind::X, {1}, {{0, true}})};
    e = error_of(c);
    CHECK(e.name == "UseBeforeInit");
    CHECK(e.wire == 1);
    CHECK(e.gate_index == 0);

    c.inputs = {{0, WireType::Qbit}, {1, WireType::Qbit}};
    c.gates = {QuipGate::simple(QuipGate::Kind::QTerm, 0, 0),
               QuipGate::unitary(GateKind::X, {1}, {{0, true}})};
    e = error_of(c);
    CHECK(e.name == "UseAfterTerm");
    CHECK(e.wire == 0);
    CHECK(e.gate_index == 1);

    // Termination followed by re-initialization of the same wire is legal.
    QuipCircuit ok = parse_quip(
        "Inputs: 0:Qbit\n"
        "QTerm0(0)\n"
        "QInit1(0)\n"
        "QGate[\"H\"](0)\n"
        "Outputs: 0:Qbit\n");
    CHECK(!run_dfa(ok));
    CHECK(validate(ok).empty());
}

TEST_CASE("shipped include files match the generated ones") {
    IncludeSet inc = emit_includes();
    CHECK(lib_file("quipgates.inc") == inc.quipgates);
    CHECK(lib_file("quipfuncs.inc") == inc.quipfuncs);
    CHECK(lib_file("bkpgates.inc") == inc.bkpgates);
}
