#include "doctest.h"
#include "lq/ir.hpp"

using namespace lq;

namespace {

QasmProgram tiny_qasm() {
    QasmProgram p;
    p.dialect = Dialect::Qasm3;
    p.includes = {"stdgates.inc"};
    p.decls = {{true, "q", 2}, {false, "c", 1}};
    Statement s;
    s.gate = GateKind::H;
    s.operands = {{"q", 0}};
    p.stmts.push_back(s);
    Statement cx;
    cx.gate = GateKind::X;
    cx.mods = {{ModKind::PosCtrl, 0}};
    cx.operands = {{"q", 0}, {"q", 1}};
    p.stmts.push_back(cx);
    return p;
}

}  // namespace

TEST_CASE("qasm validate catches arity and resolution errors") {
    QasmProgram p = tiny_qasm();
    CHECK(validate(p).empty());

    SUBCASE("unknown register") {
        p.stmts[0].operands[0].reg = "r";
        CHECK(!validate(p).empty());
    }
    SUBCASE("index out of range") {
        p.stmts[0].operands[0].index = 5;
        CHECK(!validate(p).empty());
    }
    SUBCASE("repeated operand") {
        p.stmts[1].operands[1] = {"q", 0};
        CHECK(!validate(p).empty());
    }
    SUBCASE("bad parameter count") {
        p.stmts[0].params.push_back(Angle(1.0));
        CHECK(!validate(p).empty());
    }
    SUBCASE("modifier in 2.0") {
        p.dialect = Dialect::Qasm2;
        p.includes = {"qelib1.inc"};
        p.decls[1].size = 1;
        // An absorbable control (cx) is fine...
        CHECK(validate(p).empty());
        // ...but inv @ has no 2.0 spelling.
        p.stmts[0].mods.push_back({ModKind::Inverse, 0});
        CHECK(!validate(p).empty());
    }
}

TEST_CASE("qasm structural equality is normalized and alpha-aware") {
    QasmProgram a = tiny_qasm();
    QasmProgram b = tiny_qasm();
    b.comments.push_back("anything");
    CHECK(structural_eq(a, b));

    // Different register names: only alpha-equality accepts.
    for (auto &d : b.decls)
        if (d.name == "q") d.name = "reg";
    for (auto &s : b.stmts)
        for (auto &op : s.operands)
            if (op.reg == "q") op.reg = "reg";
    CHECK(!structural_eq(a, b));
    CHECK(structural_eq(a, b, true));

    // A changed angle text is normalized away only if the value matches.
    a.stmts[0].params.clear();
    b.stmts[0].params.clear();
    CHECK(structural_eq(a, b, true));
}

TEST_CASE("wire-state DFA transitions and error names") {
    WireState s = WireState::Fresh;
    CHECK(!dfa_step(s, WireEvent::Init));
    CHECK(s == WireState::LiveAncilla);
    CHECK(*dfa_step(s, WireEvent::Init) == "DoubleInit");
    CHECK(!dfa_step(s, WireEvent::Use));
    CHECK(!dfa_step(s, WireEvent::Term));
    CHECK(s == WireState::Dead);
    CHECK(*dfa_step(s, WireEvent::Use) == "UseAfterTerm");
    CHECK(!dfa_step(s, WireEvent::Init));

    WireState f = WireState::Fresh;
    CHECK(*dfa_step(f, WireEvent::Term) == "TermBeforeInit");
}

TEST_CASE("run_dfa flags UseBeforeInit and tracks ancilla intervals") {
    QuipCircuit c;
    c.inputs = {{0, WireType::Qbit}};
    c.gates.push_back(QuipGate::unitary(GateKind::X, {1}));
    auto err = run_dfa(c);
    REQUIRE(err);
    CHECK(err->name == "UseBeforeInit");
    CHECK(err->wire == 1);

    QuipCircuit ok;
    ok.inputs = {{0, WireType::Qbit}};
    ok.gates.push_back(QuipGate::simple(QuipGate::Kind::QInit, 1, 0));
    ok.gates.push_back(QuipGate::unitary(GateKind::X, {1}, {{0, true}}));
    ok.gates.push_back(QuipGate::simple(QuipGate::Kind::QTerm, 1, 0));
    ok.outputs = {{0, WireType::Qbit}};
    WireSummary sum;
    CHECK(!run_dfa(ok, &sum));
    REQUIRE(sum.ancilla_intervals.size() == 1);
    CHECK(sum.ancilla_intervals[0] == std::pair<int, int>{0, 2});
    CHECK(validate(ok).empty());
}

TEST_CASE("quip structural equality relabels wires") {
    QuipCircuit a;
    a.inputs = {{0, WireType::Qbit}, {1, WireType::Qbit}};
    a.gates.push_back(QuipGate::unitary(GateKind::X, {1}, {{0, true}}));
    a.outputs = a.inputs;

    QuipCircuit b;
    b.inputs = {{3, WireType::Qbit}, {7, WireType::Qbit}};
    b.gates.push_back(QuipGate::unitary(GateKind::X, {7}, {{3, true}}));
    b.outputs = b.inputs;

    CHECK(!structural_eq(a, b));
    CHECK(structural_eq(a, b, true));

    // Control order is canonicalized under alpha-equality.
    QuipCircuit c = a, d = a;
    c.gates[0] = QuipGate::unitary(GateKind::X, {1}, {{0, true}});
    d.gates[0] = QuipGate::unitary(GateKind::X, {1}, {{0, true}});
    CHECK(structural_eq(c, d, true));
}
