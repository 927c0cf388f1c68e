#include "doctest.h"
#include "lq/io.hpp"

using namespace lq;

TEST_CASE("qasm3 parse/write retraction on a modifier-rich program") {
    std::string src =
        "OPENQASM 3;\n"
        "include \"stdgates.inc\";\n"
        "qubit[3] q;\n"
        "bit[2] c;\n"
        "h q[0];\n"
        "cx q[0], q[1];\n"
        "ctrl @ x q[0], q[1];\n"
        "negctrl @ ctrl @ x q[0], q[1], q[2];\n"
        "inv @ s q[2];\n"
        "pow(3) @ t q[1];\n"
        "cp(pi/2) q[0], q[1];\n"
        "U(1.5, 0.25, -0.5) q[2];\n"
        "gphase(pi/4);\n"
        "c[0] = measure q[0];\n"
        "reset q[2];\n";
    QasmProgram p = parse_qasm(src);
    CHECK(p.dialect == Dialect::Qasm3);
    CHECK(p.stmts.size() == 11);
    // cx and ctrl @ x parse to the same statement.
    CHECK(structural_eq(QasmProgram{p.dialect, p.includes, {}, p.decls, {p.stmts[1]}},
                        QasmProgram{p.dialect, p.includes, {}, p.decls, {p.stmts[2]}}));

    std::string once = write_qasm(p);
    QasmProgram p2 = parse_qasm(once);
    CHECK(structural_eq(p, p2));
    CHECK(write_qasm(p2) == once);  // writer is a fixed point after one pass
}

TEST_CASE("qasm2 parse/write retraction and name-table split") {
    std::string src =
        "OPENQASM 2.0;\n"
        "include \"qelib1.inc\";\n"
        "qreg q[2];\n"
        "creg c[2];\n"
        "h q[0];\n"
        "cx q[0], q[1];\n"
        "rz(0.5) q[0];\n"
        "cu1(0.25) q[0], q[1];\n"
        "measure q[0] -> c[0];\n";
    QasmProgram p = parse_qasm(src);
    CHECK(p.dialect == Dialect::Qasm2);
    // qelib1 rz is the phase gate, not the true z-rotation.
    CHECK(p.stmts[2].gate == GateKind::P);
    std::string once = write_qasm(p);
    CHECK(structural_eq(p, parse_qasm(once)));
    CHECK(write_qasm(parse_qasm(once)) == once);

    // In dialect 3 the same spelling is the true rotation.
    QasmProgram p3 = parse_qasm(
        "OPENQASM 3;\ninclude \"stdgates.inc\";\nqubit q;\nrz(0.5) q;\n");
    CHECK(p3.stmts[0].gate == GateKind::Rz);
}

TEST_CASE("include gating is enforced") {
    CHECK_THROWS_AS(parse_qasm("OPENQASM 3;\nqubit q;\nh q;\n"), input_error);
    CHECK_THROWS_AS(
        parse_qasm("OPENQASM 3;\ninclude \"stdgates.inc\";\nqubit q;\nquip_e q;\n"),
        input_error);
    CHECK_NOTHROW(parse_qasm(
        "OPENQASM 3;\ninclude \"stdgates.inc\";\ninclude \"quipgates.inc\";\n"
        "qubit q;\nquip_e q;\n"));
    // sx is stdgates in 3 but bkpgates in 2.0.
    CHECK_THROWS_AS(
        parse_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\nsx q[0];\n"),
        input_error);
    CHECK_NOTHROW(parse_qasm(
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\ninclude \"bkpgates.inc\";\n"
        "qreg q[1];\nsx q[0];\n"));
    CHECK_THROWS_AS(parse_qasm("OPENQASM 3;\ninclude \"no_such.inc\";\n"), input_error);
}

TEST_CASE("angle expressions fold and texts are preserved for non-literals") {
    CHECK(parse_angle_expr("pi/2") == doctest::Approx(1.5707963267948966));
    CHECK(parse_angle_expr("2*arctan(1)") == doctest::Approx(1.5707963267948966));
    CHECK(parse_angle_expr("pow(2, 3)") == doctest::Approx(8.0));
    CHECK_THROWS_AS(parse_angle_expr("1/0"), input_error);
    CHECK_THROWS_AS(parse_angle_expr("sqrt(-1)"), input_error);

    QasmProgram p = parse_qasm(
        "OPENQASM 3;\ninclude \"stdgates.inc\";\nqubit q;\nrz(pi/2) q;\nrz(0.5) q;\n");
    CHECK(p.stmts[0].params[0].text == "pi/2");
    CHECK(p.stmts[1].params[0].text.empty());
    std::string out = write_qasm(p);
    CHECK(out.find("rz(pi/2)") != std::string::npos);
}

TEST_CASE("quipper parse/write retraction") {
    std::string src =
        "Inputs: 0:Qbit, 1:Qbit, 2:Cbit\n"
        "QGate[\"H\"](0)\n"
        "QGate[\"not\"](1) with controls=[+0]\n"
        "QGate[\"S\"]*(0)\n"
        "QGate[\"T\"](1) with controls=[-0]\n"
        "QRot[\"exp(-i%Z)\",0.5](0)\n"
        "QRot[\"R(2pi/%)\",3](1) with controls=[+0]\n"
        "GPhase[0.25] with controls=[+0,+1]\n"
        "QInit0(3)\n"
        "QGate[\"W\"](1,3)\n"
        "QMeas(3)\n"
        "CDiscard(3)\n"
        "Outputs: 0:Qbit, 1:Qbit, 2:Cbit\n";
    QuipCircuit c = parse_quip(src);
    CHECK(c.gates.size() == 11);
    CHECK(c.gates[2].inverted);
    CHECK(c.gates[3].controls[0] == std::pair<int, bool>{0, false});
    std::string once = write_quip(c);
    QuipCircuit c2 = parse_quip(once);
    CHECK(structural_eq(c, c2));
    CHECK(write_quip(c2) == once);
}

TEST_CASE("quipper parser reports DFA violations") {
    CHECK_THROWS_WITH_AS(
        parse_quip("Inputs: none\nQGate[\"H\"](0)\nOutputs: none\n"),
        doctest::Contains("UseBeforeInit"), input_error);
    CHECK_THROWS_WITH_AS(
        parse_quip("Inputs: 0:Qbit\nQInit0(0)\nOutputs: 0:Qbit\n"),
        doctest::Contains("DoubleInit"), input_error);
    CHECK_THROWS_WITH_AS(
        parse_quip("Inputs: 0:Qbit\nQDiscard(0)\nQGate[\"H\"](0)\nOutputs: none\n"),
        doctest::Contains("UseAfterTerm"), input_error);
    CHECK_THROWS_WITH_AS(
        parse_quip("Inputs: none\nQTerm0(0)\nOutputs: none\n"),
        doctest::Contains("TermBeforeInit"), input_error);
    // Outputs must match the inferred live wires.
    CHECK_THROWS_AS(parse_quip("Inputs: 0:Qbit\nQMeas(0)\nOutputs: 0:Qbit\n"),
                    input_error);
    CHECK_NOTHROW(parse_quip("Inputs: 0:Qbit\nQMeas(0)\nOutputs: 0:Cbit\n"));
}

TEST_CASE("compute_includes canonical order") {
    QasmProgram p = parse_qasm(
        "OPENQASM 3;\ninclude \"stdgates.inc\";\ninclude \"quipgates.inc\";\n"
        "include \"quipfuncs.inc\";\nqubit q;\nquip_ix q;\nQInit0(q);\n");
    auto incs = compute_includes(p);
    REQUIRE(incs.size() == 3);
    CHECK(incs[0] == "stdgates.inc");
    CHECK(incs[1] == "quipgates.inc");
    CHECK(incs[2] == "quipfuncs.inc");
}
