#include "doctest.h"
#include "lq/catalog.hpp"
#include "lq/oracle.hpp"

#include <cmath>

using namespace lq;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("every catalog rule passes the oracle") {
    auto reports = verify_catalog();
    CHECK(reports.size() == catalog().size());
    for (const auto &rep : reports) {
        INFO("rule ", rep.id, " deviation ", rep.deviation);
        CHECK(rep.matrix_ok);
        CHECK(rep.controlled_ok);
        CHECK(rep.census_ok);
    }
}

TEST_CASE("negative control: the plausible omega circuit variant is wrong") {
    // The sign-flipped variant [P(pi/4), X, P(-pi/4), X] (temporal order) is
    // a z-rotation, not the scalar omega; the catalog pins the all-positive
    // form [X, P(pi/4), X, P(pi/4)] instead.
    Matrix om = gate_matrix(GateKind::Omega, {});
    Matrix x = gate_matrix(GateKind::X, {});
    Matrix p = gate_matrix(GateKind::P, {kPi / 4});
    Matrix pm = gate_matrix(GateKind::P, {-kPi / 4});
    Matrix wrong = x * pm * x * p;  // temporal [P, X, P^-1, X]
    CHECK(!eq_exact(wrong, om, 1e-6));
    CHECK(eq_exact(wrong, gate_matrix(GateKind::Rz, {kPi / 2}), 1e-12));
    Matrix right = p * x * p * x;  // temporal [X, P, X, P]
    CHECK(eq_exact(right, om, 1e-12));
}

TEST_CASE("rule instantiation round-trips through the quip oracle") {
    const DecompRule *r = find_rule("F5.cs");
    REQUIRE(r);
    QuipCircuit c;
    c.inputs = {{0, WireType::Qbit}, {1, WireType::Qbit}};
    c.outputs = c.inputs;
    c.gates = instantiate_quip(*r, {}, {0, 1}, {});
    Matrix got = circuit_matrix(c);
    Matrix want = embed(gate_matrix(GateKind::S, {}), {1}, 2, {{0, true}});
    CHECK(eq_exact(got, want, 1e-12));

    // Inverted instantiation gives the adjoint.
    c.gates = instantiate_quip(*r, {}, {0, 1}, {}, true);
    CHECK(eq_exact(circuit_matrix(c), want.adjoint(), 1e-12));
}

TEST_CASE("qasm instantiation keeps symbolic angles where possible") {
    const DecompRule *r = find_rule("F3.cp");
    REQUIRE(r);
    Angle theta(kPi / 2, "pi/2");
    auto stmts = instantiate_qasm(*r, {theta}, {{"q", 0}, {"q", 1}}, {});
    REQUIRE(stmts.size() == 5);
    // theta/2 terms fold numerically; the structure is P-CX-P-CX-P.
    CHECK(stmts[0].gate == GateKind::P);
    CHECK(stmts[0].params[0].value == doctest::Approx(kPi / 4));
    CHECK(stmts[1].gate == GateKind::X);
    CHECK(stmts[1].mods.size() == 1);
}

TEST_CASE("generated include artifacts are well-formed") {
    IncludeSet inc = emit_includes();
    CHECK(inc.quipgates.find("gate quip_omega q") != std::string::npos);
    CHECK(inc.quipgates.find("gate quip_w a,b") != std::string::npos);
    CHECK(inc.quipgates.find("ch a,b;") != std::string::npos);
    CHECK(inc.bkpgates.find("gate cswap c,a,b") != std::string::npos);
    CHECK(inc.bkpgates.find("ccx c,b,a;") != std::string::npos);
    CHECK(inc.quipfuncs.find("def QMeas(qubit q) -> bit") != std::string::npos);
}
