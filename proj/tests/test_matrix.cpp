#include "doctest.h"
#include "lq/matrix.hpp"

#include <cmath>

using namespace lq;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("basic gate semantics") {
    // P is the phase gate, Rz the true z-rotation; they differ by e^{-ia/2}.
    double a = 0.7;
    Matrix p = gate_matrix(GateKind::P, {a});
    Matrix rz = gate_matrix(GateKind::Rz, {a});
    CHECK(eq_upto_phase(p, rz, 1e-12));
    CHECK(!eq_exact(p, rz, 1e-9));
    CHECK(eq_exact(p.scaled(std::exp(cplx(0, -a / 2))), rz, 1e-12));

    // expZ(t) == Rz(2t), rGate(k) == P(2pi/2^k).
    CHECK(eq_exact(gate_matrix(GateKind::ExpZ, {a}), gate_matrix(GateKind::Rz, {2 * a}),
                   1e-12));
    CHECK(eq_exact(gate_matrix(GateKind::RGate, {3}), gate_matrix(GateKind::P, {kPi / 4}),
                   1e-12));

    // omega is a scalar, E has order 3 up to nothing (E^3 should be scalar-free
    // identity times omega-power); just confirm unitarity across the alphabet.
    for (int i = 0; i < kNumGateKinds; ++i) {
        GateKind k = static_cast<GateKind>(i);
        std::vector<double> params;
        for (int j = 0; j < n_params(k); ++j)
            params.push_back(k == GateKind::RGate ? 2.0 : 0.3 * (j + 1));
        CHECK(is_unitary(gate_matrix(k, params)));
    }

    // iX^2 == -I, omega^8 == I, E^3 ~ H-conjugation identity: E = e^{3 i pi/4} H S^3.
    Matrix ix = gate_matrix(GateKind::IX, {});
    CHECK(eq_exact(ix * ix, Matrix::identity(2).scaled(-1.0), 1e-12));
    Matrix om = gate_matrix(GateKind::Omega, {});
    CHECK(eq_exact(om.power(8), Matrix::identity(2), 1e-12));
    Matrix s = gate_matrix(GateKind::S, {});
    Matrix h = gate_matrix(GateKind::H, {});
    Matrix e = gate_matrix(GateKind::E, {});
    CHECK(eq_exact(e, (h * s.power(3)).scaled(std::exp(cplx(0, 3 * kPi / 4))), 1e-12));
}

TEST_CASE("U family phase conventions") {
    double th = 0.83, ph = 1.91, lm = -0.57, gm = 0.41;
    Matrix u = gate_matrix(GateKind::U, {th, ph, lm});
    Matrix u3 = gate_matrix(GateKind::U3, {th, ph, lm});
    CHECK(eq_exact(u3, u.scaled(std::exp(cplx(0, -(ph + lm) / 2))), 1e-12));

    Matrix u2 = gate_matrix(GateKind::U2, {ph, lm});
    Matrix u_half = gate_matrix(GateKind::U, {kPi / 2, ph, lm});
    CHECK(eq_exact(u2, u_half.scaled(std::exp(cplx(0, -(ph + lm) / 2))), 1e-12));

    Matrix u1 = gate_matrix(GateKind::U1, {lm});
    CHECK(eq_exact(u1, gate_matrix(GateKind::P, {lm}), 1e-12));

    // CU: identity block plus e^{i gamma} U.
    Matrix cu = gate_matrix(GateKind::CU, {th, ph, lm, gm});
    Matrix expect = controlled(u.scaled(std::exp(cplx(0, gm))));
    CHECK(eq_exact(cu, expect, 1e-12));
}

TEST_CASE("embedding is MSB-first") {
    // X on wire 0 of 2 swaps the upper/lower halves of the state index.
    Matrix m = embed(gate_matrix(GateKind::X, {}), {0}, 2);
    CHECK(m.at(0, 2) == cplx(1));
    CHECK(m.at(1, 3) == cplx(1));
    // CX with control 0, target 1 acts on the lower block only.
    Matrix cx = embed(gate_matrix(GateKind::X, {}), {1}, 2, {{0, true}});
    CHECK(cx.at(0, 0) == cplx(1));
    CHECK(cx.at(1, 1) == cplx(1));
    CHECK(cx.at(2, 3) == cplx(1));
    CHECK(cx.at(3, 2) == cplx(1));
    // Negative control flips the active block.
    Matrix nx = embed(gate_matrix(GateKind::X, {}), {1}, 2, {{0, false}});
    CHECK(nx.at(0, 1) == cplx(1));
    CHECK(nx.at(3, 3) == cplx(1));
}

TEST_CASE("ancilla identity check") {
    // CX with target = ancilla (wire 1), control main: leaves |0> ancilla
    // alone, so it's an identity on the main wire with a |0> ancilla...
    Matrix cx = embed(gate_matrix(GateKind::X, {}), {1}, 2, {{0, true}});
    CHECK(!ancilla_identity_check(cx, Matrix::identity(2), {0}, 1e-12));
    // ...no: CX flips the ancilla when the main wire is |1>, so it fails;
    // the plain identity passes, and an X on the main wire passes too.
    CHECK(ancilla_identity_check(Matrix::identity(4), Matrix::identity(2), {0}, 1e-12));
    Matrix x0 = embed(gate_matrix(GateKind::X, {}), {0}, 2);
    CHECK(ancilla_identity_check(x0, gate_matrix(GateKind::X, {}), {0}, 1e-12));
    // |1>-valued ancilla: X sandwich returns it.
    Matrix x1 = embed(gate_matrix(GateKind::X, {}), {1}, 2);
    CHECK(!ancilla_identity_check(x1, Matrix::identity(2), {0}, 1e-12));
    CHECK(ancilla_identity_check(Matrix::identity(4), Matrix::identity(2), {1}, 1e-12));
}
