#pragma once

#include "lq/ir.hpp"
#include "lq/matrix.hpp"

namespace lq {

// Wires are ordered: QASM programs by declaration order (array elements in
// index order), Quipper circuits by ascending input wire index — the two
// translators use the same orders, so matrices compare directly.

int qasm_wire_count(const QasmProgram &p);

// Whole-program matrix; every statement must be a gate (measurement-free).
Matrix circuit_matrix(const QasmProgram &p);
// Whole-circuit matrix; every gate must be unitary, wires = inputs.
Matrix circuit_matrix(const QuipCircuit &c);

// Unitary prefix (gates before the first measurement/discard/reset), with
// ancillas (QInit wires / QInit0-called registers) appended after the main
// wires. `anc_values` lists each ancilla's initial basis value. The prefix
// oracle assumes inits happen on fresh wires (|0> start).
struct PrefixOracle {
    Matrix m;
    int n_main = 0;               // main wires (matrix acts on n_main + anc wires)
    std::vector<int> anc_values;  // ancillas, in order of first init
};

PrefixOracle prefix_matrix(const QasmProgram &p);
PrefixOracle prefix_matrix(const QuipCircuit &c);

}  // namespace lq
