#pragma once

#include "lq/ir.hpp"

namespace lq {

// Quipper -> OpenQASM 3. Quantum/classical input wires become the
// input_qwires / input_cwires registers; QInit- and CInit-born wires get
// fresh qtmp_k / ctmp_k scalars; wire management maps to quipfuncs calls.
QasmProgram quip_to_qasm(const QuipCircuit &c);

// OpenQASM (either dialect) -> Quipper. Qubit elements become eager wires
// in declaration order (unless first touched by QInit, which makes them
// ancillas); bit elements are eager Cbit inputs unless first written.
QuipCircuit qasm_to_quip(const QasmProgram &p);

}  // namespace lq
