#pragma once

#include <optional>
#include <set>
#include <string>

namespace lq {

// Closed gate alphabet shared by both IRs. Controlled variants (cx, crz,
// ...) are spelled with modifiers / control lists, not separate kinds;
// CU is the one exception because its fourth parameter acts only on the
// controlled block.
enum class GateKind {
    X, Y, Z, H, S, Sdg, T, Tdg, SX, IX, Omega, E, W, Swap,
    Rx, Ry, Rz, P, ExpZ, RGate,
    U, U1, U2, U3, CU, GPhase,
};

constexpr int kNumGateKinds = 26;

enum class Dialect { Qasm2, Qasm3 };

int n_params(GateKind k);
int n_targets(GateKind k);
const char *kind_id(GateKind k);  // stable internal identifier

// --- OpenQASM name tables -------------------------------------------------

struct QasmGateName {
    GateKind kind;
    int implied_ctrls;       // positive controls absorbed by the name (cx => 1)
    const char *include_3;   // include gating for dialect 3 (nullptr = builtin)
    const char *include_2;   // include gating for dialect 2.0 (nullptr = not available)
};

// Returns the table entry for a gate name in the given dialect, or nullopt.
std::optional<QasmGateName> lookup_qasm_gate(const std::string &name, Dialect d);

// Preferred spelling of (kind, leading positive controls) in a dialect.
// On success sets `name` and `absorbed` (controls folded into the name);
// returns false if the kind has no spelling in the dialect at all.
bool qasm_spelling(GateKind kind, int pos_ctrls, Dialect d,
                   std::string &name, int &absorbed);

// Include file that must be listed for `name` in dialect `d` (empty = builtin).
std::string include_for(const std::string &name, Dialect d);

bool is_call_name(const std::string &name);
bool call_has_result(const std::string &name);  // only QMeas

// --- Quipper spellings ------------------------------------------------------

// QGate names; kinds with no Quipper spelling return nullptr.
const char *quip_qgate_name(GateKind k);
std::optional<GateKind> lookup_quip_qgate(const std::string &name);

// QRot names for the two rotation kinds.
const char *quip_qrot_name(GateKind k);
std::optional<GateKind> lookup_quip_qrot(const std::string &name);

// True for kinds representable as a Quipper Unitary gate.
bool quip_spellable(GateKind k);

bool self_inverse(GateKind k);

}  // namespace lq
