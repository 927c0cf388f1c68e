#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lq/gates.hpp"
#include "lq/support.hpp"

namespace lq {

// ---------------------------------------------------------------------------
// OpenQASM program IR
// ---------------------------------------------------------------------------

enum class ModKind { PosCtrl, NegCtrl, Inverse, Power };

struct Modifier {
    ModKind kind;
    int power = 0;  // Power only; exponents are integers by construction
    bool operator==(const Modifier &) const = default;
};

struct Operand {
    std::string reg;
    std::optional<int> index;
    bool operator==(const Operand &) const = default;
};

struct Statement {
    enum class Kind { Gate, Measure, Reset, Call };
    Kind kind = Kind::Gate;

    // Gate
    std::vector<Modifier> mods;  // outermost first, as written left-to-right
    GateKind gate = GateKind::X;
    std::vector<Angle> params;

    // Gate: controls (one per ctrl modifier, outermost first) then targets.
    // Measure: [src, dst]. Reset: [target].
    // Call: arguments; QMeas uses [dst, src].
    std::vector<Operand> operands;

    std::string call;  // Call only
};

struct Declaration {
    bool quantum = true;
    std::string name;
    std::optional<int> size;  // nullopt = scalar
};

struct QasmProgram {
    Dialect dialect = Dialect::Qasm3;
    std::vector<std::string> includes;
    std::vector<std::string> comments;  // emitted after includes; dropped by parse
    std::vector<Declaration> decls;
    std::vector<Statement> stmts;
};

struct Diagnostic {
    int stmt = -1;  // -1 = program level
    std::string message;
};

std::vector<Diagnostic> validate(const QasmProgram &p);
QasmProgram normalize(const QasmProgram &p);
bool structural_eq(const QasmProgram &a, const QasmProgram &b, bool alpha = false);
std::string fingerprint(const QasmProgram &p);  // canonical form of normalize(p)

// Number of control modifiers (positive + negative) on a statement.
int ctrl_count(const Statement &s);

// ---------------------------------------------------------------------------
// Quipper circuit IR
// ---------------------------------------------------------------------------

enum class WireType { Qbit, Cbit };

struct QuipGate {
    enum class Kind { Unitary, QInit, QTerm, QDiscard, QMeas, CInit, CTerm, CDiscard, GPhase };
    Kind kind = Kind::Unitary;

    GateKind gate = GateKind::X;  // Unitary only
    bool inverted = false;        // Unitary only; preserved verbatim
    std::vector<Angle> params;    // Unitary rotation parameter / GPhase angle
    std::vector<int> wires;       // targets, or the single managed wire
    std::vector<std::pair<int, bool>> controls;  // Unitary + GPhase
    int value = 0;                // QInit/QTerm/CInit/CTerm

    static QuipGate unitary(GateKind g, std::vector<int> wires,
                            std::vector<std::pair<int, bool>> ctrls = {},
                            bool inverted = false, std::vector<Angle> params = {});
    static QuipGate simple(Kind k, int wire, int value = 0);
    static QuipGate gphase(Angle a, std::vector<std::pair<int, bool>> ctrls = {});
};

struct QuipCircuit {
    std::map<int, WireType> inputs;
    std::vector<QuipGate> gates;
    std::map<int, WireType> outputs;
};

// ---- wire-state DFA --------------------------------------------------------

enum class WireState { Fresh, LiveInput, LiveAncilla, Dead };
enum class WireEvent { Init, Term, Use };

struct DfaError {
    std::string name;  // DoubleInit, UseBeforeInit, UseAfterTerm, TermBeforeInit
    int wire = -1;
    int gate_index = -1;
};

struct WireSummary {
    std::map<int, WireType> inputs;        // wires whose first event is Use
    std::map<int, WireType> live_at_end;   // with final types
    // multiset of ancilla (birth, death) gate indices; death -1 = alive at end
    std::vector<std::pair<int, int>> ancilla_intervals;
};

// Single DFA transition; returns new state or the error name.
std::optional<std::string> dfa_step(WireState &state, WireEvent ev);

// Runs the DFA over the whole circuit (inputs pre-seeded as LiveInput).
std::optional<DfaError> run_dfa(const QuipCircuit &c, WireSummary *summary = nullptr);

std::vector<Diagnostic> validate(const QuipCircuit &c);
QuipCircuit normalize(const QuipCircuit &c);
bool structural_eq(const QuipCircuit &a, const QuipCircuit &b, bool alpha = false);
std::string fingerprint(const QuipCircuit &c);

}  // namespace lq
