#pragma once

#include <string>
#include <vector>

#include "lq/ir.hpp"
#include "lq/matrix.hpp"

namespace lq {

// Gate templates live in "role space": roles 0..c-1 are the left-hand
// side's positive controls, the next t roles its targets, and any further
// roles are rule-local ancillas (always |value>-in, |value>-out).

struct TParam {
    enum class Form { Linear, TwoPow };  // Linear: s*P[i]+o; TwoPow: s*2^-P[i]+o
    Form form = Form::Linear;
    int idx = -1;  // -1 = constant
    double scale = 0.0;
    double offset = 0.0;
    double eval(const std::vector<double> &lhs_params) const;
};

TParam tp_const(double v);
TParam tp(int idx, double scale = 1.0, double offset = 0.0);
TParam tp_pow2(int idx, double scale);

struct TGate {
    GateKind kind = GateKind::X;
    bool inverted = false;
    std::vector<TParam> params;
    std::vector<int> targets;                    // role indices; empty for GPhase
    std::vector<std::pair<int, bool>> controls;  // explicit (role, polarity)
    bool inherit_controls = false;               // also receive the lhs controls
};

struct DecompRule {
    std::string id;
    GateKind lhs_kind = GateKind::X;
    bool lhs_inverted = false;
    int lhs_ctrls = 0;
    int extra_wires = 0;
    std::vector<int> anc_values;
    bool phase_exact = true;     // exact equality vs up to one global phase
    bool census_exempt = false;  // phase-alias rules may introduce a control
    std::vector<TGate> body;     // temporal order
};

const std::vector<DecompRule> &catalog();
const DecompRule *find_rule(const std::string &id);

// Oracle verification. Every rule is checked as declared and once more
// under a synthetic extra inherited control (to validate the conjugation
// structure of rules meant to hold for any control count).
struct RuleReport {
    std::string id;
    bool matrix_ok = false;
    bool controlled_ok = false;  // with one extra inherited control
    bool census_ok = false;
    double deviation = 0.0;
    int body_size = 0;
};

bool verify_rule(const DecompRule &r, int extra_ctrls = 0, double *deviation = nullptr);
std::vector<RuleReport> verify_catalog();

// Instantiates a rule body as Quipper gates. `role_wires` maps every role
// (controls, targets, ancillas) to a circuit wire; `inherited` controls are
// appended where the template asks for them. `invert` emits the reversed,
// gate-wise inverted body.
std::vector<QuipGate> instantiate_quip(const DecompRule &r,
                                       const std::vector<double> &lhs_params,
                                       const std::vector<int> &role_wires,
                                       const std::vector<std::pair<int, bool>> &inherited,
                                       bool invert = false);

// Same, as OpenQASM statements. Identity/negated parameters keep the
// original angle text; everything else is folded to a numeric literal.
std::vector<Statement> instantiate_qasm(const DecompRule &r,
                                        const std::vector<Angle> &lhs_angles,
                                        const std::vector<Operand> &role_ops,
                                        const std::vector<std::pair<Operand, bool>> &inherited,
                                        bool invert = false);

// Generated include-file artifacts (byte-for-byte what ships in lib/).
struct IncludeSet {
    std::string quipgates;  // quipgates.inc
    std::string quipfuncs;  // quipfuncs.inc
    std::string bkpgates;   // bkpgates.inc
};
IncludeSet emit_includes();

}  // namespace lq
