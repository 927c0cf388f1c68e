#include "lq/gates.hpp"

#include <array>
#include <cstring>
#include <map>

namespace lq {

namespace {

struct KindInfo {
    const char *id;
    int params;
    int targets;
};

constexpr std::array<KindInfo, kNumGateKinds> kKinds = {{
    {"x", 0, 1},     {"y", 0, 1},      {"z", 0, 1},     {"h", 0, 1},
    {"s", 0, 1},     {"sdg", 0, 1},    {"t", 0, 1},     {"tdg", 0, 1},
    {"sx", 0, 1},    {"ix", 0, 1},     {"omega", 0, 1}, {"e", 0, 1},
    {"w", 0, 2},     {"swap", 0, 2},   {"rx", 1, 1},    {"ry", 1, 1},
    {"rz", 1, 1},    {"p", 1, 1},      {"expz", 1, 1},  {"rgate", 1, 1},
    {"U", 3, 1},     {"u1", 1, 1},     {"u2", 2, 1},    {"u3", 3, 1},
    {"cu", 4, 2},    {"gphase", 1, 0},
}};

constexpr const char *kStd = "stdgates.inc";
constexpr const char *kQuip = "quipgates.inc";
constexpr const char *kQelib = "qelib1.inc";
constexpr const char *kBkp = "bkpgates.inc";

struct NameRow {
    const char *name;
    GateKind kind;
    int ctrls;
    const char *inc3;  // nullptr = not a dialect-3 name; "" = builtin
    const char *inc2;  // nullptr = not a dialect-2 name
};

// One row per accepted surface name. Note the dialect split for `rz`:
// qelib1's rz is u1, i.e. the P gate (global-phase convention), while the
// OpenQASM 3 rz is the true z-rotation.
const NameRow kNames[] = {
    {"U", GateKind::U, 0, "", nullptr},
    {"gphase", GateKind::GPhase, 0, "", nullptr},
    {"x", GateKind::X, 0, kStd, kQelib},
    {"y", GateKind::Y, 0, kStd, kQelib},
    {"z", GateKind::Z, 0, kStd, kQelib},
    {"h", GateKind::H, 0, kStd, kQelib},
    {"s", GateKind::S, 0, kStd, kQelib},
    {"sdg", GateKind::Sdg, 0, kStd, kQelib},
    {"t", GateKind::T, 0, kStd, kQelib},
    {"tdg", GateKind::Tdg, 0, kStd, kQelib},
    {"sx", GateKind::SX, 0, kStd, kBkp},
    {"swap", GateKind::Swap, 0, kStd, kBkp},
    {"rx", GateKind::Rx, 0, kStd, kQelib},
    {"ry", GateKind::Ry, 0, kStd, kQelib},
    {"rz", GateKind::Rz, 0, kStd, nullptr},
    {"rz", GateKind::P, 0, nullptr, kQelib},
    {"p", GateKind::P, 0, kStd, nullptr},
    {"u1", GateKind::U1, 0, kStd, kQelib},
    {"u2", GateKind::U2, 0, kStd, kQelib},
    {"u3", GateKind::U3, 0, kStd, kQelib},
    {"cu", GateKind::CU, 0, kStd, kBkp},
    {"cx", GateKind::X, 1, kStd, kQelib},
    {"cy", GateKind::Y, 1, kStd, kQelib},
    {"cz", GateKind::Z, 1, kStd, kQelib},
    {"ch", GateKind::H, 1, kStd, kQelib},
    {"ccx", GateKind::X, 2, kStd, kQelib},
    {"cswap", GateKind::Swap, 1, kStd, kBkp},
    {"crx", GateKind::Rx, 1, kStd, kBkp},
    {"cry", GateKind::Ry, 1, kStd, kBkp},
    {"crz", GateKind::Rz, 1, kStd, kQelib},
    {"cp", GateKind::P, 1, kStd, nullptr},
    {"cu1", GateKind::U1, 1, kStd, kQelib},
    {"cu3", GateKind::U3, 1, kStd, kQelib},
    {"quip_omega", GateKind::Omega, 0, kQuip, kQuip},
    {"quip_ix", GateKind::IX, 0, kQuip, kQuip},
    {"quip_e", GateKind::E, 0, kQuip, kQuip},
    {"quip_w", GateKind::W, 0, kQuip, kQuip},
    {"quip_expz", GateKind::ExpZ, 0, kQuip, kQuip},
    {"quip_rgate", GateKind::RGate, 0, kQuip, kQuip},
};

const char *kCallNames[] = {"QInit0", "QInit1", "QTerm0", "QTerm1", "QMeas",
                            "QDiscard", "CInit0", "CInit1", "CTerm0", "CTerm1",
                            "CDiscard"};

}  // namespace

int n_params(GateKind k) { return kKinds[static_cast<int>(k)].params; }
int n_targets(GateKind k) { return kKinds[static_cast<int>(k)].targets; }
const char *kind_id(GateKind k) { return kKinds[static_cast<int>(k)].id; }

std::optional<QasmGateName> lookup_qasm_gate(const std::string &name, Dialect d) {
    for (const auto &row : kNames) {
        if (name != row.name) continue;
        const char *inc = (d == Dialect::Qasm3) ? row.inc3 : row.inc2;
        if (!inc) continue;
        return QasmGateName{row.kind, row.ctrls, row.inc3, row.inc2};
    }
    return std::nullopt;
}

bool qasm_spelling(GateKind kind, int pos_ctrls, Dialect d,
                   std::string &name, int &absorbed) {
    // Prefer the spelling absorbing the most controls, then fall back to the
    // bare name (controls rendered as ctrl @ modifiers; dialect 3 only).
    const NameRow *best = nullptr;
    for (const auto &row : kNames) {
        if (row.kind != kind || row.ctrls > pos_ctrls) continue;
        const char *inc = (d == Dialect::Qasm3) ? row.inc3 : row.inc2;
        if (!inc) continue;
        if (!best || row.ctrls > best->ctrls) best = &row;
    }
    if (!best) return false;
    name = best->name;
    absorbed = best->ctrls;
    return true;
}

std::string include_for(const std::string &name, Dialect d) {
    for (const auto &row : kNames) {
        if (name != row.name) continue;
        const char *inc = (d == Dialect::Qasm3) ? row.inc3 : row.inc2;
        if (!inc) continue;
        return inc;
    }
    if (is_call_name(name)) return d == Dialect::Qasm3 ? "quipfuncs.inc" : "";
    return "";
}

bool is_call_name(const std::string &name) {
    for (const char *c : kCallNames)
        if (name == c) return true;
    return false;
}

bool call_has_result(const std::string &name) { return name == "QMeas"; }

const char *quip_qgate_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "not";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::T: return "T";
        case GateKind::SX: return "V";
        case GateKind::IX: return "iX";
        case GateKind::Omega: return "omega";
        case GateKind::E: return "E";
        case GateKind::W: return "W";
        case GateKind::Swap: return "swap";
        default: return nullptr;
    }
}

std::optional<GateKind> lookup_quip_qgate(const std::string &name) {
    static const std::map<std::string, GateKind> table = {
        {"not", GateKind::X}, {"X", GateKind::X},   {"Y", GateKind::Y},
        {"Z", GateKind::Z},   {"H", GateKind::H},   {"S", GateKind::S},
        {"T", GateKind::T},   {"V", GateKind::SX},  {"iX", GateKind::IX},
        {"omega", GateKind::Omega}, {"E", GateKind::E}, {"W", GateKind::W},
        {"swap", GateKind::Swap},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

const char *quip_qrot_name(GateKind k) {
    switch (k) {
        case GateKind::ExpZ: return "exp(-i%Z)";
        case GateKind::RGate: return "R(2pi/%)";
        default: return nullptr;
    }
}

std::optional<GateKind> lookup_quip_qrot(const std::string &name) {
    if (name == "exp(-i%Z)") return GateKind::ExpZ;
    if (name == "R(2pi/%)") return GateKind::RGate;
    return std::nullopt;
}

bool quip_spellable(GateKind k) {
    return quip_qgate_name(k) != nullptr || quip_qrot_name(k) != nullptr;
}

bool self_inverse(GateKind k) {
    switch (k) {
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::H:
        case GateKind::W:
        case GateKind::Swap:
            return true;
        default:
            return false;
    }
}

}  // namespace lq
