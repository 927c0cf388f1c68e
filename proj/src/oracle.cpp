#include <algorithm>
#include <map>

#include "lq/oracle.hpp"

namespace lq {

namespace {

// Maps every quantum register element to a wire index, in declaration order.
std::map<std::string, int> qasm_wire_base(const QasmProgram &p, int *total) {
    std::map<std::string, int> base;
    int n = 0;
    for (const auto &d : p.decls) {
        if (!d.quantum) continue;
        base[d.name] = n;
        n += d.size.value_or(1);
    }
    *total = n;
    return base;
}

int operand_wire(const std::map<std::string, int> &base, const Operand &op) {
    auto it = base.find(op.reg);
    if (it == base.end()) throw input_error("unknown quantum register '" + op.reg + "'");
    return it->second + op.index.value_or(0);
}

void check_wire_cap(int n) {
    if (n > kMaxOracleWires)
        throw input_error("oracle supports at most " + std::to_string(kMaxOracleWires) +
                          " wires, got " + std::to_string(n));
}

// Net effect of the modifier stack: ctrl/inv/pow all commute with each other
// (C(G)^k = C(G^k), C(G)* = C(G*), (G^k)* = G^-k), so a statement reduces to
// base^exponent under the collected controls.
struct ModFold {
    long long exponent = 1;
    std::vector<std::pair<int, bool>> controls;  // wire, polarity
};

ModFold fold_mods(const Statement &s, const std::map<std::string, int> &base) {
    ModFold f;
    size_t ctrl_op = 0;
    for (const auto &m : s.mods) {
        switch (m.kind) {
            case ModKind::PosCtrl:
            case ModKind::NegCtrl:
                f.controls.push_back({operand_wire(base, s.operands[ctrl_op++]),
                                      m.kind == ModKind::PosCtrl});
                break;
            case ModKind::Inverse: f.exponent = -f.exponent; break;
            case ModKind::Power: f.exponent *= m.power; break;
        }
    }
    return f;
}

Matrix gate_stmt_matrix(const Statement &s, const std::map<std::string, int> &base, int n) {
    ModFold f = fold_mods(s, base);
    int e = static_cast<int>(f.exponent);
    if (s.gate == GateKind::GPhase)
        return gphase_embed(e * s.params[0].value, f.controls, n);
    std::vector<double> params;
    for (const auto &a : s.params) params.push_back(a.value);
    Matrix g = gate_matrix(s.gate, params).power(e);
    int nt = n_targets(s.gate);
    std::vector<int> wires;
    for (size_t i = s.operands.size() - nt; i < s.operands.size(); ++i)
        wires.push_back(operand_wire(base, s.operands[i]));
    return embed(g, wires, n, f.controls);
}

Matrix quip_gate_matrix(const QuipGate &g, const std::map<int, int> &pos, int n) {
    auto wire_at = [&](int w) {
        auto it = pos.find(w);
        if (it == pos.end()) throw internal_error("gate on unmapped wire");
        return it->second;
    };
    std::vector<std::pair<int, bool>> ctrls;
    for (auto [w, p] : g.controls) ctrls.push_back({wire_at(w), p});
    if (g.kind == QuipGate::Kind::GPhase)
        return gphase_embed(g.params[0].value, ctrls, n);
    std::vector<double> params;
    for (const auto &a : g.params) params.push_back(a.value);
    std::vector<int> wires;
    for (int w : g.wires) wires.push_back(wire_at(w));
    return embed(gate_matrix(g.gate, params, g.inverted), wires, n, ctrls);
}

bool is_prefix_stop(const Statement &s) {
    if (s.kind == Statement::Kind::Measure || s.kind == Statement::Kind::Reset) return true;
    if (s.kind != Statement::Kind::Call) return false;
    return s.call != "QInit0" && s.call != "QInit1" && s.call != "QTerm0" &&
           s.call != "QTerm1";
}

bool is_prefix_stop(const QuipGate &g) {
    switch (g.kind) {
        case QuipGate::Kind::Unitary:
        case QuipGate::Kind::GPhase:
        case QuipGate::Kind::QInit:
        case QuipGate::Kind::QTerm:
            return false;
        default:
            return true;
    }
}

}  // namespace

int qasm_wire_count(const QasmProgram &p) {
    int n = 0;
    qasm_wire_base(p, &n);
    return n;
}

Matrix circuit_matrix(const QasmProgram &p) {
    int n = 0;
    auto base = qasm_wire_base(p, &n);
    check_wire_cap(n);
    Matrix m = Matrix::identity(1 << n);
    for (const auto &s : p.stmts) {
        if (s.kind != Statement::Kind::Gate)
            throw input_error("oracle requires a measurement-free program");
        m = gate_stmt_matrix(s, base, n) * m;
    }
    return m;
}

Matrix circuit_matrix(const QuipCircuit &c) {
    std::map<int, int> pos;
    for (auto [w, t] : c.inputs) {
        if (t != WireType::Qbit) throw input_error("oracle requires all-quantum inputs");
        int k = static_cast<int>(pos.size());
        pos[w] = k;
    }
    int n = static_cast<int>(pos.size());
    check_wire_cap(n);
    Matrix m = Matrix::identity(1 << n);
    for (const auto &g : c.gates) {
        if (g.kind != QuipGate::Kind::Unitary && g.kind != QuipGate::Kind::GPhase)
            throw input_error("oracle requires a unitary-only circuit");
        m = quip_gate_matrix(g, pos, n) * m;
    }
    return m;
}

PrefixOracle prefix_matrix(const QasmProgram &p) {
    int total = 0;
    auto base = qasm_wire_base(p, &total);

    // Classify wires: those first touched by a QInit call become ancillas.
    std::vector<int> order;        // ancilla wires, in init order
    std::vector<int> values;       // their initial basis values
    std::vector<bool> is_anc(total, false);
    for (const auto &s : p.stmts) {
        if (is_prefix_stop(s)) break;
        if (s.kind == Statement::Kind::Call &&
            (s.call == "QInit0" || s.call == "QInit1")) {
            int w = operand_wire(base, s.operands[0]);
            if (!is_anc[w]) {
                is_anc[w] = true;
                order.push_back(w);
                values.push_back(s.call == "QInit1" ? 1 : 0);
            }
        }
    }

    // Wire positions: mains in declaration order, then ancillas in init order.
    std::vector<int> wire_pos(total, -1);
    int n_main = 0;
    for (int w = 0; w < total; ++w)
        if (!is_anc[w]) wire_pos[w] = n_main++;
    for (size_t i = 0; i < order.size(); ++i)
        wire_pos[order[i]] = n_main + static_cast<int>(i);
    check_wire_cap(total);

    // Rebase operands through the permutation by translating each statement's
    // wires: run the fold with a permuted base via a synthetic register map.
    PrefixOracle out;
    out.n_main = n_main;
    out.anc_values = std::move(values);
    Matrix m = Matrix::identity(1 << total);
    std::vector<bool> seen_init(total, false);
    for (const auto &s : p.stmts) {
        if (is_prefix_stop(s)) break;
        if (s.kind == Statement::Kind::Call) {
            // The first init fixes the ancilla's start value; a re-init
            // happens on a |0>-asserted wire, so QInit1 there acts as X.
            // QTerm* are identities here (QTerm correctness is checked by
            // the caller via ancilla_identity_check).
            if (s.call == "QInit0" || s.call == "QInit1") {
                int w = wire_pos[operand_wire(base, s.operands[0])];
                if (!seen_init[w])
                    seen_init[w] = true;
                else if (s.call == "QInit1")
                    m = embed(gate_matrix(GateKind::X, {}), {w}, total) * m;
            }
            continue;
        }
        ModFold f = fold_mods(s, base);
        for (auto &[w, pol] : f.controls) w = wire_pos[w];
        int e = static_cast<int>(f.exponent);
        if (s.gate == GateKind::GPhase) {
            m = gphase_embed(e * s.params[0].value, f.controls, total) * m;
            continue;
        }
        std::vector<double> params;
        for (const auto &a : s.params) params.push_back(a.value);
        Matrix g = gate_matrix(s.gate, params).power(e);
        int nt = n_targets(s.gate);
        std::vector<int> wires;
        for (size_t i = s.operands.size() - nt; i < s.operands.size(); ++i)
            wires.push_back(wire_pos[operand_wire(base, s.operands[i])]);
        m = embed(g, wires, total, f.controls) * m;
    }
    out.m = std::move(m);
    return out;
}

PrefixOracle prefix_matrix(const QuipCircuit &c) {
    std::map<int, int> pos;
    for (auto [w, t] : c.inputs) {
        if (t != WireType::Qbit) throw input_error("oracle requires all-quantum inputs");
        int k = static_cast<int>(pos.size());
        pos[w] = k;
    }
    PrefixOracle out;
    out.n_main = static_cast<int>(pos.size());

    // First pass: find ancilla wires (first touched by QInit) in the prefix.
    std::vector<std::pair<int, int>> anc;  // wire, value
    for (const auto &g : c.gates) {
        if (is_prefix_stop(g)) break;
        if (g.kind == QuipGate::Kind::QInit && !pos.count(g.wires[0])) {
            pos[g.wires[0]] = out.n_main + static_cast<int>(anc.size());
            anc.push_back({g.wires[0], g.value});
        }
    }
    int total = static_cast<int>(pos.size());
    check_wire_cap(total);
    for (auto [w, v] : anc) out.anc_values.push_back(v);

    std::vector<bool> seen_init(total, false);
    Matrix m = Matrix::identity(1 << total);
    for (const auto &g : c.gates) {
        if (is_prefix_stop(g)) break;
        if (g.kind == QuipGate::Kind::QTerm) continue;
        if (g.kind == QuipGate::Kind::QInit) {
            int w = pos.at(g.wires[0]);
            // The first init fixes the ancilla's start value; any re-init
            // happens on a |0>-asserted wire, so QInit1 there acts as X.
            if (!seen_init[w])
                seen_init[w] = true;
            else if (g.value == 1)
                m = embed(gate_matrix(GateKind::X, {}), {w}, total) * m;
            continue;
        }
        m = quip_gate_matrix(g, pos, total) * m;
    }
    out.m = std::move(m);
    return out;
}

}  // namespace lq
