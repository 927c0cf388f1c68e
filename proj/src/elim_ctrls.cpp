#include <algorithm>
#include <cmath>

#include "lq/catalog.hpp"
#include "lq/passes.hpp"
#include "lq/translate.hpp"

namespace lq {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool all_pos(const std::vector<std::pair<int, bool>> &ctrls) {
    return std::all_of(ctrls.begin(), ctrls.end(), [](auto &c) { return c.second; });
}

}  // namespace

bool ctrl_census_ok(const QuipGate &g) {
    if (g.kind == QuipGate::Kind::GPhase)
        return all_pos(g.controls) && g.controls.size() <= 2;
    if (g.kind != QuipGate::Kind::Unitary) return true;
    if (!all_pos(g.controls)) return false;
    if (g.controls.empty()) return true;
    if (g.controls.size() > 1) return false;
    switch (g.gate) {
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::H:
        case GateKind::Swap:
            return true;
        default:
            return false;
    }
}

namespace {

struct CtrlEliminator {
    std::vector<QuipGate> out;
    std::vector<int> free_pool;  // ancillas currently back in |0>
    std::vector<int> all_pool;
    int next_wire = 0;
    int depth = 0;

    int grab() {
        if (!free_pool.empty()) {
            int w = free_pool.back();
            free_pool.pop_back();
            return w;
        }
        int w = next_wire++;
        all_pool.push_back(w);
        out.push_back(QuipGate::simple(QuipGate::Kind::QInit, w, 0));
        return w;
    }
    void release(int w) { free_pool.push_back(w); }

    // Expands `g` through the named catalog rule (rule-local ancillas come
    // from the pool) and keeps lowering the body.
    void via_rule(const char *id, const QuipGate &g) {
        const DecompRule *r = find_rule(id);
        if (!r) throw internal_error(std::string("missing catalog rule ") + id);
        std::vector<int> roles;
        for (auto &[w, pol] : g.controls) roles.push_back(w);
        for (int w : g.wires) roles.push_back(w);
        std::vector<int> ancs;
        for (int i = 0; i < r->extra_wires; ++i) {
            if (r->anc_values[i] != 0)
                throw internal_error(std::string("rule ") + id + " needs a non-zero ancilla");
            int a = grab();
            ancs.push_back(a);
            roles.push_back(a);
        }
        std::vector<double> params;
        for (const auto &a : g.params) params.push_back(a.value);
        for (const auto &bg : instantiate_quip(*r, params, roles, {}, g.inverted))
            lower(bg);
        for (auto it = ancs.rbegin(); it != ancs.rend(); ++it) release(*it);
    }

    // Peels two positive controls onto a pooled ancilla with a doubly
    // controlled iX pair, leaving the gate with one control fewer.
    void peel(const QuipGate &g) {
        int c1 = g.controls[0].first, c2 = g.controls[1].first;
        int a = grab();
        lower(QuipGate::unitary(GateKind::IX, {a}, {{c1, true}, {c2, true}}));
        QuipGate inner = g;
        inner.controls.erase(inner.controls.begin(), inner.controls.begin() + 2);
        inner.controls.insert(inner.controls.begin(), {a, true});
        lower(inner);
        lower(QuipGate::unitary(GateKind::IX, {a}, {{c1, true}, {c2, true}}, true));
        release(a);
    }

    void lower(const QuipGate &g) {
        if (++depth > 64) throw internal_error("control elimination recursion too deep");
        lower_inner(g);
        --depth;
    }

    void lower_inner(const QuipGate &g) {
        if (g.kind != QuipGate::Kind::Unitary && g.kind != QuipGate::Kind::GPhase) {
            out.push_back(g);
            return;
        }
        // Negative controls: conjugate them away with X first.
        if (!all_pos(g.controls)) {
            std::vector<int> flip;
            QuipGate pos = g;
            for (auto &[w, pol] : pos.controls)
                if (!pol) {
                    flip.push_back(w);
                    pol = true;
                }
            for (int w : flip) out.push_back(QuipGate::unitary(GateKind::X, {w}));
            lower(pos);
            for (int w : flip) out.push_back(QuipGate::unitary(GateKind::X, {w}));
            return;
        }
        if (g.kind == QuipGate::Kind::GPhase) {
            double a = g.params[0].value;
            size_t n = g.controls.size();
            if (n <= 2) {
                out.push_back(g);
                return;
            }
            // e^{ia} under controls c1..cn equals a P(a) on cn controlled by
            // the rest: split P(a) = e^{ia/2} Rz(a).
            std::vector<std::pair<int, bool>> rest(g.controls.begin(),
                                                   g.controls.end() - 1);
            int last = g.controls.back().first;
            lower(QuipGate::gphase(Angle(a / 2), rest));
            lower(QuipGate::unitary(GateKind::ExpZ, {last}, rest, false,
                                    {Angle(a / 2)}));
            return;
        }
        if (ctrl_census_ok(g)) {
            out.push_back(g);
            return;
        }
        size_t n = g.controls.size();
        // R(2pi/2^k) is P(2pi/2^k): alias it to a controlled global phase.
        if (g.gate == GateKind::RGate) {
            double a = 2 * kPi / std::pow(2.0, g.params[0].value);
            if (g.inverted) a = -a;
            std::vector<std::pair<int, bool>> ctrls = g.controls;
            ctrls.push_back({g.wires[0], true});
            lower(QuipGate::gphase(Angle(a), std::move(ctrls)));
            return;
        }
        if (n == 1) {
            switch (g.gate) {
                case GateKind::S: via_rule("F5.cs", g); return;
                case GateKind::T: via_rule("F5.ct", g); return;
                case GateKind::SX: via_rule("F5.csx", g); return;
                case GateKind::IX: via_rule("F5.cix", g); return;
                case GateKind::Omega: via_rule("F5.comega", g); return;
                case GateKind::E: via_rule("F5.ce", g); return;
                case GateKind::ExpZ: via_rule("F5.cexpz", g); return;
                case GateKind::W: via_rule("F6.cw", g); return;
                default: break;
            }
        }
        if (n == 2) {
            switch (g.gate) {
                case GateKind::X: via_rule("F6.ccx", g); return;
                case GateKind::Z: via_rule("F6.ccz", g); return;
                case GateKind::IX: via_rule("F6.ccix", g); return;
                default: break;
            }
        }
        if (n >= 2) {
            peel(g);
            return;
        }
        throw internal_error(std::string("no control elimination for gate kind ") +
                             kind_id(g.gate));
    }
};

}  // namespace

QuipCircuit elim_ctrls(const QuipCircuit &c) {
    CtrlEliminator el;
    for (const auto &in : c.inputs) el.next_wire = std::max(el.next_wire, in.first + 1);
    for (const auto &g : c.gates) {
        for (int w : g.wires) el.next_wire = std::max(el.next_wire, w + 1);
        for (auto &[w, pol] : g.controls) el.next_wire = std::max(el.next_wire, w + 1);
    }
    QuipCircuit r;
    r.inputs = c.inputs;
    for (const auto &g : c.gates) el.lower(g);
    if (el.free_pool.size() != el.all_pool.size())
        throw internal_error("ancilla pool not fully released");
    for (int w : el.all_pool)
        el.out.push_back(QuipGate::simple(QuipGate::Kind::QTerm, w, 0));
    r.gates = std::move(el.out);
    r.outputs = c.outputs;
    auto diags = validate(r);
    if (!diags.empty())
        throw internal_error("control elimination produced an invalid circuit: " +
                             diags[0].message);
    return r;
}

QasmProgram elim_ctrls(const QasmProgram &p) {
    return quip_to_qasm(elim_ctrls(qasm_to_quip(p)));
}

}  // namespace lq
