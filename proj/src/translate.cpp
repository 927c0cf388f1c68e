#include <algorithm>
#include <map>
#include <set>

#include "lq/catalog.hpp"
#include "lq/io.hpp"
#include "lq/translate.hpp"

namespace lq {

namespace {

void require_valid(const std::vector<Diagnostic> &diags, const char *what) {
    if (diags.empty()) return;
    throw input_error(std::string(what) + ": " + diags.front().message);
}

void assert_valid(const std::vector<Diagnostic> &diags, const char *what) {
    if (diags.empty()) return;
    throw internal_error(std::string(what) + " produced an invalid result: " +
                         diags.front().message);
}

}  // namespace

// ---------------------------------------------------------------------------
// Quipper -> OpenQASM 3
// ---------------------------------------------------------------------------

namespace {

struct QuipToQasm {
    const QuipCircuit &c;
    QasmProgram p;
    std::map<int, Operand> qop;  // wire -> quantum operand
    std::map<int, Operand> cop;  // wire -> classical operand
    int n_qtmp = 0, n_ctmp = 0;

    explicit QuipToQasm(const QuipCircuit &circ) : c(circ) {}

    Operand quantum(int w) const {
        auto it = qop.find(w);
        if (it == qop.end()) throw internal_error("unmapped quantum wire");
        return it->second;
    }
    Operand classical(int w) const {
        auto it = cop.find(w);
        if (it == cop.end()) throw internal_error("unmapped classical wire");
        return it->second;
    }

    Operand fresh_qtmp(int w) {
        std::string name = "qtmp_" + std::to_string(n_qtmp++);
        p.decls.push_back({true, name, std::nullopt});
        return qop[w] = Operand{name, std::nullopt};
    }
    Operand fresh_ctmp(int w) {
        std::string name = "ctmp_" + std::to_string(n_ctmp++);
        p.decls.push_back({false, name, std::nullopt});
        return cop[w] = Operand{name, std::nullopt};
    }

    void call(const std::string &fn, std::vector<Operand> ops) {
        Statement s;
        s.kind = Statement::Kind::Call;
        s.call = fn;
        s.operands = std::move(ops);
        p.stmts.push_back(std::move(s));
    }

    void unitary(const QuipGate &g) {
        Statement s;
        s.kind = Statement::Kind::Gate;
        s.gate = g.gate;
        s.params = g.params;
        bool inv = g.inverted;
        if (inv && self_inverse(g.gate)) inv = false;
        if (inv && g.gate == GateKind::S) { s.gate = GateKind::Sdg; inv = false; }
        if (inv && g.gate == GateKind::T) { s.gate = GateKind::Tdg; inv = false; }
        if (inv) s.mods.push_back({ModKind::Inverse, 0});
        // Negative controls first so the positive run stays innermost and can
        // be absorbed into first-class names (cx, ccx, ...).
        std::vector<int> neg, pos;
        for (auto [w, polarity] : g.controls) (polarity ? pos : neg).push_back(w);
        for (int w : neg) {
            s.mods.push_back({ModKind::NegCtrl, 0});
            s.operands.push_back(quantum(w));
        }
        for (int w : pos) {
            s.mods.push_back({ModKind::PosCtrl, 0});
            s.operands.push_back(quantum(w));
        }
        for (int w : g.wires) s.operands.push_back(quantum(w));
        p.stmts.push_back(std::move(s));
    }

    void gphase(const QuipGate &g) {
        std::vector<int> neg, pos;
        for (auto [w, polarity] : g.controls) (polarity ? pos : neg).push_back(w);
        Statement s;
        s.kind = Statement::Kind::Gate;
        s.params = g.params;
        if (neg.empty() && pos.size() == 1) {
            // controlled global phase == phase gate on the control
            s.gate = GateKind::P;
            s.operands = {quantum(pos[0])};
        } else if (neg.empty() && pos.size() == 2) {
            s.gate = GateKind::P;
            s.mods.push_back({ModKind::PosCtrl, 0});
            s.operands = {quantum(pos[0]), quantum(pos[1])};
        } else {
            s.gate = GateKind::GPhase;
            for (int w : neg) {
                s.mods.push_back({ModKind::NegCtrl, 0});
                s.operands.push_back(quantum(w));
            }
            for (int w : pos) {
                s.mods.push_back({ModKind::PosCtrl, 0});
                s.operands.push_back(quantum(w));
            }
        }
        p.stmts.push_back(std::move(s));
    }

    QasmProgram run() {
        require_valid(validate(c), "invalid Quipper circuit");
        p.dialect = Dialect::Qasm3;

        int nq = 0, nc = 0;
        for (auto [w, t] : c.inputs) (t == WireType::Qbit ? nq : nc)++;
        if (nq > 0) p.decls.push_back({true, "input_qwires", nq});
        if (nc > 0) p.decls.push_back({false, "input_cwires", nc});
        int qi = 0, ci = 0;
        for (auto [w, t] : c.inputs) {
            if (t == WireType::Qbit)
                qop[w] = Operand{"input_qwires", qi++};
            else
                cop[w] = Operand{"input_cwires", ci++};
        }

        for (const auto &g : c.gates) {
            switch (g.kind) {
                case QuipGate::Kind::Unitary: unitary(g); break;
                case QuipGate::Kind::GPhase: gphase(g); break;
                case QuipGate::Kind::QInit: {
                    Operand op = qop.count(g.wires[0]) ? quantum(g.wires[0])
                                                       : fresh_qtmp(g.wires[0]);
                    call(g.value ? "QInit1" : "QInit0", {op});
                    break;
                }
                case QuipGate::Kind::QTerm:
                    call(g.value ? "QTerm1" : "QTerm0", {quantum(g.wires[0])});
                    break;
                case QuipGate::Kind::QDiscard:
                    call("QDiscard", {quantum(g.wires[0])});
                    break;
                case QuipGate::Kind::QMeas: {
                    Operand src = quantum(g.wires[0]);
                    // The wire becomes classical: the qubit element is spent,
                    // and any later rebirth of the wire gets a fresh element.
                    qop.erase(g.wires[0]);
                    Operand dst = fresh_ctmp(g.wires[0]);
                    call("QMeas", {dst, src});
                    break;
                }
                case QuipGate::Kind::CInit: {
                    Operand op = cop.count(g.wires[0]) ? classical(g.wires[0])
                                                       : fresh_ctmp(g.wires[0]);
                    call(g.value ? "CInit1" : "CInit0", {op});
                    break;
                }
                case QuipGate::Kind::CTerm:
                    call(g.value ? "CTerm1" : "CTerm0", {classical(g.wires[0])});
                    cop.erase(g.wires[0]);
                    break;
                case QuipGate::Kind::CDiscard:
                    call("CDiscard", {classical(g.wires[0])});
                    cop.erase(g.wires[0]);
                    break;
            }
        }

        p.includes = compute_includes(p);
        assert_valid(validate(p), "quip-to-qasm");
        return std::move(p);
    }
};

}  // namespace

QasmProgram quip_to_qasm(const QuipCircuit &c) { return QuipToQasm(c).run(); }

// ---------------------------------------------------------------------------
// OpenQASM -> Quipper
// ---------------------------------------------------------------------------

namespace {

struct Element {
    std::string reg;
    int index;  // element index within the register (0 for scalars)
    auto operator<=>(const Element &) const = default;
};

Element elem(const Operand &op) { return {op.reg, op.index.value_or(0)}; }

struct QasmToQuip {
    const QasmProgram &p;
    QuipCircuit c;
    std::map<Element, int> qwire;                 // qubit element -> wire
    std::map<Element, std::optional<int>> cwire;  // bit element -> live wire
    std::set<Element> lazy_qubits;  // first touched by a QInit call
    std::set<Element> lazy_bits;    // first reference is a write
    std::set<Element> consumed;     // qubits destructively measured by QMeas
    std::set<int> result_wires;     // live measurement results
    std::set<int> live;             // wires currently live
    int next_wire = 0;

    void push(QuipGate g) {
        switch (g.kind) {
            case QuipGate::Kind::QInit:
            case QuipGate::Kind::CInit:
                live.insert(g.wires[0]);
                break;
            case QuipGate::Kind::QTerm:
            case QuipGate::Kind::CTerm:
            case QuipGate::Kind::QDiscard:
            case QuipGate::Kind::CDiscard:
                live.erase(g.wires[0]);
                break;
            default:
                break;
        }
        c.gates.push_back(std::move(g));
    }

    explicit QasmToQuip(const QasmProgram &prog) : p(prog) {}

    int quantum(const Operand &op) const {
        Element e = elem(op);
        if (consumed.count(e))
            throw input_error("qubit '" + op.reg +
                              "' was destructively measured and not re-initialized");
        return qwire.at(e);
    }

    void classify() {
        // A qubit element whose first reference is a QInit call is born by
        // it (an ancilla); a bit element first referenced as a measurement
        // destination or CInit argument is created lazily.
        std::set<Element> seen;
        auto touch = [&](const Operand &op, bool write, bool q) {
            Element e = elem(op);
            if (!seen.insert(e).second) return;
            if (write) (q ? lazy_qubits : lazy_bits).insert(e);
        };
        for (const auto &s : p.stmts) {
            switch (s.kind) {
                case Statement::Kind::Gate:
                    for (const auto &op : s.operands) touch(op, false, true);
                    break;
                case Statement::Kind::Measure:
                    touch(s.operands[0], false, true);
                    touch(s.operands[1], true, false);
                    break;
                case Statement::Kind::Reset:
                    touch(s.operands[0], false, true);
                    break;
                case Statement::Kind::Call:
                    if (s.call == "QMeas") {
                        touch(s.operands[0], true, false);
                        touch(s.operands[1], false, true);
                    } else if (s.call == "QInit0" || s.call == "QInit1") {
                        touch(s.operands[0], true, true);
                    } else if (s.call == "CInit0" || s.call == "CInit1") {
                        touch(s.operands[0], true, false);
                    } else {
                        // QTerm/QDiscard read a qubit; CTerm/CDiscard a bit.
                        touch(s.operands[0], false, s.call[0] == 'Q');
                    }
                    break;
            }
        }
    }

    void allocate() {
        for (const auto &d : p.decls) {
            int size = d.size.value_or(1);
            for (int i = 0; i < size; ++i) {
                Element e{d.name, i};
                if (d.quantum) {
                    qwire[e] = next_wire;
                    if (!lazy_qubits.count(e)) {
                        c.inputs[next_wire] = WireType::Qbit;
                        live.insert(next_wire);
                    }
                    ++next_wire;
                } else if (!lazy_bits.count(e)) {
                    cwire[e] = next_wire;
                    c.inputs[next_wire] = WireType::Cbit;
                    live.insert(next_wire);
                    ++next_wire;
                } else {
                    cwire[e] = std::nullopt;
                }
            }
        }
    }

    void remap_bit(const Operand &dst, int wire) {
        // Overwriting a bit discards whatever wire previously held it.
        auto &slot = cwire[elem(dst)];
        if (slot && live.count(*slot)) {
            push(QuipGate::simple(QuipGate::Kind::CDiscard, *slot));
            result_wires.erase(*slot);
        }
        slot = wire;
        result_wires.insert(wire);
    }

    void gate_stmt(const Statement &s) {
        // Fold the modifier stack: controls, net inversion, total power.
        std::vector<std::pair<int, bool>> ctrls;
        bool inv = false;
        long long power = 1;
        size_t ctrl_op = 0;
        for (const auto &m : s.mods) {
            switch (m.kind) {
                case ModKind::PosCtrl:
                case ModKind::NegCtrl:
                    ctrls.push_back({quantum(s.operands[ctrl_op++]),
                                     m.kind == ModKind::PosCtrl});
                    break;
                case ModKind::Inverse: inv = !inv; break;
                case ModKind::Power: power *= m.power; break;
            }
        }
        if (power < 0) {
            inv = !inv;
            power = -power;
        }
        int nt = n_targets(s.gate);
        std::vector<int> targets;
        for (size_t i = s.operands.size() - nt; i < s.operands.size(); ++i)
            targets.push_back(quantum(s.operands[i]));
        std::vector<double> params;
        for (const auto &a : s.params) params.push_back(a.value);

        std::vector<QuipGate> once = base_gates(s.gate, params, targets, ctrls, inv);
        for (long long i = 0; i < power; ++i)
            c.gates.insert(c.gates.end(), once.begin(), once.end());
    }

    std::vector<QuipGate> base_gates(GateKind k, const std::vector<double> &params,
                                     const std::vector<int> &targets,
                                     const std::vector<std::pair<int, bool>> &ctrls,
                                     bool inv) {
        switch (k) {
            case GateKind::Sdg:
                return {QuipGate::unitary(GateKind::S, targets, ctrls, !inv)};
            case GateKind::Tdg:
                return {QuipGate::unitary(GateKind::T, targets, ctrls, !inv)};
            case GateKind::GPhase:
                return {QuipGate::gphase(Angle(inv ? -params[0] : params[0]), ctrls)};
            case GateKind::ExpZ:
            case GateKind::RGate: {
                std::vector<Angle> a = {Angle(params[0])};
                return {QuipGate::unitary(k, targets, ctrls, inv, a)};
            }
            default: break;
        }
        if (quip_spellable(k)) {
            if (inv && self_inverse(k)) inv = false;
            return {QuipGate::unitary(k, targets, ctrls, inv)};
        }
        static const std::map<GateKind, const char *> rules = {
            {GateKind::Rx, "F2.rx"}, {GateKind::Ry, "F2.ry"}, {GateKind::Rz, "F2.rz"},
            {GateKind::P, "F2.p"},   {GateKind::U1, "F2.u1"}, {GateKind::U, "F2.u"},
            {GateKind::U2, "F2.u2"}, {GateKind::U3, "F2.u3"}, {GateKind::CU, "F2.cu"},
        };
        auto it = rules.find(k);
        if (it == rules.end())
            throw internal_error(std::string("no translation for gate '") + kind_id(k) +
                                 "'");
        return instantiate_quip(*find_rule(it->second), params, targets, ctrls, inv);
    }

    QuipCircuit run() {
        require_valid(validate(p), "invalid OpenQASM program");
        classify();
        allocate();

        for (const auto &s : p.stmts) {
            switch (s.kind) {
                case Statement::Kind::Gate:
                    gate_stmt(s);
                    break;
                case Statement::Kind::Measure: {
                    // Non-demolition measurement: copy onto a fresh ancilla
                    // in the computational basis, then measure the copy.
                    int src = quantum(s.operands[0]);
                    int a = next_wire++;
                    push(QuipGate::simple(QuipGate::Kind::QInit, a, 0));
                    push(QuipGate::unitary(GateKind::X, {a}, {{src, true}}));
                    push(QuipGate::simple(QuipGate::Kind::QMeas, a));
                    remap_bit(s.operands[1], a);
                    break;
                }
                case Statement::Kind::Reset: {
                    Element e = elem(s.operands[0]);
                    if (consumed.count(e)) {
                        consumed.erase(e);
                        qwire[e] = next_wire++;
                    }
                    int w = quantum(s.operands[0]);
                    if (live.count(w))
                        push(QuipGate::simple(QuipGate::Kind::QDiscard, w));
                    push(QuipGate::simple(QuipGate::Kind::QInit, w, 0));
                    break;
                }
                case Statement::Kind::Call:
                    call_stmt(s);
                    break;
            }
        }

        // Measurement results still held in bits at the end of the program
        // survive as classical outputs, mirroring how bits persist in OpenQASM.
        WireSummary sum;
        if (auto err = run_dfa(c, &sum))
            throw input_error("program is not wire-safe: " + err->name + " on wire " +
                              std::to_string(err->wire));
        c.outputs = sum.live_at_end;
        assert_valid(validate(c), "qasm-to-quip");
        return std::move(c);
    }

    void call_stmt(const Statement &s) {
        const std::string &fn = s.call;
        if (fn == "QMeas") {
            int src = quantum(s.operands[1]);
            push(QuipGate::simple(QuipGate::Kind::QMeas, src));
            remap_bit(s.operands[0], src);
            // The wire now carries the classical result; the qubit element
            // is gone until something re-initializes it.
            consumed.insert(elem(s.operands[1]));
            return;
        }
        if (fn == "QInit0" || fn == "QInit1") {
            // Re-initializing a live wire is a reset; a fresh or dead wire
            // is (re)born directly. A destructively measured qubit comes
            // back on a brand-new wire: its old one holds the bit.
            Element e = elem(s.operands[0]);
            if (consumed.count(e)) {
                consumed.erase(e);
                qwire[e] = next_wire++;
            }
            int w = quantum(s.operands[0]);
            if (live.count(w)) push(QuipGate::simple(QuipGate::Kind::QDiscard, w));
            push(QuipGate::simple(QuipGate::Kind::QInit, w, fn == "QInit1" ? 1 : 0));
            return;
        }
        if (fn == "QTerm0" || fn == "QTerm1") {
            push(QuipGate::simple(QuipGate::Kind::QTerm,
                                               quantum(s.operands[0]),
                                               fn == "QTerm1" ? 1 : 0));
            return;
        }
        if (fn == "QDiscard") {
            push(
                QuipGate::simple(QuipGate::Kind::QDiscard, quantum(s.operands[0])));
            return;
        }
        if (fn == "CInit0" || fn == "CInit1") {
            int w = next_wire++;
            push(
                QuipGate::simple(QuipGate::Kind::CInit, w, fn == "CInit1" ? 1 : 0));
            remap_bit(s.operands[0], w);
            return;
        }
        // CTerm / CDiscard consume the bit's wire.
        auto &slot = cwire.at(elem(s.operands[0]));
        if (!slot) throw input_error("bit '" + s.operands[0].reg + "' is not live");
        int w = *slot;
        if (fn == "CDiscard")
            push(QuipGate::simple(QuipGate::Kind::CDiscard, w));
        else
            push(
                QuipGate::simple(QuipGate::Kind::CTerm, w, fn == "CTerm1" ? 1 : 0));
        result_wires.erase(w);
        slot = std::nullopt;
    }
};

}  // namespace

QuipCircuit qasm_to_quip(const QasmProgram &p) { return QasmToQuip(p).run(); }

}  // namespace lq
