#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "lq/catalog.hpp"
#include "lq/io.hpp"
#include "lq/passes.hpp"

namespace lq {

namespace {

constexpr double kPi = 3.14159265358979323846;

Angle negated(const Angle &a) {
    Angle out(-a.value);
    if (!a.text.empty()) out.text = "-(" + a.text + ")";
    return out;
}

bool is_pos_ctrl(const Modifier &m) { return m.kind == ModKind::PosCtrl; }
bool is_any_ctrl(const Modifier &m) {
    return m.kind == ModKind::PosCtrl || m.kind == ModKind::NegCtrl;
}

int count_pos_ctrls(const Statement &s) {
    return static_cast<int>(std::count_if(s.mods.begin(), s.mods.end(), is_pos_ctrl));
}

// Keeps only the control modifiers (operand list is untouched: it already
// lists one operand per control modifier, then the targets).
void strip_non_ctrl_mods(Statement &s) {
    std::vector<Modifier> kept;
    for (const auto &m : s.mods)
        if (is_any_ctrl(m)) kept.push_back(m);
    s.mods = std::move(kept);
}

std::vector<Operand> ctrl_operands(const Statement &s) {
    auto n = static_cast<size_t>(std::count_if(s.mods.begin(), s.mods.end(), is_any_ctrl));
    return {s.operands.begin(), s.operands.begin() + n};
}

std::vector<Operand> target_operands(const Statement &s) {
    auto n = static_cast<size_t>(std::count_if(s.mods.begin(), s.mods.end(), is_any_ctrl));
    return {s.operands.begin() + n, s.operands.end()};
}

// ---------------------------------------------------------------------------
// elim_invs
// ---------------------------------------------------------------------------

// Inverts a gate in place when a single-statement inverse exists.
bool invert_in_place(Statement &s) {
    switch (s.gate) {
        case GateKind::X: case GateKind::Y: case GateKind::Z: case GateKind::H:
        case GateKind::W: case GateKind::Swap:
            return true;
        case GateKind::S: s.gate = GateKind::Sdg; return true;
        case GateKind::Sdg: s.gate = GateKind::S; return true;
        case GateKind::T: s.gate = GateKind::Tdg; return true;
        case GateKind::Tdg: s.gate = GateKind::T; return true;
        case GateKind::Rx: case GateKind::Ry: case GateKind::Rz: case GateKind::P:
        case GateKind::U1: case GateKind::ExpZ: case GateKind::GPhase:
            s.params[0] = negated(s.params[0]);
            return true;
        case GateKind::RGate:
            s.gate = GateKind::P;
            s.params = {Angle(-2 * kPi / std::pow(2.0, s.params[0].value))};
            return true;
        case GateKind::U: case GateKind::U3: {
            Angle t = s.params[0], f = s.params[1], l = s.params[2];
            s.params = {negated(t), negated(l), negated(f)};
            return true;
        }
        case GateKind::U2: {
            Angle f = s.params[0], l = s.params[1];
            s.gate = GateKind::U3;
            s.params = {Angle(-kPi / 2), negated(l), negated(f)};
            return true;
        }
        case GateKind::CU: {
            Angle t = s.params[0], f = s.params[1], l = s.params[2], g = s.params[3];
            s.params = {negated(t), negated(l), negated(f), negated(g)};
            return true;
        }
        case GateKind::Omega:
            // omega is a scalar, so its controlled inverse is a controlled
            // global phase over the control wires alone.
            s.gate = GateKind::GPhase;
            s.params = {Angle(-kPi / 4)};
            s.operands.pop_back();
            return true;
        default:
            return false;  // SX, IX, E need a multi-gate expansion
    }
}

// Inverse expansion for the three kinds with no single-statement inverse.
// Each returned statement carries the control modifiers of `s`.
std::vector<Statement> inverse_body(const Statement &s) {
    auto with_base = [&](GateKind k, bool keep_target) {
        Statement b;
        b.gate = k;
        b.mods = s.mods;
        b.operands = ctrl_operands(s);
        if (keep_target)
            for (const auto &op : target_operands(s)) b.operands.push_back(op);
        return b;
    };
    std::vector<Statement> out;
    switch (s.gate) {
        case GateKind::SX:  // sx^† = sx x (the factors commute)
            out.push_back(with_base(GateKind::SX, true));
            out.push_back(with_base(GateKind::X, true));
            break;
        case GateKind::IX: {  // iX^† = e^{i pi} iX
            Statement ph = with_base(GateKind::GPhase, false);
            ph.params = {Angle(kPi)};
            out.push_back(std::move(ph));
            out.push_back(with_base(GateKind::IX, true));
            break;
        }
        case GateKind::E: {  // E^† = e^{-3 i pi / 4} S H
            Statement ph = with_base(GateKind::GPhase, false);
            ph.params = {Angle(-3 * kPi / 4)};
            out.push_back(std::move(ph));
            out.push_back(with_base(GateKind::H, true));
            out.push_back(with_base(GateKind::S, true));
            break;
        }
        default:
            throw internal_error(std::string("no inverse rule for gate kind ") +
                                 kind_id(s.gate));
    }
    return out;
}

// ---------------------------------------------------------------------------
// elim_funs helpers
// ---------------------------------------------------------------------------

// An angle text survives folding only if every identifier in it is `pi`
// (plain arithmetic over pi is legal in both dialects; anything else was a
// function call or named constant and is replaced by its folded value).
void fold_angle(Angle &a) {
    if (a.text.empty()) return;
    for (size_t i = 0; i < a.text.size();) {
        if (!std::isalpha(static_cast<unsigned char>(a.text[i]))) { ++i; continue; }
        size_t j = i;
        while (j < a.text.size() &&
               (std::isalnum(static_cast<unsigned char>(a.text[j])) || a.text[j] == '_'))
            ++j;
        if (a.text.substr(i, j - i) != "pi") {
            a.text.clear();
            return;
        }
        i = j;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// elim_invs / elim_pows / elim_funs
// ---------------------------------------------------------------------------

QasmProgram elim_invs(const QasmProgram &p) {
    QasmProgram out = p;
    out.stmts.clear();
    for (const auto &s : p.stmts) {
        bool has_inv = s.kind == Statement::Kind::Gate &&
                       std::any_of(s.mods.begin(), s.mods.end(), [](const Modifier &m) {
                           return m.kind == ModKind::Inverse;
                       });
        if (!has_inv) {
            out.stmts.push_back(s);
            continue;
        }
        int parity = 0;
        long long exp = 1;
        bool had_pow = false;
        for (const auto &m : s.mods) {
            if (m.kind == ModKind::Inverse) parity ^= 1;
            if (m.kind == ModKind::Power) { exp *= m.power; had_pow = true; }
        }
        Statement base = s;
        strip_non_ctrl_mods(base);
        if (parity == 0) {
            // Paired inversions cancel; only the power product remains.
            if (had_pow)
                base.mods.insert(base.mods.begin(),
                                 {ModKind::Power, static_cast<int>(exp)});
            out.stmts.push_back(std::move(base));
            continue;
        }
        Statement inv = base;
        if (invert_in_place(inv)) {
            if (had_pow)
                inv.mods.insert(inv.mods.begin(),
                                {ModKind::Power, static_cast<int>(exp)});
            out.stmts.push_back(std::move(inv));
            continue;
        }
        // Multi-gate inverse: (G^†)^e is the e-fold repeat of the expansion,
        // and a negative e folds back to the uninverted gate.
        if (exp >= 0) {
            auto body = inverse_body(base);
            for (long long i = 0; i < exp; ++i)
                for (const auto &b : body) out.stmts.push_back(b);
        } else {
            for (long long i = 0; i < -exp; ++i) out.stmts.push_back(base);
        }
    }
    return out;
}

QasmProgram elim_pows(const QasmProgram &p) {
    QasmProgram out = p;
    out.stmts.clear();
    for (const auto &s : p.stmts) {
        bool has_pow = s.kind == Statement::Kind::Gate &&
                       std::any_of(s.mods.begin(), s.mods.end(), [](const Modifier &m) {
                           return m.kind == ModKind::Power;
                       });
        if (!has_pow) {
            out.stmts.push_back(s);
            continue;
        }
        long long exp = 1;
        Statement base = s;
        base.mods.clear();
        for (const auto &m : s.mods) {
            if (m.kind == ModKind::Power) exp *= m.power;
            else base.mods.push_back(m);
        }
        if (exp < 0) {
            base.mods.insert(base.mods.begin(), {ModKind::Inverse, 0});
            exp = -exp;
        }
        for (long long i = 0; i < exp; ++i) out.stmts.push_back(base);
    }
    return out;
}

QasmProgram elim_funs(const QasmProgram &p) {
    QasmProgram out = p;
    out.stmts.clear();
    // Tracks which qubit elements have been referenced by an emitted
    // statement, to tell a first-touch QInit0 (a no-op) from a reset.
    std::set<std::pair<std::string, int>> touched;
    auto key = [](const Operand &op) {
        return std::pair<std::string, int>{op.reg, op.index.value_or(-1)};
    };
    auto touch = [&](const Statement &s) {
        for (const auto &op : s.operands) touched.insert(key(op));
    };
    for (const auto &s : p.stmts) {
        if (s.kind == Statement::Kind::Gate) {
            Statement g = s;
            for (auto &a : g.params) fold_angle(a);
            touch(g);
            out.stmts.push_back(std::move(g));
            continue;
        }
        if (s.kind != Statement::Kind::Call) {
            touch(s);
            out.stmts.push_back(s);
            continue;
        }
        const std::string &c = s.call;
        if (c == "QInit0") {
            if (touched.count(key(s.operands[0]))) {
                Statement r;
                r.kind = Statement::Kind::Reset;
                r.operands = s.operands;
                touch(r);
                out.stmts.push_back(std::move(r));
            }
            // A first-touch QInit0 is the implicit |0> a fresh qubit holds.
        } else if (c == "QInit1") {
            // |1> is reset-then-x; on first touch the reset is implicit.
            if (touched.count(key(s.operands[0]))) {
                Statement r;
                r.kind = Statement::Kind::Reset;
                r.operands = s.operands;
                out.stmts.push_back(std::move(r));
            }
            Statement x;
            x.gate = GateKind::X;
            x.operands = s.operands;
            touch(x);
            out.stmts.push_back(std::move(x));
        } else if (c == "QMeas") {
            Statement m;
            m.kind = Statement::Kind::Measure;
            m.operands = {s.operands[1], s.operands[0]};  // src, dst
            touch(m);
            out.stmts.push_back(std::move(m));
        } else if (c == "QTerm0" || c == "QTerm1" || c == "QDiscard" ||
                   c == "CTerm0" || c == "CTerm1" || c == "CDiscard" ||
                   c == "CInit0") {
            // Wire-management bookkeeping with no OpenQASM counterpart.
        } else if (c == "CInit1") {
            throw input_error(
                "CInit1 cannot be inlined: OpenQASM has no classical-bit "
                "assignment statement");
        } else {
            throw internal_error("unknown call " + c);
        }
    }
    out.includes = compute_includes(out);
    return out;
}

// ---------------------------------------------------------------------------
// reg_merge
// ---------------------------------------------------------------------------

QasmProgram reg_merge(const QasmProgram &p) {
    struct Slot { bool quantum; int base; int size; };
    std::map<std::string, Slot> slots;
    int nq = 0, nc = 0;
    std::vector<std::string> table;
    for (const auto &d : p.decls) {
        int size = d.size.value_or(1);
        int &n = d.quantum ? nq : nc;
        slots[d.name] = {d.quantum, n, size};
        const char *target = d.quantum ? "q" : "c";
        std::ostringstream line;
        if (!d.size)
            line << d.name << " -> " << target << "[" << n << "]";
        else if (size == 1)
            line << d.name << "[0] -> " << target << "[" << n << "]";
        else
            line << d.name << "[0.." << size - 1 << "] -> " << target << "[" << n
                 << ".." << n + size - 1 << "]";
        table.push_back(line.str());
        n += size;
    }
    QasmProgram out = p;
    out.decls.clear();
    if (nq > 0) out.decls.push_back({true, "q", nq});
    if (nc > 0) out.decls.push_back({false, "c", nc});
    out.comments = std::move(table);
    for (auto &s : out.stmts)
        for (auto &op : s.operands) {
            auto it = slots.find(op.reg);
            if (it == slots.end())
                throw input_error("unknown register " + op.reg);
            op = {it->second.quantum ? "q" : "c",
                  it->second.base + op.index.value_or(0)};
        }
    return out;
}

// ---------------------------------------------------------------------------
// to_qasm2
// ---------------------------------------------------------------------------

namespace {

struct Qasm2Converter {
    QasmProgram out;
    std::optional<Operand> borrow;  // wire the global-phase identity runs on

    void emit_gphase(const Statement &s, int pc) {
        if (pc == 1) {
            // A singly controlled phase is a phase gate on the control.
            Statement g;
            g.gate = GateKind::P;
            g.params = s.params;
            g.operands = {s.operands[0]};
            out.stmts.push_back(std::move(g));
            return;
        }
        if (pc == 2) {
            Statement g;
            g.gate = GateKind::U1;  // spelled cu1
            g.params = s.params;
            g.mods = {{ModKind::PosCtrl, 0}};
            g.operands = {s.operands[0], s.operands[1]};
            out.stmts.push_back(std::move(g));
            return;
        }
        if (pc > 2)
            throw input_error(
                "gphase with more than two controls has no OpenQASM 2.0 form "
                "(run elim-ctrls first)");
        // Uncontrolled: e^{ia} as the diagonal identity rz(a); x; rz(a); x
        // on a borrowed wire. With no qubits the phase is unobservable.
        if (!borrow) return;
        for (int rep = 0; rep < 2; ++rep) {
            Statement ph;
            ph.gate = GateKind::P;
            ph.params = s.params;
            ph.operands = {*borrow};
            out.stmts.push_back(std::move(ph));
            Statement x;
            x.gate = GateKind::X;
            x.operands = {*borrow};
            out.stmts.push_back(std::move(x));
        }
    }

    void convert(const Statement &s) {
        if (s.kind == Statement::Kind::Call)
            throw input_error("call " + s.call +
                              " has no OpenQASM 2.0 form (run elim-funs first)");
        if (s.kind != Statement::Kind::Gate) {
            out.stmts.push_back(s);
            return;
        }
        for (const auto &m : s.mods)
            if (!is_pos_ctrl(m))
                throw input_error(
                    "residual inv/pow/negctrl modifier has no OpenQASM 2.0 form "
                    "(run the elim passes first)");
        int pc = count_pos_ctrls(s);
        Statement g = s;
        switch (g.gate) {
            case GateKind::GPhase:
                emit_gphase(g, pc);
                return;
            case GateKind::Rz:
                if (pc == 0) {
                    // The 2.0 rz is the phase gate; the true rotation is
                    // exp(-i t Z) with half the angle.
                    g.gate = GateKind::ExpZ;
                    Angle a(g.params[0].value / 2);
                    if (!g.params[0].text.empty())
                        a.text = "(" + g.params[0].text + ")/2";
                    g.params = {std::move(a)};
                }
                break;
            case GateKind::P:
                if (pc >= 1) g.gate = GateKind::U1;  // cu1
                break;
            case GateKind::U:
                if (pc == 0) {
                    // U(t,f,l) = e^{i(f+l)/2} u3(t,f,l)
                    Statement u3 = g;
                    u3.gate = GateKind::U3;
                    out.stmts.push_back(std::move(u3));
                    Statement ph;
                    ph.gate = GateKind::GPhase;
                    ph.params = {Angle((g.params[1].value + g.params[2].value) / 2)};
                    emit_gphase(ph, 0);
                    return;
                }
                break;
            default:
                break;
        }
        std::string name;
        int absorbed = 0;
        if (!qasm_spelling(g.gate, pc, Dialect::Qasm2, name, absorbed) ||
            absorbed != pc)
            throw input_error(std::string("gate ") + kind_id(g.gate) + " with " +
                              std::to_string(pc) +
                              " control(s) has no OpenQASM 2.0 spelling");
        out.stmts.push_back(std::move(g));
    }
};

}  // namespace

QasmProgram to_qasm2(const QasmProgram &p) {
    if (p.dialect == Dialect::Qasm2) return p;
    Qasm2Converter cv;
    cv.out = p;
    cv.out.dialect = Dialect::Qasm2;
    cv.out.stmts.clear();
    // 2.0 has no scalar declarations: promote them to one-element arrays.
    std::set<std::string> was_scalar;
    for (auto &d : cv.out.decls)
        if (!d.size) {
            was_scalar.insert(d.name);
            d.size = 1;
        }
    for (const auto &d : cv.out.decls)
        if (d.quantum && !cv.borrow) cv.borrow = Operand{d.name, 0};
    for (const auto &s : p.stmts) {
        Statement t = s;
        for (auto &op : t.operands)
            if (!op.index && was_scalar.count(op.reg)) op.index = 0;
        cv.convert(t);
    }
    cv.out.includes = compute_includes(cv.out);
    auto diags = validate(cv.out);
    if (!diags.empty())
        throw internal_error("2.0 conversion produced an invalid program: " +
                             diags[0].message);
    return cv.out;
}

// ---------------------------------------------------------------------------
// to_lsc
// ---------------------------------------------------------------------------

namespace {

struct LscLowerer {
    const std::set<std::string> &wl;
    std::string qreg;
    int anc_base;       // first index past the original register
    int anc_next;       // next free pooled ancilla index
    int anc_high;       // high-water mark
    std::vector<Statement> out;
    int depth = 0;

    Operand grab() {
        anc_high = std::max(anc_high, anc_next + 1);
        return {qreg, anc_next++};
    }
    void release() { --anc_next; }

    bool whitelisted(const Statement &s) const {
        if (s.kind == Statement::Kind::Measure) return wl.count("measure") > 0;
        if (s.kind != Statement::Kind::Gate) return false;
        if (!std::all_of(s.mods.begin(), s.mods.end(), is_pos_ctrl)) return false;
        std::string name;
        int absorbed = 0;
        if (!qasm_spelling(s.gate, count_pos_ctrls(s), Dialect::Qasm2, name, absorbed))
            return false;
        return absorbed == count_pos_ctrls(s) && wl.count(name) > 0;
    }

    void via_rule(const char *id, const Statement &s, bool invert) {
        const DecompRule *r = find_rule(id);
        if (!r) throw internal_error(std::string("missing catalog rule ") + id);
        std::vector<Operand> roles = ctrl_operands(s);
        for (const auto &op : target_operands(s)) roles.push_back(op);
        int grabbed = 0;
        for (int i = 0; i < r->extra_wires; ++i) {
            if (r->anc_values[i] != 0)
                throw internal_error(std::string("rule ") + id +
                                     " needs a non-zero ancilla");
            roles.push_back(grab());
            ++grabbed;
        }
        for (const auto &b : instantiate_qasm(*r, s.params, roles, {}, invert))
            lower(b);
        for (int i = 0; i < grabbed; ++i) release();
    }

    // Emits Z^z S^s T^t (controlled if `ctrl`) realizing P(m*pi/4).
    void phase_bits(int m, const std::vector<Operand> &ctrls, const Operand &t) {
        auto emit = [&](GateKind k) {
            Statement g;
            g.gate = k;
            for (const auto &c : ctrls) {
                g.mods.push_back({ModKind::PosCtrl, 0});
                g.operands.push_back(c);
            }
            g.operands.push_back(t);
            lower(g);
        };
        if (m & 4) emit(GateKind::Z);
        if (m & 2) emit(GateKind::S);
        if (m & 1) emit(GateKind::T);
    }

    static int pi4_multiple(double v) {
        double k = v / (kPi / 4);
        long long m = std::llround(k);
        if (std::abs(v - static_cast<double>(m) * (kPi / 4)) > 1e-9)
            throw input_error("angle " + format_double(v) +
                              " is not a multiple of pi/4; not expressible in "
                              "the LSC gate set");
        return static_cast<int>(((m % 8) + 8) % 8);
    }

    void lower(const Statement &s) {
        if (++depth > 64) throw internal_error("LSC lowering recursion too deep");
        lower_inner(s);
        --depth;
    }

    void lower_inner(const Statement &s) {
        if (whitelisted(s)) {
            out.push_back(s);
            return;
        }
        if (s.kind == Statement::Kind::Measure)
            throw input_error("measure is not in the LSC whitelist");
        if (s.kind == Statement::Kind::Reset)
            throw input_error("reset has no reset-free LSC form");
        if (s.kind == Statement::Kind::Call)
            throw input_error("call " + s.call + " is not reducible to the LSC set");
        // Catalog bodies may carry inv @ on square-root gates: fold it here.
        if (std::any_of(s.mods.begin(), s.mods.end(), [](const Modifier &m) {
                return m.kind == ModKind::Inverse;
            })) {
            int parity = 0;
            Statement base = s;
            base.mods.clear();
            for (const auto &m : s.mods) {
                if (m.kind == ModKind::Inverse) parity ^= 1;
                else base.mods.push_back(m);
            }
            if (parity == 0 || invert_in_place(base)) {
                lower(base);
            } else {
                for (const auto &b : inverse_body(base)) lower(b);
            }
            return;
        }
        for (const auto &m : s.mods)
            if (!is_pos_ctrl(m))
                throw input_error("residual modifier; run the elim passes first");
        int pc = count_pos_ctrls(s);
        auto ctrls = ctrl_operands(s);
        auto tgts = target_operands(s);
        auto retarget = [&](GateKind k, std::vector<Operand> new_ctrls,
                            std::vector<Operand> new_tgts, std::vector<Angle> params) {
            Statement g;
            g.gate = k;
            g.params = std::move(params);
            for (const auto &c : new_ctrls) {
                g.mods.push_back({ModKind::PosCtrl, 0});
                g.operands.push_back(c);
            }
            for (const auto &t : new_tgts) g.operands.push_back(t);
            lower(g);
        };
        switch (s.gate) {
            case GateKind::P:
            case GateKind::U1: {
                int m = pi4_multiple(s.params[0].value);
                if (pc <= 1) {
                    phase_bits(m, ctrls, tgts[0]);
                    return;
                }
                break;
            }
            case GateKind::Rz:
                // Rz(t) = e^{-it/2} P(t): uncontrolled the phase drops; a
                // control turns it into P(-t/2) on the control wire.
                if (pc == 0) {
                    retarget(GateKind::P, {}, tgts, {Angle(s.params[0].value)});
                    return;
                }
                if (pc == 1) {
                    retarget(GateKind::P, {}, {ctrls[0]},
                             {Angle(-s.params[0].value / 2)});
                    retarget(GateKind::P, ctrls, tgts, {Angle(s.params[0].value)});
                    return;
                }
                break;
            case GateKind::ExpZ:
                retarget(GateKind::Rz, ctrls, tgts, {Angle(2 * s.params[0].value)});
                return;
            case GateKind::RGate:
                retarget(GateKind::P, ctrls, tgts,
                         {Angle(2 * kPi / std::pow(2.0, s.params[0].value))});
                return;
            case GateKind::GPhase:
                if (pc == 0) return;  // global phase is invisible to the LSC
                retarget(GateKind::P, {ctrls.begin(), ctrls.end() - 1},
                         {ctrls.back()}, {Angle(s.params[0].value)});
                return;
            case GateKind::Y:
                if (pc == 0) { via_rule("LSC.y", s, false); return; }
                if (pc == 1) { via_rule("F6.cy", s, false); return; }
                break;
            case GateKind::Z:
                if (pc == 1) { via_rule("F6.cz", s, false); return; }
                if (pc == 2) { via_rule("D4.ccz", s, false); return; }
                break;
            case GateKind::H:
                if (pc == 1) { via_rule("F6.ch", s, false); return; }
                break;
            case GateKind::X:
                if (pc == 2) { via_rule("D4.ccx", s, false); return; }
                break;
            case GateKind::S:
                if (pc == 1) { via_rule("F5.cs", s, false); return; }
                if (pc == 2) { via_rule("D4.ccs", s, false); return; }
                break;
            case GateKind::Sdg:
                if (pc == 1) { via_rule("F5.cs", s, true); return; }
                break;
            case GateKind::T:
                if (pc == 1) { via_rule("F5.ct", s, false); return; }
                break;
            case GateKind::Tdg:
                if (pc == 1) { via_rule("F5.ct", s, true); return; }
                break;
            case GateKind::SX:
                if (pc == 0) { via_rule("F3.sx", s, false); return; }
                if (pc == 1) { via_rule("F5.csx", s, false); return; }
                break;
            case GateKind::Swap:
                if (pc == 0) { via_rule("F3.swap", s, false); return; }
                if (pc == 1) { via_rule("F6.cswap", s, false); return; }
                break;
            case GateKind::IX:
                // iX is X up to phase; the controlled forms are exact rules.
                if (pc == 0) { retarget(GateKind::X, {}, tgts, {}); return; }
                if (pc == 1) { via_rule("F5.cix", s, false); return; }
                if (pc == 2) { via_rule("F6.ccix", s, false); return; }
                break;
            case GateKind::Omega:
                if (pc == 0) return;  // scalar, invisible up to phase
                if (pc == 1) { via_rule("F5.comega", s, false); return; }
                break;
            case GateKind::E:
                if (pc == 0) {
                    // E = e^{3 i pi / 4} H S^3: the phase drops.
                    retarget(GateKind::S, {}, tgts, {});
                    retarget(GateKind::S, {}, tgts, {});
                    retarget(GateKind::S, {}, tgts, {});
                    retarget(GateKind::H, {}, tgts, {});
                    return;
                }
                if (pc == 1) { via_rule("F5.ce", s, false); return; }
                break;
            case GateKind::W:
                if (pc == 0) { via_rule("F1.w", s, false); return; }
                if (pc == 1) { via_rule("F6.cw", s, false); return; }
                break;
            default:
                break;
        }
        std::string name;
        int absorbed = 0;
        qasm_spelling(s.gate, pc, Dialect::Qasm2, name, absorbed);
        throw input_error(std::string("gate ") + kind_id(s.gate) + " with " +
                          std::to_string(pc) +
                          " control(s) is not reducible to the LSC whitelist");
    }
};

}  // namespace

std::set<std::string> parse_lsc_whitelist(const std::string &cfg_text) {
    std::set<std::string> wl;
    std::istringstream in(cfg_text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        wl.insert(line.substr(b, e - b + 1));
    }
    return wl;
}

QasmProgram to_lsc(const QasmProgram &p, const std::set<std::string> &whitelist) {
    if (p.dialect != Dialect::Qasm2)
        throw input_error("to-lsc expects an OpenQASM 2.0 program (run to-qasm2 first)");
    int nqregs = 0, ncregs = 0;
    for (const auto &d : p.decls) (d.quantum ? nqregs : ncregs)++;
    if (nqregs > 1 || ncregs > 1)
        throw input_error("to-lsc expects merged registers (run reg-merge first)");

    QasmProgram out = p;
    if (nqregs == 0) return out;  // nothing quantum to lower
    auto qdecl = std::find_if(out.decls.begin(), out.decls.end(),
                              [](const Declaration &d) { return d.quantum; });
    LscLowerer lo{whitelist, qdecl->name, qdecl->size.value_or(1),
                  qdecl->size.value_or(1), qdecl->size.value_or(1), {}, 0};
    for (const auto &s : p.stmts) lo.lower(s);
    out.stmts = std::move(lo.out);
    qdecl->size = lo.anc_high > lo.anc_base ? lo.anc_high : qdecl->size;
    out.includes = compute_includes(out);
    auto diags = validate(out);
    if (!diags.empty())
        throw internal_error("LSC lowering produced an invalid program: " +
                             diags[0].message);
    return out;
}

}  // namespace lq
