#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <sstream>

#include "lq/ir.hpp"

namespace lq {

int ctrl_count(const Statement &s) {
    int n = 0;
    for (const auto &m : s.mods)
        if (m.kind == ModKind::PosCtrl || m.kind == ModKind::NegCtrl) ++n;
    return n;
}

namespace {

const Declaration *find_decl(const QasmProgram &p, const std::string &name) {
    for (const auto &d : p.decls)
        if (d.name == name) return &d;
    return nullptr;
}

std::string check_operand(const QasmProgram &p, const Operand &op, bool want_quantum) {
    const Declaration *d = find_decl(p, op.reg);
    if (!d) return "undeclared operand '" + op.reg + "'";
    if (d->quantum != want_quantum)
        return "operand '" + op.reg + "' has the wrong register kind";
    if (d->size) {
        if (!op.index)
            return "broadcast over array register '" + op.reg + "' is not supported";
        if (*op.index < 0 || *op.index >= *d->size)
            return "index out of range on '" + op.reg + "'";
    } else if (op.index) {
        return "index on scalar register '" + op.reg + "'";
    }
    return {};
}

}  // namespace

std::vector<Diagnostic> validate(const QasmProgram &p) {
    std::vector<Diagnostic> out;
    std::set<std::string> names;
    for (const auto &d : p.decls) {
        if (!names.insert(d.name).second)
            out.push_back({-1, "duplicate declaration '" + d.name + "'"});
        if (d.size && *d.size < 1)
            out.push_back({-1, "non-positive register size on '" + d.name + "'"});
    }
    for (int i = 0; i < static_cast<int>(p.stmts.size()); ++i) {
        const Statement &s = p.stmts[i];
        auto bad = [&](const std::string &m) { out.push_back({i, m}); };
        auto check_all = [&](const std::vector<Operand> &ops, bool quantum) {
            for (const auto &op : ops) {
                std::string e = check_operand(p, op, quantum);
                if (!e.empty()) bad(e);
            }
        };
        switch (s.kind) {
            case Statement::Kind::Gate: {
                if (static_cast<int>(s.params.size()) != n_params(s.gate))
                    bad("wrong parameter count for gate");
                int want = n_targets(s.gate) + ctrl_count(s);
                if (static_cast<int>(s.operands.size()) != want)
                    bad("operand count does not match gate arity plus controls");
                check_all(s.operands, true);
                std::set<std::pair<std::string, int>> seen;
                for (const auto &op : s.operands)
                    if (!seen.insert({op.reg, op.index.value_or(-1)}).second)
                        bad("repeated operand in one gate");
                if (p.dialect == Dialect::Qasm2) {
                    // The only modifiers 2.0 can express are positive
                    // controls fully absorbed by a first-class name.
                    bool pure_pos = true;
                    for (const auto &m : s.mods)
                        if (m.kind != ModKind::PosCtrl) pure_pos = false;
                    std::string nm;
                    int abs = 0;
                    if (!pure_pos) {
                        bad("modifiers are not valid in OpenQASM 2.0");
                    } else if (!qasm_spelling(s.gate, static_cast<int>(s.mods.size()),
                                              Dialect::Qasm2, nm, abs) ||
                               abs != static_cast<int>(s.mods.size())) {
                        bad("gate has no OpenQASM 2.0 spelling");
                    }
                }
                break;
            }
            case Statement::Kind::Measure:
                if (s.operands.size() != 2) { bad("measure needs src and dst"); break; }
                {
                    std::string e = check_operand(p, s.operands[0], true);
                    if (!e.empty()) bad(e);
                    e = check_operand(p, s.operands[1], false);
                    if (!e.empty()) bad(e);
                }
                break;
            case Statement::Kind::Reset:
                if (s.operands.size() != 1) { bad("reset needs one operand"); break; }
                check_all(s.operands, true);
                break;
            case Statement::Kind::Call: {
                if (p.dialect == Dialect::Qasm2) bad("calls are not valid in OpenQASM 2.0");
                if (!is_call_name(s.call)) { bad("unknown call '" + s.call + "'"); break; }
                if (s.call == "QMeas") {
                    if (s.operands.size() != 2) { bad("QMeas needs dst and src"); break; }
                    std::string e = check_operand(p, s.operands[0], false);
                    if (!e.empty()) bad(e);
                    e = check_operand(p, s.operands[1], true);
                    if (!e.empty()) bad(e);
                } else {
                    if (s.operands.size() != 1) { bad(s.call + " needs one operand"); break; }
                    bool quantum = s.call[0] == 'Q';
                    check_all(s.operands, quantum);
                }
                break;
            }
        }
    }
    return out;
}

namespace {

int include_rank(const std::string &inc) {
    static const char *order[] = {"qelib1.inc", "stdgates.inc", "quipgates.inc",
                                  "quipfuncs.inc", "bkpgates.inc"};
    for (int i = 0; i < 5; ++i)
        if (inc == order[i]) return i;
    return 5;
}

}  // namespace

QasmProgram normalize(const QasmProgram &p) {
    QasmProgram out = p;
    out.comments.clear();
    std::sort(out.includes.begin(), out.includes.end(), [](const auto &a, const auto &b) {
        int ra = include_rank(a), rb = include_rank(b);
        return ra != rb ? ra < rb : a < b;
    });
    out.includes.erase(std::unique(out.includes.begin(), out.includes.end()),
                       out.includes.end());
    // Declarations in order of first use (unused last, original order kept).
    std::map<std::string, int> first_use;
    for (int i = 0; i < static_cast<int>(out.stmts.size()); ++i)
        for (const auto &op : out.stmts[i].operands)
            first_use.emplace(op.reg, i);
    std::stable_sort(out.decls.begin(), out.decls.end(),
                     [&](const Declaration &a, const Declaration &b) {
                         auto ia = first_use.count(a.name) ? first_use[a.name] : INT_MAX;
                         auto ib = first_use.count(b.name) ? first_use[b.name] : INT_MAX;
                         return ia < ib;
                     });
    for (auto &s : out.stmts)
        for (auto &a : s.params) a.text.clear();
    return out;
}

std::string fingerprint(const QasmProgram &prog) {
    QasmProgram p = normalize(prog);
    std::ostringstream os;
    os << (p.dialect == Dialect::Qasm2 ? "2.0" : "3") << '\n';
    for (const auto &inc : p.includes) os << "inc " << inc << '\n';
    for (const auto &d : p.decls) {
        os << (d.quantum ? "q " : "c ") << d.name;
        if (d.size) os << '[' << *d.size << ']';
        os << '\n';
    }
    auto put_op = [&](const Operand &op) {
        os << ' ' << op.reg;
        if (op.index) os << '[' << *op.index << ']';
    };
    for (const auto &s : p.stmts) {
        switch (s.kind) {
            case Statement::Kind::Gate:
                for (const auto &m : s.mods) switch (m.kind) {
                        case ModKind::PosCtrl: os << "ctrl@"; break;
                        case ModKind::NegCtrl: os << "negctrl@"; break;
                        case ModKind::Inverse: os << "inv@"; break;
                        case ModKind::Power: os << "pow(" << m.power << ")@"; break;
                    }
                os << kind_id(s.gate);
                for (const auto &a : s.params) os << ' ' << format_double(a.value);
                break;
            case Statement::Kind::Measure: os << "measure"; break;
            case Statement::Kind::Reset: os << "reset"; break;
            case Statement::Kind::Call: os << "call " << s.call; break;
        }
        for (const auto &op : s.operands) put_op(op);
        os << '\n';
    }
    return os.str();
}

namespace {

QasmProgram alpha_rename(const QasmProgram &prog) {
    QasmProgram p = normalize(prog);
    std::map<std::string, std::string> ren;
    int nq = 0, nc = 0;
    for (auto &d : p.decls) {
        std::string fresh = (d.quantum ? "q" : "c") + std::to_string(d.quantum ? nq++ : nc++);
        ren[d.name] = fresh;
        d.name = fresh;
    }
    for (auto &s : p.stmts)
        for (auto &op : s.operands) {
            auto it = ren.find(op.reg);
            if (it != ren.end()) op.reg = it->second;
        }
    return p;
}

}  // namespace

bool structural_eq(const QasmProgram &a, const QasmProgram &b, bool alpha) {
    if (alpha) return fingerprint(alpha_rename(a)) == fingerprint(alpha_rename(b));
    return fingerprint(a) == fingerprint(b);
}

}  // namespace lq
