#include <algorithm>
#include <random>
#include <sstream>

#include "lq/harness.hpp"
#include "lq/io.hpp"
#include "lq/oracle.hpp"
#include "lq/passes.hpp"
#include "lq/translate.hpp"

namespace lq {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    int pick(int n) { return static_cast<int>(eng() % static_cast<uint64_t>(n)); }
    bool chance(int percent) { return pick(100) < percent; }
};

Angle random_angle(Rng &rng) {
    if (rng.chance(60)) {
        static const struct { double v; const char *t; } pool[] = {
            {kPi / 4, "pi/4"},     {kPi / 2, "pi/2"},      {3 * kPi / 4, "3*pi/4"},
            {kPi, "pi"},           {-kPi / 2, "-pi/2"},    {-kPi / 4, "-pi/4"},
            {3 * kPi / 2, "3*pi/2"}, {2 * kPi, "2*pi"},
        };
        auto &e = pool[rng.pick(8)];
        return Angle(e.v, e.t);
    }
    static const double vals[] = {0.3, 0.5, 0.625, 1.1, -0.7, 2.25};
    return Angle(vals[rng.pick(6)]);
}

// ---------------------------------------------------------------------------
// gen_qasm
// ---------------------------------------------------------------------------

struct QasmShape {
    GateKind kind;
    int implied;  // controls absorbed by the surface name
};

std::vector<QasmShape> qasm_shapes(Dialect d) {
    std::vector<QasmShape> out;
    static const GateKind all[] = {
        GateKind::X,  GateKind::Y,  GateKind::Z,    GateKind::H,    GateKind::S,
        GateKind::Sdg, GateKind::T, GateKind::Tdg,  GateKind::SX,   GateKind::IX,
        GateKind::Omega, GateKind::E, GateKind::W,  GateKind::Swap, GateKind::Rx,
        GateKind::Ry, GateKind::Rz, GateKind::P,    GateKind::ExpZ, GateKind::RGate,
        GateKind::U,  GateKind::U1, GateKind::U2,   GateKind::U3,   GateKind::CU,
        GateKind::GPhase,
    };
    for (GateKind k : all)
        for (int c = 0; c <= 2; ++c) {
            std::string name;
            int absorbed = 0;
            if (qasm_spelling(k, c, d, name, absorbed) && absorbed == c)
                out.push_back({k, c});
        }
    return out;
}

std::vector<Angle> random_params(Rng &rng, GateKind k) {
    std::vector<Angle> ps;
    if (k == GateKind::RGate) {
        ps.push_back(Angle(1 + rng.pick(4)));
        return ps;
    }
    for (int i = 0; i < n_params(k); ++i) ps.push_back(random_angle(rng));
    return ps;
}

}  // namespace

QasmProgram gen_qasm(uint64_t seed, const GenOptions &opt) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    bool d3 = opt.dialect == Dialect::Qasm3;
    QasmProgram p;
    p.dialect = opt.dialect;

    int nq = 1 + rng.pick(std::max(1, opt.max_wires));
    bool scalar_first = d3 && nq >= 1 && rng.chance(25);
    bool two_regs = nq >= 2 && rng.chance(30);
    std::vector<std::pair<std::string, int>> qubits;  // element pool
    int first = two_regs ? 1 + rng.pick(nq - 1) : nq;
    if (scalar_first && first == 1) {
        p.decls.push_back({true, "q", std::nullopt});
        qubits.push_back({"q", -1});
    } else {
        p.decls.push_back({true, "q", first});
        for (int i = 0; i < first; ++i) qubits.push_back({"q", i});
    }
    if (two_regs) {
        p.decls.push_back({true, "r", nq - first});
        for (int i = 0; i < nq - first; ++i) qubits.push_back({"r", i});
    }
    int nb = opt.measurement_free ? 0 : 1 + rng.pick(3);
    std::vector<std::pair<std::string, int>> bits;
    if (nb > 0) {
        p.decls.push_back({false, "c", nb});
        for (int i = 0; i < nb; ++i) bits.push_back({"c", i});
    }
    auto op_of = [](const std::pair<std::string, int> &e) {
        return Operand{e.first, e.second < 0 ? std::nullopt : std::optional<int>(e.second)};
    };

    auto shapes = qasm_shapes(opt.dialect);
    // Element liveness, mirroring the wire-state discipline the Quipper
    // translation enforces (so translation laws are total on the corpus).
    std::vector<bool> qlive(qubits.size(), true), blive(bits.size(), true);
    bool calls = d3 && opt.allow_calls && !opt.measurement_free;
    bool mods = d3 && opt.allow_mods;

    int target_gates = rng.pick(opt.max_gates + 1);
    for (int g = 0, attempts = 0; g < target_gates && attempts < target_gates * 8;
         ++attempts) {
        std::vector<int> live;
        for (size_t i = 0; i < qubits.size(); ++i)
            if (qlive[i]) live.push_back(static_cast<int>(i));

        int action = rng.pick(100);
        if (!opt.measurement_free && action < 10 && !live.empty() && !bits.empty()) {
            // measure
            Statement s;
            s.kind = Statement::Kind::Measure;
            int src = live[rng.pick(static_cast<int>(live.size()))];
            int dst = rng.pick(static_cast<int>(bits.size()));
            s.operands = {op_of(qubits[src]), op_of(bits[dst])};
            blive[dst] = true;
            p.stmts.push_back(std::move(s));
            ++g;
            continue;
        }
        if (!opt.measurement_free && action < 14 && !live.empty()) {
            Statement s;
            s.kind = Statement::Kind::Reset;
            s.operands = {op_of(qubits[live[rng.pick(static_cast<int>(live.size()))]])};
            p.stmts.push_back(std::move(s));
            ++g;
            continue;
        }
        if (calls && action < 28) {
            static const char *kCalls[] = {"QInit0", "QInit1", "QTerm0", "QDiscard",
                                           "QMeas", "CInit0", "CTerm0", "CDiscard"};
            std::string c = kCalls[rng.pick(8)];
            Statement s;
            s.kind = Statement::Kind::Call;
            s.call = c;
            if (c == "QInit0" || c == "QInit1") {
                int w = rng.pick(static_cast<int>(qubits.size()));
                s.operands = {op_of(qubits[w])};
                qlive[w] = true;
            } else if (c == "QTerm0" || c == "QDiscard") {
                if (live.empty()) continue;
                int w = live[rng.pick(static_cast<int>(live.size()))];
                s.operands = {op_of(qubits[w])};
                qlive[w] = false;
            } else if (c == "QMeas") {
                if (live.empty() || bits.empty()) continue;
                int w = live[rng.pick(static_cast<int>(live.size()))];
                int b = rng.pick(static_cast<int>(bits.size()));
                s.operands = {op_of(bits[b]), op_of(qubits[w])};
                qlive[w] = false;
                blive[b] = true;
            } else if (c == "CInit0") {
                if (bits.empty()) continue;
                int b = rng.pick(static_cast<int>(bits.size()));
                s.operands = {op_of(bits[b])};
                blive[b] = true;
            } else {  // CTerm0 / CDiscard
                std::vector<int> lb;
                for (size_t i = 0; i < bits.size(); ++i)
                    if (blive[i]) lb.push_back(static_cast<int>(i));
                if (lb.empty()) continue;
                int b = lb[rng.pick(static_cast<int>(lb.size()))];
                s.operands = {op_of(bits[b])};
                blive[b] = false;
            }
            p.stmts.push_back(std::move(s));
            ++g;
            continue;
        }

        // plain (possibly modified) gate
        const QasmShape &sh = shapes[rng.pick(static_cast<int>(shapes.size()))];
        int extra = mods && rng.chance(35) ? rng.pick(opt.max_extra_ctrls + 1) : 0;
        int need = sh.implied + extra + n_targets(sh.kind);
        if (static_cast<int>(live.size()) < need) continue;
        Statement s;
        s.gate = sh.kind;
        s.params = random_params(rng, sh.kind);
        std::vector<int> chosen = live;
        std::shuffle(chosen.begin(), chosen.end(), rng.eng);
        chosen.resize(need);
        int oi = 0;
        for (int i = 0; i < extra; ++i) {
            bool neg = rng.chance(30);
            s.mods.push_back({neg ? ModKind::NegCtrl : ModKind::PosCtrl, 0});
            s.operands.push_back(op_of(qubits[chosen[oi++]]));
        }
        for (int i = 0; i < sh.implied; ++i) {
            s.mods.push_back({ModKind::PosCtrl, 0});
            s.operands.push_back(op_of(qubits[chosen[oi++]]));
        }
        for (int i = 0; i < n_targets(sh.kind); ++i)
            s.operands.push_back(op_of(qubits[chosen[oi++]]));
        if (mods && rng.chance(15))
            s.mods.insert(s.mods.begin(), {ModKind::Inverse, 0});
        if (mods && rng.chance(15)) {
            static const int exps[] = {-2, -1, 0, 2, 3};
            s.mods.insert(s.mods.begin(), {ModKind::Power, exps[rng.pick(5)]});
        }
        p.stmts.push_back(std::move(s));
        ++g;
    }
    p.includes = compute_includes(p);
    auto diags = validate(p);
    if (!diags.empty())
        throw internal_error("generator produced an invalid program: " +
                             diags[0].message);
    return p;
}

// ---------------------------------------------------------------------------
// gen_quip
// ---------------------------------------------------------------------------

QuipCircuit gen_quip(uint64_t seed, const GenOptions &opt) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x4f1bbcdcbfa53e0bULL);
    int n = 1 + rng.pick(std::max(1, opt.max_wires));
    enum class S { QLive, CLive, Fresh, Dead };
    std::vector<S> st(n);
    QuipCircuit c;
    for (int w = 0; w < n; ++w) {
        if (opt.measurement_free) {
            st[w] = S::QLive;
            c.inputs[w] = WireType::Qbit;
        } else if (rng.chance(60)) {
            st[w] = S::QLive;
            c.inputs[w] = WireType::Qbit;
        } else if (rng.chance(40)) {
            st[w] = S::CLive;
            c.inputs[w] = WireType::Cbit;
        } else {
            st[w] = S::Fresh;
        }
    }
    static const GateKind kinds[] = {
        GateKind::X,  GateKind::Y,    GateKind::Z, GateKind::H,  GateKind::S,
        GateKind::T,  GateKind::SX,   GateKind::IX, GateKind::Omega, GateKind::E,
        GateKind::W,  GateKind::Swap, GateKind::ExpZ, GateKind::RGate,
    };
    int target_gates = rng.pick(opt.max_gates + 1);
    for (int g = 0, attempts = 0; g < target_gates && attempts < target_gates * 8;
         ++attempts) {
        std::vector<int> qlive;
        for (int w = 0; w < n; ++w)
            if (st[w] == S::QLive) qlive.push_back(w);

        int action = rng.pick(100);
        if (!opt.measurement_free && action < 22) {
            int r = rng.pick(6);
            if (r < 2) {  // QInit
                std::vector<int> cand;
                for (int w = 0; w < n; ++w)
                    if (st[w] == S::Fresh || st[w] == S::Dead) cand.push_back(w);
                if (cand.empty()) continue;
                int w = cand[rng.pick(static_cast<int>(cand.size()))];
                c.gates.push_back(
                    QuipGate::simple(QuipGate::Kind::QInit, w, rng.pick(2)));
                st[w] = S::QLive;
            } else if (r == 2 || r == 3) {  // QMeas / QDiscard
                if (qlive.empty()) continue;
                int w = qlive[rng.pick(static_cast<int>(qlive.size()))];
                if (r == 2) {
                    c.gates.push_back(QuipGate::simple(QuipGate::Kind::QMeas, w));
                    st[w] = S::CLive;
                } else {
                    c.gates.push_back(QuipGate::simple(QuipGate::Kind::QDiscard, w));
                    st[w] = S::Dead;
                }
            } else {  // classical management
                std::vector<int> clive;
                for (int w = 0; w < n; ++w)
                    if (st[w] == S::CLive) clive.push_back(w);
                if (clive.empty()) continue;
                int w = clive[rng.pick(static_cast<int>(clive.size()))];
                c.gates.push_back(QuipGate::simple(
                    rng.chance(50) ? QuipGate::Kind::CDiscard : QuipGate::Kind::CTerm,
                    w, 0));
                st[w] = S::Dead;
            }
            ++g;
            continue;
        }
        if (action < 30) {  // global phase
            QuipGate ph = QuipGate::gphase(Angle(random_angle(rng).value));
            std::shuffle(qlive.begin(), qlive.end(), rng.eng);
            int nc = std::min<int>(rng.pick(opt.max_extra_ctrls + 1),
                                   static_cast<int>(qlive.size()));
            for (int i = 0; i < nc; ++i) ph.controls.push_back({qlive[i], !rng.chance(25)});
            c.gates.push_back(std::move(ph));
            ++g;
            continue;
        }
        GateKind k = kinds[rng.pick(14)];
        int nt = n_targets(k);
        int nc = rng.chance(40) ? rng.pick(opt.max_extra_ctrls + 1) : 0;
        if (static_cast<int>(qlive.size()) < nt + nc) continue;
        std::shuffle(qlive.begin(), qlive.end(), rng.eng);
        std::vector<int> tg(qlive.begin(), qlive.begin() + nt);
        std::vector<std::pair<int, bool>> ctrls;
        for (int i = 0; i < nc; ++i) ctrls.push_back({qlive[nt + i], !rng.chance(25)});
        std::vector<Angle> params;
        if (k == GateKind::ExpZ) params.push_back(Angle(random_angle(rng).value));
        if (k == GateKind::RGate) params.push_back(Angle(1 + rng.pick(4)));
        c.gates.push_back(QuipGate::unitary(k, std::move(tg), std::move(ctrls),
                                            rng.chance(20), std::move(params)));
        ++g;
    }
    WireSummary sum;
    if (auto err = run_dfa(c, &sum))
        throw internal_error("generator produced a DFA-invalid circuit: " + err->name);
    c.outputs = sum.live_at_end;
    auto diags = validate(c);
    if (!diags.empty())
        throw internal_error("generator produced an invalid circuit: " +
                             diags[0].message);
    return c;
}

// ---------------------------------------------------------------------------
// shrinking property drivers
// ---------------------------------------------------------------------------

bool LawReport::ok() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const LawResult &r) { return r.failures == 0; });
}

namespace {

// True when the sample still violates the law. A shrink candidate that the
// tools reject as bad input has left the property's domain (e.g. statement
// deletion broke wire safety), so it does not count; any other exception is
// a genuine violation, matching how the driver scores the original sample.
template <typename P, typename F>
bool still_fails(const P &prog, const F &holds) {
    if (!validate(prog).empty()) return false;
    try {
        return !holds(prog);
    } catch (const input_error &) {
        return false;
    } catch (...) {
        return true;
    }
}

QasmProgram shrink_qasm(QasmProgram p,
                        const std::function<bool(const QasmProgram &)> &holds) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t i = 0; i < p.stmts.size(); ++i) {
            QasmProgram cand = p;
            cand.stmts.erase(cand.stmts.begin() + static_cast<long>(i));
            if (still_fails(cand, holds)) {
                p = std::move(cand);
                progress = true;
                break;
            }
        }
    }
    // Wire deletion: drop declarations no statement references.
    for (size_t i = 0; i < p.decls.size();) {
        const std::string &name = p.decls[i].name;
        bool used = false;
        for (const auto &s : p.stmts)
            for (const auto &op : s.operands)
                if (op.reg == name) used = true;
        if (!used) {
            QasmProgram cand = p;
            cand.decls.erase(cand.decls.begin() + static_cast<long>(i));
            if (still_fails(cand, holds)) {
                p = std::move(cand);
                continue;
            }
        }
        ++i;
    }
    return p;
}

QuipCircuit shrink_quip(QuipCircuit c,
                        const std::function<bool(const QuipCircuit &)> &holds) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t i = 0; i < c.gates.size(); ++i) {
            QuipCircuit cand = c;
            cand.gates.erase(cand.gates.begin() + static_cast<long>(i));
            WireSummary sum;
            if (run_dfa(cand, &sum)) continue;
            cand.outputs = sum.live_at_end;
            if (still_fails(cand, holds)) {
                c = std::move(cand);
                progress = true;
                break;
            }
        }
    }
    // Wire deletion: unreferenced inputs.
    for (auto it = c.inputs.begin(); it != c.inputs.end();) {
        int w = it->first;
        bool used = false;
        for (const auto &g : c.gates) {
            for (int t : g.wires) used |= t == w;
            for (auto &[cw, pol] : g.controls) used |= cw == w;
        }
        if (!used) {
            QuipCircuit cand = c;
            cand.inputs.erase(w);
            cand.outputs.erase(w);
            if (still_fails(cand, holds)) {
                it = c.inputs.erase(it);
                c.outputs.erase(w);
                continue;
            }
        }
        ++it;
    }
    return c;
}

uint64_t sample_seed(uint64_t seed, int i) {
    return seed + static_cast<uint64_t>(i) * 0x100000001b3ULL;
}

}  // namespace

LawResult check_qasm_property(const std::string &law, uint64_t seed, int samples,
                              const GenOptions &opt,
                              const std::function<bool(const QasmProgram &)> &holds) {
    LawResult r{law, samples, 0, ""};
    for (int i = 0; i < samples; ++i) {
        QasmProgram p = gen_qasm(sample_seed(seed, i), opt);
        bool pass;
        try {
            pass = holds(p);
        } catch (...) {
            pass = false;
        }
        if (!pass) {
            ++r.failures;
            if (r.counterexample.empty())
                r.counterexample = write_qasm(shrink_qasm(p, holds));
        }
    }
    return r;
}

LawResult check_quip_property(const std::string &law, uint64_t seed, int samples,
                              const GenOptions &opt,
                              const std::function<bool(const QuipCircuit &)> &holds) {
    LawResult r{law, samples, 0, ""};
    for (int i = 0; i < samples; ++i) {
        QuipCircuit c = gen_quip(sample_seed(seed, i), opt);
        bool pass;
        try {
            pass = holds(c);
        } catch (...) {
            pass = false;
        }
        if (!pass) {
            ++r.failures;
            if (r.counterexample.empty())
                r.counterexample = write_quip(shrink_quip(c, holds));
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// the law suite
// ---------------------------------------------------------------------------

namespace {

bool qasm_retraction_holds(const QasmProgram &p) {
    std::string once = write_qasm(p);
    QasmProgram p2 = parse_qasm(once);
    return structural_eq(p, p2) && write_qasm(p2) == once;
}

bool quip_retraction_holds(const QuipCircuit &c) {
    std::string once = write_quip(c);
    QuipCircuit c2 = parse_quip(once);
    return structural_eq(c, c2) && write_quip(c2) == once;
}

bool inversion_qasm_holds(const QasmProgram &p0) {
    QuipCircuit c = qasm_to_quip(p0);
    return structural_eq(c, qasm_to_quip(quip_to_qasm(c)), true);
}

bool inversion_quip_holds(const QuipCircuit &c0) {
    QasmProgram p = quip_to_qasm(c0);
    return structural_eq(p, quip_to_qasm(qasm_to_quip(p)), true);
}

bool idempotence_qasm_holds(const QasmProgram &p) {
    QasmProgram r1 = quip_to_qasm(qasm_to_quip(p));
    QasmProgram r2 = quip_to_qasm(qasm_to_quip(r1));
    return structural_eq(r1, r2, true) &&
           write_qasm(r2).size() <= write_qasm(r1).size();
}

bool idempotence_quip_holds(const QuipCircuit &c) {
    QuipCircuit r1 = qasm_to_quip(quip_to_qasm(c));
    QuipCircuit r2 = qasm_to_quip(quip_to_qasm(r1));
    return structural_eq(r1, r2, true) &&
           write_quip(r2).size() <= write_quip(r1).size();
}

bool preservation_holds(const QasmProgram &p) {
    Matrix m0 = circuit_matrix(p);
    QuipCircuit c = qasm_to_quip(p);
    if (dev_upto_phase(circuit_matrix(c), m0) > 1e-9) return false;
    if (dev_upto_phase(circuit_matrix(quip_to_qasm(c)), m0) > 1e-9) return false;
    // Modifier elimination preserves the matrix exactly on the same wires.
    QasmProgram e = elim_invs(p);
    if (dev_upto_phase(circuit_matrix(e), m0) > 1e-9) return false;
    e = elim_pows(e);
    if (dev_upto_phase(circuit_matrix(e), m0) > 1e-9) return false;
    e = elim_funs(e);
    if (dev_upto_phase(circuit_matrix(e), m0) > 1e-9) return false;
    QasmProgram merged = reg_merge(e);
    if (dev_upto_phase(circuit_matrix(merged), m0) > 1e-9) return false;
    return true;
}

bool preservation_ctrls_holds(const QasmProgram &p) {
    // elim_ctrls introduces ancillas: compare on the original wires with the
    // ancilla round-trip check; then take the result through to_qasm2.
    QasmProgram r = elim_ctrls(p);
    PrefixOracle ob = prefix_matrix(p), oa = prefix_matrix(r);
    if (ob.n_main != oa.n_main) return false;
    if (!ancilla_identity_check(oa.m, ob.m, oa.anc_values, 1e-9, true)) return false;
    QasmProgram two = to_qasm2(reg_merge(elim_funs(elim_pows(elim_invs(r)))));
    PrefixOracle ot = prefix_matrix(two);
    if (ot.n_main + static_cast<int>(ot.anc_values.size()) !=
        oa.n_main + static_cast<int>(oa.anc_values.size()))
        return false;
    return dev_upto_phase(ot.m, oa.m) <= 1e-9;
}

bool fixpoints_qasm_holds(const QasmProgram &p) {
    QasmProgram a = elim_invs(p);
    for (const auto &s : a.stmts)
        for (const auto &m : s.mods)
            if (m.kind == ModKind::Inverse) return false;
    if (!structural_eq(elim_invs(a), a)) return false;
    QasmProgram b = elim_pows(p);
    for (const auto &s : b.stmts)
        for (const auto &m : s.mods)
            if (m.kind == ModKind::Power) return false;
    if (!structural_eq(elim_pows(b), b)) return false;
    QasmProgram f = elim_funs(p);
    for (const auto &s : f.stmts)
        if (s.kind == Statement::Kind::Call) return false;
    if (!structural_eq(elim_funs(f), f)) return false;
    QasmProgram m = reg_merge(p);
    if (!structural_eq(reg_merge(m), m)) return false;
    return structural_eq(normalize(normalize(p)), normalize(p));
}

bool fixpoints_quip_holds(const QuipCircuit &c) {
    QuipCircuit r = elim_ctrls(c);
    for (const auto &g : r.gates)
        if (!ctrl_census_ok(g)) return false;
    if (!structural_eq(elim_ctrls(r), r)) return false;
    return structural_eq(normalize(normalize(c)), normalize(c));
}

}  // namespace

LawReport check_laws(uint64_t seed, int samples,
                     const std::vector<std::string> &laws) {
    auto wanted = [&](const std::string &name) {
        if (laws.empty()) return true;
        for (const auto &l : laws)
            if (name.find(l) != std::string::npos) return true;
        return false;
    };
    LawReport rep;
    rep.seed = seed;

    GenOptions q3;  // defaults: dialect 3, mods + calls
    GenOptions q2;
    q2.dialect = Dialect::Qasm2;
    GenOptions quip;
    GenOptions mfree;  // oracle-checkable subclass
    mfree.max_wires = 4;
    mfree.max_gates = 16;
    mfree.measurement_free = true;
    mfree.allow_calls = false;
    GenOptions small = mfree;  // elim_ctrls ancillas must fit the oracle cap
    small.max_wires = 3;
    small.max_gates = 8;
    small.max_extra_ctrls = 1;

    if (wanted("retraction-qasm3"))
        rep.rows.push_back(check_qasm_property("retraction-qasm3", seed, samples, q3,
                                               qasm_retraction_holds));
    if (wanted("retraction-qasm2"))
        rep.rows.push_back(check_qasm_property("retraction-qasm2", seed, samples, q2,
                                               qasm_retraction_holds));
    if (wanted("retraction-quip"))
        rep.rows.push_back(check_quip_property("retraction-quip", seed, samples, quip,
                                               quip_retraction_holds));
    if (wanted("inversion"))
        rep.rows.push_back(check_qasm_property("inversion-qasm", seed, samples, q3,
                                               inversion_qasm_holds));
    if (wanted("inversion"))
        rep.rows.push_back(check_quip_property("inversion-quip", seed, samples, quip,
                                               inversion_quip_holds));
    if (wanted("idempotence"))
        rep.rows.push_back(check_qasm_property("idempotence-qasm", seed, samples, q3,
                                               idempotence_qasm_holds));
    if (wanted("idempotence"))
        rep.rows.push_back(check_quip_property("idempotence-quip", seed, samples, quip,
                                               idempotence_quip_holds));
    if (wanted("preservation"))
        rep.rows.push_back(check_qasm_property("preservation", seed, samples, mfree,
                                               preservation_holds));
    if (wanted("preservation"))
        rep.rows.push_back(check_qasm_property("preservation-ctrls", seed, samples,
                                               small, preservation_ctrls_holds));
    if (wanted("fixpoints"))
        rep.rows.push_back(check_qasm_property("fixpoints-qasm", seed, samples, q3,
                                               fixpoints_qasm_holds));
    if (wanted("fixpoints"))
        rep.rows.push_back(check_quip_property("fixpoints-quip", seed, samples, quip,
                                               fixpoints_quip_holds));
    return rep;
}

std::string format_report(const LawReport &r) {
    std::ostringstream os;
    os << "seed " << r.seed << "\n";
    os << "law                      samples  failures\n";
    for (const auto &row : r.rows) {
        os << row.law;
        for (size_t i = row.law.size(); i < 25; ++i) os << ' ';
        os << row.samples << "        " << row.failures << "\n";
        if (row.failures > 0 && !row.counterexample.empty()) {
            os << "--- minimized counterexample ---\n"
               << row.counterexample
               << "--------------------------------\n";
        }
    }
    os << (r.ok() ? "all laws hold\n" : "LAW FAILURES PRESENT\n");
    return os.str();
}

}  // namespace lq
