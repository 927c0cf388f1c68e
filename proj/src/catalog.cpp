#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "lq/catalog.hpp"

namespace lq {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double TParam::eval(const std::vector<double> &lhs_params) const {
    double v = offset;
    if (idx >= 0) {
        double p = lhs_params.at(idx);
        v += form == Form::TwoPow ? scale * std::pow(2.0, -p) : scale * p;
    }
    return v;
}

TParam tp_const(double v) { return TParam{TParam::Form::Linear, -1, 0.0, v}; }
TParam tp(int idx, double scale, double offset) {
    return TParam{TParam::Form::Linear, idx, scale, offset};
}
TParam tp_pow2(int idx, double scale) {
    return TParam{TParam::Form::TwoPow, idx, scale, 0.0};
}

namespace {

using Ctrls = std::vector<std::pair<int, bool>>;

Ctrls pos(std::initializer_list<int> roles) {
    Ctrls c;
    for (int r : roles) c.push_back({r, true});
    return c;
}

// Fixed (parameterless) gate on one or two target roles.
TGate fix(GateKind k, std::initializer_list<int> targets, std::initializer_list<int> ctrls = {}) {
    TGate g;
    g.kind = k;
    g.targets = targets;
    g.controls = pos(ctrls);
    return g;
}

TGate fix_inh(GateKind k, std::initializer_list<int> targets,
              std::initializer_list<int> ctrls = {}) {
    TGate g = fix(k, targets, ctrls);
    g.inherit_controls = true;
    return g;
}

TGate rot(GateKind k, TParam p, int target, std::initializer_list<int> ctrls = {}) {
    TGate g = fix(k, {target}, ctrls);
    g.params = {p};
    return g;
}

TGate rot_inh(GateKind k, TParam p, int target, std::initializer_list<int> ctrls = {}) {
    TGate g = rot(k, p, target, ctrls);
    g.inherit_controls = true;
    return g;
}

TGate gph(TParam p, std::initializer_list<int> ctrls = {}, bool inh = false) {
    TGate g;
    g.kind = GateKind::GPhase;
    g.params = {p};
    g.controls = pos(ctrls);
    g.inherit_controls = inh;
    return g;
}

TGate inv(TGate g) {
    g.inverted = !g.inverted;
    return g;
}

DecompRule rule(std::string id, GateKind lhs, int ctrls, std::vector<TGate> body) {
    DecompRule r;
    r.id = std::move(id);
    r.lhs_kind = lhs;
    r.lhs_ctrls = ctrls;
    r.body = std::move(body);
    return r;
}

DecompRule anc_rule(std::string id, GateKind lhs, int ctrls, std::vector<int> anc,
                    std::vector<TGate> body) {
    DecompRule r = rule(std::move(id), lhs, ctrls, std::move(body));
    r.extra_wires = static_cast<int>(anc.size());
    r.anc_values = std::move(anc);
    return r;
}

DecompRule inv_rule(std::string id, GateKind lhs, std::vector<TGate> body) {
    DecompRule r = rule(std::move(id), lhs, 0, std::move(body));
    r.lhs_inverted = true;
    return r;
}

std::vector<DecompRule> build_catalog() {
    using K = GateKind;
    std::vector<DecompRule> rs;
    auto add = [&](DecompRule r) { rs.push_back(std::move(r)); };
    auto exempt = [&](DecompRule r) {
        r.census_exempt = true;
        rs.push_back(std::move(r));
    };

    // --- Quipper-native gates over the common base set ----------------------
    add(rule("F1.ix", K::IX, 0,
             {fix(K::X, {0}), fix(K::S, {0}), fix(K::X, {0}), fix(K::S, {0}),
              fix(K::X, {0})}));
    add(rule("F1.omega", K::Omega, 0,
             {fix(K::X, {0}), rot(K::P, tp_const(kPi / 4), 0), fix(K::X, {0}),
              rot(K::P, tp_const(kPi / 4), 0)}));
    add(rule("F1.e", K::E, 0,
             {gph(tp_const(3 * kPi / 4)), fix(K::S, {0}), fix(K::S, {0}),
              fix(K::S, {0}), fix(K::H, {0})}));
    exempt(rule("F1.w", K::W, 0,
                {fix(K::X, {0}, {1}), fix(K::X, {1}), fix(K::H, {1}, {0}),
                 fix(K::X, {1}), fix(K::X, {0}, {1})}));
    add(rule("F1.expz", K::ExpZ, 0, {rot(K::Rz, tp(0, 2), 0)}));
    add(rule("F1.rgate", K::RGate, 0, {rot(K::P, tp_pow2(0, 2 * kPi), 0)}));

    // --- rotations and the U family over Quipper primitives -----------------
    // The uncontrolled conjugating gates cancel pairwise, so each rule is
    // stable under any number of inherited controls.
    add(rule("F2.rx", K::Rx, 0,
             {fix(K::H, {0}), rot_inh(K::ExpZ, tp(0, 0.5), 0), fix(K::H, {0})}));
    add(rule("F2.ry", K::Ry, 0,
             {fix(K::X, {0}), fix(K::S, {0}), fix(K::H, {0}),
              rot_inh(K::ExpZ, tp(0, 0.5), 0), fix(K::H, {0}), fix(K::Sdg, {0}),
              fix(K::X, {0})}));
    add(rule("F2.rz", K::Rz, 0, {rot_inh(K::ExpZ, tp(0, 0.5), 0)}));
    exempt(rule("F2.p", K::P, 0, {gph(tp(0, 1), {0}, true)}));
    exempt(rule("F2.u1", K::U1, 0, {gph(tp(0, 1), {0}, true)}));
    add(rule("F2.u", K::U, 0,
             {gph(tp(2, 0.5), {}, true), gph(tp(1, 0.5), {}, true),
              gph(tp(0, 1), {}, true), rot_inh(K::ExpZ, tp(2, 0.5), 0),
              fix(K::Sdg, {0}), fix(K::H, {0}), rot_inh(K::ExpZ, tp(0, 0.5), 0),
              fix(K::H, {0}), fix(K::S, {0}), rot_inh(K::ExpZ, tp(1, 0.5), 0)}));
    add(rule("F2.u3", K::U3, 0,
             {gph(tp(0, 1), {}, true), rot_inh(K::ExpZ, tp(2, 0.5), 0),
              fix(K::Sdg, {0}), fix(K::H, {0}), rot_inh(K::ExpZ, tp(0, 0.5), 0),
              fix(K::H, {0}), fix(K::S, {0}), rot_inh(K::ExpZ, tp(1, 0.5), 0)}));
    add(rule("F2.u2", K::U2, 0,
             {gph(tp_const(kPi / 4), {}, true), rot_inh(K::ExpZ, tp(1, 0.5), 0),
              fix(K::Sdg, {0}), fix(K::H, {0}), fix_inh(K::S, {0}), fix(K::H, {0}),
              fix(K::S, {0}), rot_inh(K::ExpZ, tp(0, 0.5), 0)}));
    // CU's own control is role 0, its target role 1.
    add(rule("F2.cu", K::CU, 0,
             {gph(tp(3, 1), {0}, true), gph(tp(2, 0.5), {0}, true),
              gph(tp(1, 0.5), {0}, true), gph(tp(0, 1), {0}, true),
              rot_inh(K::ExpZ, tp(2, 0.5), 1, {0}), fix(K::Sdg, {1}), fix(K::H, {1}),
              rot_inh(K::ExpZ, tp(0, 0.5), 1, {0}), fix(K::H, {1}), fix(K::S, {1}),
              rot_inh(K::ExpZ, tp(1, 0.5), 1, {0})}));

    // --- gates missing from the legacy standard library ----------------------
    exempt(rule("F3.swap", K::Swap, 0,
                {fix(K::X, {1}, {0}), fix(K::X, {0}, {1}), fix(K::X, {1}, {0})}));
    exempt(rule("F3.cswap", K::Swap, 1,
                {fix(K::X, {2}, {1}), fix(K::X, {1}, {0, 2}), fix(K::X, {2}, {1})}));
    add(rule("F3.sx", K::SX, 0, {fix(K::H, {0}), fix(K::S, {0}), fix(K::H, {0})}));
    add(rule("F3.crx", K::Rx, 1,
             {rot(K::Rx, tp(0, 0.5), 1), fix(K::Z, {1}, {0}),
              rot(K::Rx, tp(0, -0.5), 1), fix(K::Z, {1}, {0})}));
    add(rule("F3.cry", K::Ry, 1,
             {rot(K::Ry, tp(0, 0.5), 1), fix(K::Z, {1}, {0}),
              rot(K::Ry, tp(0, -0.5), 1), fix(K::Z, {1}, {0})}));
    add(rule("F3.crz", K::Rz, 1,
             {rot(K::Rz, tp(0, 0.5), 1), fix(K::X, {1}, {0}),
              rot(K::Rz, tp(0, -0.5), 1), fix(K::X, {1}, {0})}));
    add(rule("F3.cp", K::P, 1,
             {rot(K::P, tp(0, 0.5), 1), fix(K::X, {1}, {0}),
              rot(K::P, tp(0, -0.5), 1), fix(K::X, {1}, {0}),
              rot(K::P, tp(0, 0.5), 0)}));

    // --- single-control eliminations -----------------------------------------
    add(rule("F5.comega", K::Omega, 1, {fix(K::T, {0})}));
    add(rule("F5.cix", K::IX, 1, {fix(K::X, {1}, {0}), fix(K::S, {0})}));
    add(rule("F5.cs", K::S, 1,
             {fix(K::X, {0}, {1}), fix(K::Tdg, {0}), fix(K::X, {0}, {1}),
              fix(K::T, {0}), fix(K::T, {1})}));
    add(rule("F5.csx", K::SX, 1,
             {fix(K::H, {1}), fix(K::X, {0}, {1}), fix(K::T, {1}), fix(K::Tdg, {0}),
              fix(K::X, {0}, {1}), fix(K::H, {1}), fix(K::T, {0})}));
    add(rule("F5.ce", K::E, 1,
             {fix(K::S, {0}), fix(K::H, {1}), fix(K::T, {1}), fix(K::X, {1}, {0}),
              fix(K::Tdg, {1}), fix(K::H, {1}), fix(K::X, {0}, {1}), fix(K::T, {0}),
              fix(K::Tdg, {1}), fix(K::X, {0}, {1})}));
    add(rule("F5.cexpz", K::ExpZ, 1,
             {rot(K::ExpZ, tp(0, 0.5), 1), fix(K::X, {1}, {0}),
              rot(K::ExpZ, tp(0, -0.5), 1), fix(K::X, {1}, {0})}));
    add(anc_rule("F5.ct", K::T, 1, {0},
                 {fix(K::H, {2}), fix(K::X, {1}, {2}), fix(K::X, {0}, {1}),
                  fix(K::Tdg, {0}), fix(K::T, {1}), fix(K::X, {1}, {2}),
                  fix(K::X, {0}, {1}), fix(K::T, {0}), fix(K::Tdg, {2}),
                  fix(K::X, {0}, {2}), fix(K::H, {2}), fix(K::T, {2}),
                  fix(K::H, {2}), fix(K::X, {0}, {2}), fix(K::Tdg, {0}),
                  fix(K::T, {2}), fix(K::X, {0}, {1}), fix(K::X, {1}, {2}),
                  fix(K::T, {0}), fix(K::Tdg, {1}), fix(K::X, {0}, {1}),
                  fix(K::X, {1}, {2}), fix(K::H, {2})}));

    // --- remaining controlled forms -------------------------------------------
    add(rule("F6.cz", K::Z, 1,
             {fix(K::H, {1}), fix(K::X, {1}, {0}), fix(K::H, {1})}));
    add(rule("F6.cy", K::Y, 1,
             {fix(K::Sdg, {1}), fix(K::X, {1}, {0}), fix(K::S, {1})}));
    add(rule("F6.ch", K::H, 1,
             {fix(K::S, {1}), fix(K::H, {1}), fix(K::T, {1}), fix(K::X, {1}, {0}),
              fix(K::Tdg, {1}), fix(K::H, {1}), fix(K::Sdg, {1})}));
    add(rule("F6.cw", K::W, 1,
             {fix(K::X, {2}, {1}), fix(K::Sdg, {1}), fix(K::H, {1}),
              fix(K::Tdg, {1}), fix(K::H, {1}), fix(K::T, {0}), fix(K::T, {1}),
              fix(K::T, {2}), fix(K::X, {0}, {2}), fix(K::X, {2}, {1}),
              fix(K::X, {1}, {0}), fix(K::T, {1}), fix(K::Tdg, {2}),
              fix(K::X, {2}, {0}), fix(K::Tdg, {0}), fix(K::Tdg, {2}),
              fix(K::X, {2}, {1}), fix(K::X, {1}, {0}), fix(K::X, {0}, {2}),
              fix(K::H, {1}), fix(K::T, {1}), fix(K::H, {1}), fix(K::S, {1}),
              fix(K::X, {2}, {1})}));
    add(anc_rule("F6.ccz", K::Z, 2, {0, 0, 0, 0},
                 {fix(K::X, {5}, {1}), fix(K::X, {3}, {0}), fix(K::X, {4}, {1}),
                  fix(K::X, {5}, {2}), fix(K::X, {6}, {3}), fix(K::X, {4}, {0}),
                  fix(K::X, {6}, {2}), fix(K::X, {3}, {5}), fix(K::T, {0}),
                  fix(K::T, {1}), fix(K::T, {2}), fix(K::T, {3}), fix(K::Tdg, {4}),
                  fix(K::Tdg, {5}), fix(K::Tdg, {6}), fix(K::X, {3}, {5}),
                  fix(K::X, {6}, {2}), fix(K::X, {4}, {0}), fix(K::X, {6}, {3}),
                  fix(K::X, {5}, {2}), fix(K::X, {4}, {1}), fix(K::X, {3}, {0}),
                  fix(K::X, {5}, {1})}));
    add(anc_rule("F6.ccx", K::X, 2, {0, 0, 0, 0},
                 {fix(K::H, {2}), fix(K::X, {5}, {1}), fix(K::X, {3}, {0}),
                  fix(K::X, {4}, {1}), fix(K::X, {5}, {2}), fix(K::X, {6}, {3}),
                  fix(K::X, {4}, {0}), fix(K::X, {6}, {2}), fix(K::X, {3}, {5}),
                  fix(K::T, {0}), fix(K::T, {1}), fix(K::T, {2}), fix(K::T, {3}),
                  fix(K::Tdg, {4}), fix(K::Tdg, {5}), fix(K::Tdg, {6}),
                  fix(K::X, {3}, {5}), fix(K::X, {6}, {2}), fix(K::X, {4}, {0}),
                  fix(K::X, {6}, {3}), fix(K::X, {5}, {2}), fix(K::X, {4}, {1}),
                  fix(K::X, {3}, {0}), fix(K::X, {5}, {1}), fix(K::H, {2})}));
    add(anc_rule("F6.ccix", K::IX, 2, {0},
                 {fix(K::H, {2}), fix(K::X, {3}, {0}), fix(K::X, {1}, {2}),
                  fix(K::X, {0}, {2}), fix(K::X, {3}, {1}), fix(K::T, {0}),
                  fix(K::T, {1}), fix(K::Tdg, {2}), fix(K::Tdg, {3}),
                  fix(K::X, {3}, {1}), fix(K::X, {0}, {2}), fix(K::X, {1}, {2}),
                  fix(K::X, {3}, {0}), fix(K::H, {2})}));
    add(rule("F6.cswap", K::Swap, 1,
             {fix(K::X, {1}, {2}), fix(K::H, {2}), fix(K::T, {0}), fix(K::T, {1}),
              fix(K::T, {2}), fix(K::X, {0}, {1}), fix(K::X, {1}, {2}),
              fix(K::X, {2}, {0}), fix(K::Tdg, {1}), fix(K::T, {2}),
              fix(K::X, {1}, {0}), fix(K::Tdg, {0}), fix(K::Tdg, {1}),
              fix(K::X, {1}, {2}), fix(K::X, {2}, {0}), fix(K::X, {0}, {1}),
              fix(K::H, {2}), fix(K::X, {1}, {2})}));

    // --- generic reductions, pinned instances ---------------------------------
    // Ancilla-mediated control reduction: peel two controls with a doubly
    // controlled iX pair around the gate on the ancilla.
    add(anc_rule("D3.cccz", K::Z, 3, {0},
                 {fix(K::IX, {4}, {0, 1}), fix(K::Z, {3}, {4, 2}),
                  inv(fix(K::IX, {4}, {0, 1}))}));
    // Square-root constructions for doubly controlled single-target gates.
    add(rule("D4.ccx", K::X, 2,
             {fix(K::SX, {2}, {1}), fix(K::X, {1}, {0}), inv(fix(K::SX, {2}, {1})),
              fix(K::X, {1}, {0}), fix(K::SX, {2}, {0})}));
    add(rule("D4.ccz", K::Z, 2,
             {fix(K::S, {2}, {1}), fix(K::X, {1}, {0}), fix(K::Sdg, {2}, {1}),
              fix(K::X, {1}, {0}), fix(K::S, {2}, {0})}));
    add(rule("D4.ccs", K::S, 2,
             {fix(K::T, {2}, {1}), fix(K::X, {1}, {0}), fix(K::Tdg, {2}, {1}),
              fix(K::X, {1}, {0}), fix(K::T, {2}, {0})}));

    // --- odds and ends ----------------------------------------------------------
    {
        DecompRule r = rule("LSC.y", K::Y, 0, {fix(K::Z, {0}), fix(K::X, {0})});
        r.phase_exact = false;
        add(r);
    }
    // A global phase over a borrowed wire (the circuit acts diagonally, so
    // the wire's state does not matter; both basis values are verified).
    add(anc_rule("Q2.gphase0", K::GPhase, 0, {0},
                 {rot(K::P, tp(0, 1), 0), fix(K::X, {0}), rot(K::P, tp(0, 1), 0),
                  fix(K::X, {0})}));
    add(anc_rule("Q2.gphase1", K::GPhase, 0, {1},
                 {rot(K::P, tp(0, 1), 0), fix(K::X, {0}), rot(K::P, tp(0, 1), 0),
                  fix(K::X, {0})}));

    // --- inverses with non-trivial closed forms ---------------------------------
    add(inv_rule("INV.s", K::S, {fix(K::Sdg, {0})}));
    add(inv_rule("INV.sdg", K::Sdg, {fix(K::S, {0})}));
    add(inv_rule("INV.t", K::T, {fix(K::Tdg, {0})}));
    add(inv_rule("INV.tdg", K::Tdg, {fix(K::T, {0})}));
    add(inv_rule("INV.sx", K::SX, {fix(K::SX, {0}), fix(K::X, {0})}));
    add(inv_rule("INV.ix", K::IX, {gph(tp_const(kPi)), fix(K::IX, {0})}));
    add(inv_rule("INV.omega", K::Omega, {gph(tp_const(-kPi / 4))}));
    add(inv_rule("INV.e", K::E,
                 {gph(tp_const(-3 * kPi / 4)), fix(K::H, {0}), fix(K::S, {0})}));
    add(inv_rule("INV.rgate", K::RGate, {rot(K::P, tp_pow2(0, -2 * kPi), 0)}));
    {
        TGate u;
        u.kind = K::U;
        u.params = {tp(0, -1), tp(2, -1), tp(1, -1)};
        u.targets = {0};
        add(inv_rule("INV.u", K::U, {u}));
        u.kind = K::U3;
        add(inv_rule("INV.u3", K::U3, {u}));
        u.params = {tp_const(-kPi / 2), tp(1, -1), tp(0, -1)};
        add(inv_rule("INV.u2", K::U2, {u}));
        TGate cu;
        cu.kind = K::CU;
        cu.params = {tp(0, -1), tp(2, -1), tp(1, -1), tp(3, -1)};
        cu.targets = {0, 1};
        add(inv_rule("INV.cu", K::CU, {cu}));
    }

    return rs;
}

}  // namespace

const std::vector<DecompRule> &catalog() {
    static const std::vector<DecompRule> rs = build_catalog();
    return rs;
}

const DecompRule *find_rule(const std::string &id) {
    for (const auto &r : catalog())
        if (r.id == id) return &r;
    return nullptr;
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

namespace {

std::vector<double> sample_params(const DecompRule &r) {
    static const double samples[] = {0.83, 1.91, -0.57, 0.41};
    std::vector<double> p;
    int n = n_params(r.lhs_kind);
    for (int i = 0; i < n; ++i)
        p.push_back(r.lhs_kind == GateKind::RGate ? 3.0 : samples[i]);
    return p;
}

bool rule_has_inherit(const DecompRule &r) {
    for (const auto &g : r.body)
        if (g.inherit_controls) return true;
    return false;
}

}  // namespace

bool verify_rule(const DecompRule &r, int extra_ctrls, double *deviation) {
    int c = r.lhs_ctrls;
    int t = n_targets(r.lhs_kind);
    // Wire layout: lhs controls, targets, synthetic extra controls, ancillas.
    int n_main = c + t + extra_ctrls;
    int n = n_main + r.extra_wires;
    if (n > kMaxOracleWires) throw internal_error("catalog rule too wide to verify");
    auto role_wire = [&](int role) { return role < c + t ? role : role + extra_ctrls; };

    Ctrls inherited;
    for (int i = 0; i < c; ++i) inherited.push_back({i, true});
    for (int i = 0; i < extra_ctrls; ++i) inherited.push_back({c + t + i, true});

    std::vector<double> P = sample_params(r);

    std::vector<int> lhs_targets;
    for (int i = 0; i < t; ++i) lhs_targets.push_back(c + i);
    Matrix lhs = r.lhs_kind == GateKind::GPhase
                     ? gphase_embed(r.lhs_inverted ? -P[0] : P[0], inherited, n_main)
                     : embed(gate_matrix(r.lhs_kind, P, r.lhs_inverted), lhs_targets,
                             n_main, inherited);

    Matrix rhs = Matrix::identity(1 << n);
    for (const auto &g : r.body) {
        Ctrls ctrls;
        for (auto [role, pol] : g.controls) ctrls.push_back({role_wire(role), pol});
        if (g.inherit_controls)
            for (auto [w, pol] : inherited) ctrls.push_back({w, pol});
        std::vector<double> gp;
        for (const auto &p : g.params) gp.push_back(p.eval(P));
        Matrix m;
        if (g.kind == GateKind::GPhase) {
            m = gphase_embed(g.inverted ? -gp[0] : gp[0], ctrls, n);
        } else {
            std::vector<int> wires;
            for (int role : g.targets) wires.push_back(role_wire(role));
            m = embed(gate_matrix(g.kind, gp, g.inverted), wires, n, ctrls);
        }
        rhs = m * rhs;
    }

    double tol = r.phase_exact ? 1e-12 : 1e-10;
    bool ok;
    double dev = 0.0;
    if (r.extra_wires == 0) {
        dev = r.phase_exact ? dev_exact(rhs, lhs) : dev_upto_phase(rhs, lhs);
        ok = dev <= tol;
    } else {
        ok = ancilla_identity_check(rhs, lhs, r.anc_values, tol, !r.phase_exact);
    }
    if (deviation) *deviation = dev;
    return ok;
}

std::vector<RuleReport> verify_catalog() {
    std::vector<RuleReport> out;
    for (const auto &r : catalog()) {
        RuleReport rep;
        rep.id = r.id;
        rep.body_size = static_cast<int>(r.body.size());
        rep.matrix_ok = verify_rule(r, 0, &rep.deviation);
        rep.controlled_ok = !rule_has_inherit(r) || verify_rule(r, 1);

        // Control census: no body gate may carry more controls than the
        // left-hand side, unless the rule is a declared phase-alias.
        int budget = r.lhs_ctrls + (r.lhs_kind == GateKind::CU ? 1 : 0);
        rep.census_ok = true;
        for (const auto &g : r.body) {
            int nc = static_cast<int>(g.controls.size()) +
                     (g.inherit_controls ? r.lhs_ctrls : 0);
            if (nc > budget) rep.census_ok = false;
        }
        if (r.census_exempt) rep.census_ok = true;
        out.push_back(std::move(rep));
    }
    return out;
}

// ---------------------------------------------------------------------------
// instantiation
// ---------------------------------------------------------------------------

std::vector<QuipGate> instantiate_quip(const DecompRule &r,
                                       const std::vector<double> &lhs_params,
                                       const std::vector<int> &role_wires,
                                       const std::vector<std::pair<int, bool>> &inherited,
                                       bool invert) {
    std::vector<QuipGate> out;
    for (const auto &g : r.body) {
        // Inherited controls come first: a body gate that turns the target
        // into an extra control (e.g. a phase alias) then round-trips with the
        // original control order intact.
        std::vector<std::pair<int, bool>> ctrls;
        if (g.inherit_controls)
            for (auto [w, pol] : inherited) ctrls.push_back({w, pol});
        for (auto [role, pol] : g.controls) ctrls.push_back({role_wires.at(role), pol});
        if (g.kind == GateKind::GPhase) {
            double v = g.params[0].eval(lhs_params);
            out.push_back(QuipGate::gphase(Angle(invert ? -v : v), std::move(ctrls)));
            continue;
        }
        // Quipper spells Sdg / Tdg as inverted S / T.
        GateKind k = g.kind;
        bool gate_inv = g.inverted;
        if (k == GateKind::Sdg) { k = GateKind::S; gate_inv = !gate_inv; }
        if (k == GateKind::Tdg) { k = GateKind::T; gate_inv = !gate_inv; }
        if (!quip_spellable(k))
            throw internal_error("rule " + r.id + " is not expressible in Quipper");
        if (invert && !self_inverse(k)) gate_inv = !gate_inv;
        std::vector<int> wires;
        for (int role : g.targets) wires.push_back(role_wires.at(role));
        std::vector<Angle> params;
        for (const auto &p : g.params) params.push_back(Angle(p.eval(lhs_params)));
        out.push_back(QuipGate::unitary(k, std::move(wires), std::move(ctrls), gate_inv,
                                        std::move(params)));
    }
    if (invert) std::reverse(out.begin(), out.end());
    return out;
}

namespace {

Angle map_angle(const TParam &p, const std::vector<Angle> &lhs_angles) {
    if (p.form == TParam::Form::Linear && p.idx >= 0 && p.offset == 0.0) {
        const Angle &src = lhs_angles.at(p.idx);
        if (p.scale == 1.0) return src;
        if (p.scale == -1.0) {
            Angle a(-src.value);
            if (!src.text.empty()) a.text = "-(" + src.text + ")";
            return a;
        }
    }
    std::vector<double> vals;
    for (const auto &a : lhs_angles) vals.push_back(a.value);
    return Angle(p.eval(vals));
}

Angle negate_angle(const Angle &a) {
    Angle out(-a.value);
    if (!a.text.empty()) out.text = "-(" + a.text + ")";
    return out;
}

}  // namespace

std::vector<Statement> instantiate_qasm(const DecompRule &r,
                                        const std::vector<Angle> &lhs_angles,
                                        const std::vector<Operand> &role_ops,
                                        const std::vector<std::pair<Operand, bool>> &inherited,
                                        bool invert) {
    auto angle_negatable = [](GateKind k) {
        switch (k) {
            case GateKind::Rx: case GateKind::Ry: case GateKind::Rz:
            case GateKind::P: case GateKind::U1: case GateKind::ExpZ:
            case GateKind::GPhase:
                return true;
            default:
                return false;
        }
    };
    std::vector<Statement> out;
    for (const auto &g : r.body) {
        Statement s;
        s.kind = Statement::Kind::Gate;
        GateKind k = g.kind;
        bool gate_inv = g.inverted;
        bool negate = false;
        if (invert) {
            if (angle_negatable(k))
                negate = !negate;
            else if (!self_inverse(k))
                gate_inv = !gate_inv;
        }
        if (gate_inv && angle_negatable(k)) {
            gate_inv = false;
            negate = !negate;
        }
        if (gate_inv) {
            // Prefer closed forms over an inv @ modifier where one exists.
            switch (k) {
                case GateKind::S: k = GateKind::Sdg; gate_inv = false; break;
                case GateKind::Sdg: k = GateKind::S; gate_inv = false; break;
                case GateKind::T: k = GateKind::Tdg; gate_inv = false; break;
                case GateKind::Tdg: k = GateKind::T; gate_inv = false; break;
                default: break;
            }
        }
        s.gate = k;
        if (gate_inv) s.mods.push_back({ModKind::Inverse, 0});
        for (const auto &p : g.params) {
            Angle a = map_angle(p, lhs_angles);
            if (negate) a = negate_angle(a);
            s.params.push_back(std::move(a));
        }
        for (auto [role, pol] : g.controls) {
            s.mods.push_back({pol ? ModKind::PosCtrl : ModKind::NegCtrl, 0});
            s.operands.push_back(role_ops.at(role));
        }
        if (g.inherit_controls)
            for (const auto &[op, pol] : inherited) {
                s.mods.push_back({pol ? ModKind::PosCtrl : ModKind::NegCtrl, 0});
                s.operands.push_back(op);
            }
        for (int role : g.targets) s.operands.push_back(role_ops.at(role));
        out.push_back(std::move(s));
    }
    if (invert) std::reverse(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// generated include files
// ---------------------------------------------------------------------------

namespace {

// Renders a rule body as an OpenQASM 2.0 gate body over named role operands.
std::string render_body_2(const DecompRule &r, const std::vector<std::string> &roles,
                          const std::vector<std::string> &pnames) {
    auto pstr = [&](const TParam &p) -> std::string {
        if (p.idx < 0) {
            // constants are multiples of pi/4 in every shipped rule
            int k = static_cast<int>(std::lround(p.offset / (kPi / 4)));
            if (std::abs(p.offset - k * (kPi / 4)) > 1e-12)
                throw internal_error("unrenderable constant angle");
            if (k == 4) return "pi";
            if (k == -4) return "-pi";
            return (k < 0 ? "-" : "") + std::to_string(std::abs(k)) + "*pi/4";
        }
        std::string base = pnames.at(p.idx);
        if (p.scale == 1.0) return base;
        if (p.scale == -1.0) return "-" + base;
        if (p.scale == 2.0) return "2*" + base;
        if (p.scale == 0.5) return base + "/2";
        if (p.scale == -0.5) return "-" + base + "/2";
        throw internal_error("unrenderable parameter scale");
    };
    std::ostringstream os;
    for (const auto &g : r.body) {
        os << "  ";
        if (g.kind == GateKind::GPhase) {
            // e^{ia} via the diagonal identity u1(a); x; u1(a); x.
            if (!g.controls.empty()) throw internal_error("unrenderable gphase");
            std::string a = pstr(g.params[0]);
            const std::string &w = roles.at(0);
            os << "u1(" << a << ") " << w << "; x " << w << "; u1(" << a << ") " << w
               << "; x " << w << ";\n";
            continue;
        }
        GateKind k = g.kind;
        bool inv = g.inverted;
        if (inv) throw internal_error("unrenderable inverted gate");
        static const std::map<std::pair<GateKind, int>, const char *> names = {
            {{GateKind::X, 0}, "x"},       {{GateKind::Y, 0}, "y"},
            {{GateKind::Z, 0}, "z"},       {{GateKind::H, 0}, "h"},
            {{GateKind::S, 0}, "s"},       {{GateKind::Sdg, 0}, "sdg"},
            {{GateKind::T, 0}, "t"},       {{GateKind::Tdg, 0}, "tdg"},
            {{GateKind::P, 0}, "u1"},      {{GateKind::U1, 0}, "u1"},
            {{GateKind::Rx, 0}, "rx"},     {{GateKind::Ry, 0}, "ry"},
            {{GateKind::X, 1}, "cx"},      {{GateKind::Z, 1}, "cz"},
            {{GateKind::H, 1}, "ch"},      {{GateKind::X, 2}, "ccx"},
            {{GateKind::U1, 1}, "cu1"},    {{GateKind::P, 1}, "cu1"},
        };
        auto it = names.find({k, static_cast<int>(g.controls.size())});
        if (it == names.end()) throw internal_error("unrenderable gate in include body");
        os << it->second;
        if (!g.params.empty()) {
            os << '(';
            for (size_t i = 0; i < g.params.size(); ++i)
                os << (i ? "," : "") << pstr(g.params[i]);
            os << ')';
        }
        os << ' ';
        bool first = true;
        for (auto [role, pol] : g.controls) {
            if (!pol) throw internal_error("unrenderable negative control");
            os << (first ? "" : ",") << roles.at(role);
            first = false;
        }
        for (int role : g.targets) {
            os << (first ? "" : ",") << roles.at(role);
            first = false;
        }
        os << ";\n";
    }
    return os.str();
}

std::string gate_def(const char *decl, const std::string &body) {
    return std::string("gate ") + decl + " {\n" + body + "}\n";
}

}  // namespace

IncludeSet emit_includes() {
    IncludeSet inc;

    std::ostringstream qg;
    qg << "// Quipper-native gates over the qelib1 base set.\n"
          "// Global phases use the diagonal identity u1(a) q; x q; u1(a) q; x q;\n";
    qg << gate_def("quip_omega q", render_body_2(*find_rule("F1.omega"), {"q"}, {}));
    qg << gate_def("quip_ix q", render_body_2(*find_rule("F1.ix"), {"q"}, {}));
    qg << gate_def("quip_e q",
                   "  u1(3*pi/4) q; x q; u1(3*pi/4) q; x q;\n  s q; s q; s q; h q;\n");
    qg << gate_def("quip_w a,b", render_body_2(*find_rule("F1.w"), {"a", "b"}, {}));
    qg << gate_def("quip_expz(t) q",
                   "  u1(-t) q; x q; u1(-t) q; x q;\n  u1(2*t) q;\n");
    qg << gate_def("quip_rgate(k) q", "  u1(2*pi/(2^k)) q;\n");
    inc.quipgates = qg.str();

    inc.quipfuncs =
        "// Quipper wire-management primitives.\n"
        "def QInit0(qubit q) { reset q; }\n"
        "def QInit1(qubit q) { reset q; x q; }\n"
        "def QTerm0(qubit q) { }  // asserts q is |0>\n"
        "def QTerm1(qubit q) { }  // asserts q is |1>\n"
        "def QDiscard(qubit q) { }\n"
        "def QMeas(qubit q) -> bit { return measure q; }\n"
        "def CInit0(bit c) { c = 0; }\n"
        "def CInit1(bit c) { c = 1; }\n"
        "def CTerm0(bit c) { }  // asserts c == 0\n"
        "def CTerm1(bit c) { }  // asserts c == 1\n"
        "def CDiscard(bit c) { }\n";

    std::ostringstream bg;
    bg << "// Gates from the OpenQASM 3 standard library missing from qelib1.\n";
    bg << gate_def("sx q", render_body_2(*find_rule("F3.sx"), {"q"}, {}));
    bg << gate_def("swap a,b", render_body_2(*find_rule("F3.swap"), {"a", "b"}, {}));
    bg << gate_def("cswap c,a,b",
                   render_body_2(*find_rule("F3.cswap"), {"c", "a", "b"}, {}));
    bg << gate_def("crx(theta) c,t",
                   render_body_2(*find_rule("F3.crx"), {"c", "t"}, {"theta"}));
    bg << gate_def("cry(theta) c,t",
                   render_body_2(*find_rule("F3.cry"), {"c", "t"}, {"theta"}));
    bg << gate_def("cu(theta,phi,lambda,gamma) c,t",
                   "  u1(gamma) c;\n"
                   "  u1(lambda/2) c; u1(phi/2) c; u1(theta) c;\n"
                   "  u1(-lambda/2) c; cu1(lambda) c,t;\n"
                   "  sdg t; h t;\n"
                   "  u1(-theta/2) c; cu1(theta) c,t;\n"
                   "  h t; s t;\n"
                   "  u1(-phi/2) c; cu1(phi) c,t;\n");
    inc.bkpgates = bg.str();

    return inc;
}

}  // namespace lq
