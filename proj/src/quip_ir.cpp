#include <algorithm>
#include <set>
#include <sstream>

#include "lq/ir.hpp"

namespace lq {

QuipGate QuipGate::unitary(GateKind g, std::vector<int> wires,
                           std::vector<std::pair<int, bool>> ctrls, bool inverted,
                           std::vector<Angle> params) {
    QuipGate q;
    q.kind = Kind::Unitary;
    q.gate = g;
    q.wires = std::move(wires);
    q.controls = std::move(ctrls);
    q.inverted = inverted;
    q.params = std::move(params);
    return q;
}

QuipGate QuipGate::simple(Kind k, int wire, int value) {
    QuipGate q;
    q.kind = k;
    q.wires = {wire};
    q.value = value;
    return q;
}

QuipGate QuipGate::gphase(Angle a, std::vector<std::pair<int, bool>> ctrls) {
    QuipGate q;
    q.kind = Kind::GPhase;
    q.params = {a};
    q.controls = std::move(ctrls);
    return q;
}

std::optional<std::string> dfa_step(WireState &state, WireEvent ev) {
    switch (state) {
        case WireState::Fresh:
            if (ev == WireEvent::Use) { state = WireState::LiveInput; return {}; }
            if (ev == WireEvent::Init) { state = WireState::LiveAncilla; return {}; }
            return "TermBeforeInit";
        case WireState::LiveInput:
        case WireState::LiveAncilla:
            if (ev == WireEvent::Use) return {};
            if (ev == WireEvent::Term) { state = WireState::Dead; return {}; }
            return "DoubleInit";
        case WireState::Dead:
            if (ev == WireEvent::Init) { state = WireState::LiveAncilla; return {}; }
            return ev == WireEvent::Use ? "UseAfterTerm" : "UseAfterTerm";
    }
    return "TermBeforeInit";  // unreachable
}

namespace {

struct EventList {
    // (wire, event) pairs of one gate, in a fixed order.
    std::vector<std::pair<int, WireEvent>> ev;
};

EventList gate_events(const QuipGate &g) {
    EventList out;
    switch (g.kind) {
        case QuipGate::Kind::Unitary:
            for (int w : g.wires) out.ev.push_back({w, WireEvent::Use});
            for (auto [w, pol] : g.controls) out.ev.push_back({w, WireEvent::Use});
            break;
        case QuipGate::Kind::GPhase:
            for (auto [w, pol] : g.controls) out.ev.push_back({w, WireEvent::Use});
            break;
        case QuipGate::Kind::QInit:
        case QuipGate::Kind::CInit:
            out.ev.push_back({g.wires[0], WireEvent::Init});
            break;
        case QuipGate::Kind::QTerm:
        case QuipGate::Kind::CTerm:
        case QuipGate::Kind::QDiscard:
        case QuipGate::Kind::CDiscard:
            out.ev.push_back({g.wires[0], WireEvent::Term});
            break;
        case QuipGate::Kind::QMeas:
            out.ev.push_back({g.wires[0], WireEvent::Use});
            break;
    }
    return out;
}

}  // namespace

std::optional<DfaError> run_dfa(const QuipCircuit &c, WireSummary *summary) {
    std::map<int, WireState> state;
    std::map<int, WireType> type;
    std::map<int, int> birth;  // open ancilla intervals
    std::vector<std::pair<int, int>> intervals;
    for (auto [w, t] : c.inputs) {
        state[w] = WireState::LiveInput;
        type[w] = t;
    }
    for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) {
        const QuipGate &g = c.gates[i];
        for (auto [w, ev] : gate_events(g).ev) {
            WireState &st = state.try_emplace(w, WireState::Fresh).first->second;
            bool was_fresh = st == WireState::Fresh;
            bool was_ancilla = st == WireState::LiveAncilla;
            auto err = dfa_step(st, ev);
            if (err) return DfaError{*err, w, i};
            if (was_fresh && ev == WireEvent::Use)
                return DfaError{"UseBeforeInit", w, i};
            if (ev == WireEvent::Init) {
                birth[w] = i;
                type[w] = g.kind == QuipGate::Kind::QInit ? WireType::Qbit : WireType::Cbit;
            }
            if (ev == WireEvent::Term && was_ancilla) {
                intervals.push_back({birth[w], i});
                birth.erase(w);
            }
        }
        if (g.kind == QuipGate::Kind::QMeas) type[g.wires[0]] = WireType::Cbit;
    }
    if (summary) {
        summary->inputs = c.inputs;
        summary->live_at_end.clear();
        for (auto [w, st] : state)
            if (st == WireState::LiveInput || st == WireState::LiveAncilla)
                summary->live_at_end[w] = type[w];
        for (auto [w, b] : birth) intervals.push_back({b, -1});
        std::sort(intervals.begin(), intervals.end());
        summary->ancilla_intervals = intervals;
    }
    return std::nullopt;
}

std::vector<Diagnostic> validate(const QuipCircuit &c) {
    std::vector<Diagnostic> out;
    for (auto [w, t] : c.inputs)
        if (w < 0) out.push_back({-1, "negative wire index in inputs"});

    std::map<int, WireType> type;
    for (auto [w, t] : c.inputs) type[w] = t;

    for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) {
        const QuipGate &g = c.gates[i];
        auto bad = [&](const std::string &m) { out.push_back({i, m}); };
        auto want_type = [&](int w, WireType t, const char *what) {
            auto it = type.find(w);
            if (it != type.end() && it->second != t)
                bad(std::string(what) + " applied to a " +
                    (it->second == WireType::Qbit ? "Qbit" : "Cbit") + " wire");
        };
        std::set<int> seen;
        for (int w : g.wires) {
            if (w < 0) bad("negative wire index");
            if (!seen.insert(w).second) bad("wire repeated within one gate");
        }
        for (auto [w, pol] : g.controls) {
            if (w < 0) bad("negative wire index");
            if (!seen.insert(w).second) bad("wire repeated within one gate");
        }
        switch (g.kind) {
            case QuipGate::Kind::Unitary: {
                if (!quip_spellable(g.gate)) bad("gate has no Quipper spelling");
                int want_params =
                    (g.gate == GateKind::ExpZ || g.gate == GateKind::RGate) ? 1 : 0;
                if (static_cast<int>(g.params.size()) != want_params)
                    bad("wrong rotation parameter count");
                if (quip_spellable(g.gate) &&
                    static_cast<int>(g.wires.size()) != n_targets(g.gate))
                    bad("wrong target wire count");
                for (int w : g.wires) want_type(w, WireType::Qbit, "unitary gate");
                for (auto [w, pol] : g.controls) want_type(w, WireType::Qbit, "control");
                break;
            }
            case QuipGate::Kind::GPhase:
                if (g.params.size() != 1) bad("GPhase needs one angle");
                if (!g.wires.empty()) bad("GPhase takes no target wires");
                for (auto [w, pol] : g.controls) want_type(w, WireType::Qbit, "control");
                break;
            case QuipGate::Kind::QInit:
            case QuipGate::Kind::QTerm:
            case QuipGate::Kind::CInit:
            case QuipGate::Kind::CTerm:
                if (g.value != 0 && g.value != 1) bad("init/term value must be 0 or 1");
                [[fallthrough]];
            case QuipGate::Kind::QDiscard:
            case QuipGate::Kind::QMeas:
            case QuipGate::Kind::CDiscard: {
                if (g.wires.size() != 1) { bad("wire-management gate needs one wire"); break; }
                bool quantum = g.kind == QuipGate::Kind::QInit || g.kind == QuipGate::Kind::QTerm ||
                               g.kind == QuipGate::Kind::QDiscard || g.kind == QuipGate::Kind::QMeas;
                if (g.kind != QuipGate::Kind::QInit && g.kind != QuipGate::Kind::CInit)
                    want_type(g.wires[0], quantum ? WireType::Qbit : WireType::Cbit,
                              "wire-management gate");
                type[g.wires[0]] = quantum ? WireType::Qbit : WireType::Cbit;
                break;
            }
        }
        if (g.kind == QuipGate::Kind::QMeas) type[g.wires[0]] = WireType::Cbit;
    }

    WireSummary sum;
    if (auto err = run_dfa(c, &sum)) {
        out.push_back({err->gate_index, err->name + " on wire " + std::to_string(err->wire)});
        return out;
    }
    if (sum.live_at_end != c.outputs)
        out.push_back({-1, "outputs line inconsistent with inferred final wire states"});
    return out;
}

QuipCircuit normalize(const QuipCircuit &c) {
    QuipCircuit out = c;
    for (auto &g : out.gates)
        for (auto &a : g.params) a.text.clear();
    return out;
}

std::string fingerprint(const QuipCircuit &circ) {
    QuipCircuit c = normalize(circ);
    std::ostringstream os;
    auto put_wires = [&](const std::map<int, WireType> &m) {
        for (auto [w, t] : m) os << ' ' << w << (t == WireType::Qbit ? 'Q' : 'C');
        os << '\n';
    };
    os << "in";
    put_wires(c.inputs);
    for (const auto &g : c.gates) {
        switch (g.kind) {
            case QuipGate::Kind::Unitary:
                os << "u " << kind_id(g.gate) << (g.inverted ? "*" : "");
                break;
            case QuipGate::Kind::GPhase: os << "gphase"; break;
            case QuipGate::Kind::QInit: os << "qinit" << g.value; break;
            case QuipGate::Kind::QTerm: os << "qterm" << g.value; break;
            case QuipGate::Kind::CInit: os << "cinit" << g.value; break;
            case QuipGate::Kind::CTerm: os << "cterm" << g.value; break;
            case QuipGate::Kind::QDiscard: os << "qdiscard"; break;
            case QuipGate::Kind::CDiscard: os << "cdiscard"; break;
            case QuipGate::Kind::QMeas: os << "qmeas"; break;
        }
        for (const auto &a : g.params) os << ' ' << format_double(a.value);
        for (int w : g.wires) os << ' ' << w;
        if (!g.controls.empty()) {
            os << " c";
            for (auto [w, pol] : g.controls) os << (pol ? '+' : '-') << w;
        }
        os << '\n';
    }
    os << "out";
    put_wires(c.outputs);
    return os.str();
}

namespace {

QuipCircuit alpha_relabel(const QuipCircuit &c) {
    std::map<int, int> ren;
    int next = 0;
    for (auto [w, t] : c.inputs) ren.emplace(w, next++);
    for (const auto &g : c.gates) {
        for (int w : g.wires)
            if (ren.emplace(w, next).second) ++next;
        for (auto [w, pol] : g.controls)
            if (ren.emplace(w, next).second) ++next;
    }
    auto map_wire = [&](int w) {
        auto it = ren.find(w);
        return it == ren.end() ? (ren[w] = next++) : it->second;
    };
    QuipCircuit out;
    for (auto [w, t] : c.inputs) out.inputs[map_wire(w)] = t;
    for (auto g : c.gates) {
        for (int &w : g.wires) w = map_wire(w);
        for (auto &[w, pol] : g.controls) w = map_wire(w);
        std::sort(g.controls.begin(), g.controls.end());
        out.gates.push_back(std::move(g));
    }
    for (auto [w, t] : c.outputs) out.outputs[map_wire(w)] = t;
    return out;
}

}  // namespace

bool structural_eq(const QuipCircuit &a, const QuipCircuit &b, bool alpha) {
    if (alpha) return fingerprint(alpha_relabel(a)) == fingerprint(alpha_relabel(b));
    return fingerprint(a) == fingerprint(b);
}

}  // namespace lq
