#include <cctype>
#include <cstdlib>
#include <sstream>

#include "lq/io.hpp"

namespace lq {

namespace {

struct LineParser {
    std::string line;
    size_t i = 0;
    int lineno;

    LineParser(std::string l, int n) : line(std::move(l)), lineno(n) {}

    [[noreturn]] void fail(const std::string &msg) const {
        throw input_error("line " + std::to_string(lineno) + ": " + msg);
    }

    void skip_ws() {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    }

    bool eat(const std::string &s) {
        skip_ws();
        if (line.compare(i, s.size(), s) != 0) return false;
        i += s.size();
        return true;
    }

    void expect(const std::string &s) {
        if (!eat(s)) fail("expected '" + s + "'");
    }

    bool done() {
        skip_ws();
        return i >= line.size();
    }

    int integer() {
        skip_ws();
        size_t start = i;
        if (i < line.size() && (line[i] == '-' || line[i] == '+')) ++i;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
        if (i == start) fail("expected an integer");
        return std::atoi(line.substr(start, i - start).c_str());
    }

    double number() {
        skip_ws();
        const char *begin = line.c_str() + i;
        char *end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) fail("expected a number");
        i += end - begin;
        return v;
    }

    std::string quoted() {
        expect("\"");
        size_t start = i;
        while (i < line.size() && line[i] != '"') ++i;
        if (i >= line.size()) fail("unterminated string");
        std::string s = line.substr(start, i - start);
        ++i;
        return s;
    }

    std::vector<int> wire_list() {
        expect("(");
        std::vector<int> ws;
        if (!eat(")")) {
            ws.push_back(integer());
            while (eat(",")) ws.push_back(integer());
            expect(")");
        }
        return ws;
    }

    std::vector<std::pair<int, bool>> control_list() {
        expect("[");
        std::vector<std::pair<int, bool>> cs;
        if (!eat("]")) {
            do {
                skip_ws();
                bool pol = true;
                if (eat("+"))
                    pol = true;
                else if (eat("-"))
                    pol = false;
                else
                    fail("control polarity must be + or -");
                cs.push_back({integer(), pol});
            } while (eat(","));
            expect("]");
        }
        return cs;
    }
};

std::map<int, WireType> parse_wire_map(LineParser &lp) {
    std::map<int, WireType> m;
    if (lp.eat("none")) {
        if (!lp.done()) lp.fail("trailing input after 'none'");
        return m;
    }
    do {
        int w = lp.integer();
        lp.expect(":");
        WireType t;
        if (lp.eat("Qbit"))
            t = WireType::Qbit;
        else if (lp.eat("Cbit"))
            t = WireType::Cbit;
        else
            lp.fail("wire type must be Qbit or Cbit");
        if (!m.emplace(w, t).second) lp.fail("duplicate wire index");
    } while (lp.eat(","));
    if (!lp.done()) lp.fail("trailing input on wire list");
    return m;
}

const std::pair<const char *, QuipGate::Kind> kSimpleGates[] = {
    {"QInit0", QuipGate::Kind::QInit},   {"QInit1", QuipGate::Kind::QInit},
    {"QTerm0", QuipGate::Kind::QTerm},   {"QTerm1", QuipGate::Kind::QTerm},
    {"QDiscard", QuipGate::Kind::QDiscard}, {"QMeas", QuipGate::Kind::QMeas},
    {"CInit0", QuipGate::Kind::CInit},   {"CInit1", QuipGate::Kind::CInit},
    {"CTerm0", QuipGate::Kind::CTerm},   {"CTerm1", QuipGate::Kind::CTerm},
    {"CDiscard", QuipGate::Kind::CDiscard},
};

}  // namespace

QuipCircuit parse_quip(const std::string &text) {
    QuipCircuit c;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool saw_inputs = false, saw_outputs = false;
    while (std::getline(in, raw)) {
        ++lineno;
        LineParser lp(raw, lineno);
        if (lp.done()) continue;
        if (saw_outputs) lp.fail("content after Outputs line");
        if (!saw_inputs) {
            lp.expect("Inputs:");
            c.inputs = parse_wire_map(lp);
            saw_inputs = true;
            continue;
        }
        if (lp.eat("Outputs:")) {
            c.outputs = parse_wire_map(lp);
            saw_outputs = true;
            continue;
        }
        if (lp.eat("QGate")) {
            lp.expect("[");
            std::string name = lp.quoted();
            lp.expect("]");
            auto kind = lookup_quip_qgate(name);
            if (!kind) lp.fail("unknown QGate name '" + name + "'");
            bool inv = lp.eat("*");
            QuipGate g = QuipGate::unitary(*kind, lp.wire_list(), {}, inv);
            while (lp.eat("with")) {
                if (lp.eat("controls=")) {
                    g.controls = lp.control_list();
                } else if (lp.eat("inverse")) {
                    g.inverted = true;
                } else {
                    lp.fail("expected 'controls=' or 'inverse'");
                }
            }
            if (!lp.done()) lp.fail("trailing input on gate line");
            c.gates.push_back(std::move(g));
            continue;
        }
        if (lp.eat("QRot")) {
            lp.expect("[");
            std::string name = lp.quoted();
            lp.expect(",");
            double param = lp.number();
            lp.expect("]");
            auto kind = lookup_quip_qrot(name);
            if (!kind) lp.fail("unknown QRot name '" + name + "'");
            bool inv = lp.eat("*");
            QuipGate g = QuipGate::unitary(*kind, lp.wire_list(), {}, inv, {Angle(param)});
            while (lp.eat("with")) {
                if (lp.eat("controls=")) {
                    g.controls = lp.control_list();
                } else if (lp.eat("inverse")) {
                    g.inverted = true;
                } else {
                    lp.fail("expected 'controls=' or 'inverse'");
                }
            }
            if (!lp.done()) lp.fail("trailing input on gate line");
            c.gates.push_back(std::move(g));
            continue;
        }
        if (lp.eat("GPhase")) {
            lp.expect("[");
            double param = lp.number();
            lp.expect("]");
            QuipGate g = QuipGate::gphase(Angle(param));
            if (lp.eat("with")) {
                lp.expect("controls=");
                g.controls = lp.control_list();
            }
            if (!lp.done()) lp.fail("trailing input on gate line");
            c.gates.push_back(std::move(g));
            continue;
        }
        bool matched = false;
        for (auto [name, kind] : kSimpleGates) {
            if (!lp.eat(name)) continue;
            auto wires = lp.wire_list();
            if (wires.size() != 1) lp.fail("expected exactly one wire");
            if (!lp.done()) lp.fail("trailing input on gate line");
            int value = name[std::string(name).size() - 1] == '1' ? 1 : 0;
            c.gates.push_back(QuipGate::simple(kind, wires[0], value));
            matched = true;
            break;
        }
        if (matched) continue;
        lp.fail("unrecognized line");
    }
    if (!saw_inputs) throw input_error("missing Inputs: line");
    if (!saw_outputs) throw input_error("missing Outputs: line");
    auto diags = validate(c);
    if (!diags.empty()) {
        const auto &d = diags.front();
        throw input_error((d.stmt >= 0 ? "gate " + std::to_string(d.stmt) + ": " : "") +
                          d.message);
    }
    return c;
}

namespace {

void render_wire_map(std::ostringstream &os, const char *label,
                     const std::map<int, WireType> &m) {
    os << label;
    if (m.empty()) {
        os << " none\n";
        return;
    }
    bool first = true;
    for (auto [w, t] : m) {
        os << (first ? " " : ", ") << w << ':' << (t == WireType::Qbit ? "Qbit" : "Cbit");
        first = false;
    }
    os << '\n';
}

void render_controls(std::ostringstream &os, const std::vector<std::pair<int, bool>> &cs) {
    if (cs.empty()) return;
    os << " with controls=[";
    for (size_t i = 0; i < cs.size(); ++i)
        os << (i ? "," : "") << (cs[i].second ? '+' : '-') << cs[i].first;
    os << ']';
}

}  // namespace

std::string write_quip(const QuipCircuit &c) {
    std::ostringstream os;
    render_wire_map(os, "Inputs:", c.inputs);
    for (const auto &g : c.gates) {
        switch (g.kind) {
            case QuipGate::Kind::Unitary: {
                if (const char *rot = quip_qrot_name(g.gate)) {
                    os << "QRot[\"" << rot << "\"," << g.params[0].render() << ']';
                } else if (const char *nm = quip_qgate_name(g.gate)) {
                    os << "QGate[\"" << nm << "\"]";
                } else {
                    throw internal_error(std::string("gate '") + kind_id(g.gate) +
                                         "' has no Quipper spelling");
                }
                if (g.inverted) os << '*';
                os << '(';
                for (size_t i = 0; i < g.wires.size(); ++i) os << (i ? "," : "") << g.wires[i];
                os << ')';
                render_controls(os, g.controls);
                os << '\n';
                break;
            }
            case QuipGate::Kind::GPhase:
                os << "GPhase[" << g.params[0].render() << ']';
                render_controls(os, g.controls);
                os << '\n';
                break;
            case QuipGate::Kind::QInit: os << "QInit" << g.value << '(' << g.wires[0] << ")\n"; break;
            case QuipGate::Kind::QTerm: os << "QTerm" << g.value << '(' << g.wires[0] << ")\n"; break;
            case QuipGate::Kind::CInit: os << "CInit" << g.value << '(' << g.wires[0] << ")\n"; break;
            case QuipGate::Kind::CTerm: os << "CTerm" << g.value << '(' << g.wires[0] << ")\n"; break;
            case QuipGate::Kind::QDiscard: os << "QDiscard(" << g.wires[0] << ")\n"; break;
            case QuipGate::Kind::CDiscard: os << "CDiscard(" << g.wires[0] << ")\n"; break;
            case QuipGate::Kind::QMeas: os << "QMeas(" << g.wires[0] << ")\n"; break;
        }
    }
    render_wire_map(os, "Outputs:", c.outputs);
    return os.str();
}

}  // namespace lq
