#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numbers>
#include <sstream>

#include "lq/io.hpp"

namespace lq {

namespace {

struct Token {
    enum class Kind { Ident, Number, String, Sym, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 0, col = 0;
};

class Lexer {
  public:
    explicit Lexer(const std::string &src) : src_(src) { next(); }

    const Token &peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        next();
        return t;
    }

    [[noreturn]] void fail(const std::string &msg) const {
        throw input_error("line " + std::to_string(tok_.line) + ", col " +
                          std::to_string(tok_.col) + ": " + msg);
    }

    bool at_sym(const std::string &s) const {
        return tok_.kind == Token::Kind::Sym && tok_.text == s;
    }
    bool at_ident(const std::string &s) const {
        return tok_.kind == Token::Kind::Ident && tok_.text == s;
    }
    void expect_sym(const std::string &s) {
        if (!at_sym(s)) fail("expected '" + s + "'");
        take();
    }
    std::string expect_ident(const char *what) {
        if (tok_.kind != Token::Kind::Ident) fail(std::string("expected ") + what);
        return take().text;
    }

    size_t pos_of_current() const { return tok_start_; }
    size_t pos_before_current() const { return prev_end_; }
    std::string slice(size_t from, size_t to) const {
        std::string s = src_.substr(from, to - from);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
        return s;
    }

  private:
    void next() {
        prev_end_ = i_;
        for (;;) {
            while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) bump();
            if (i_ + 1 < src_.size() && src_[i_] == '/' && src_[i_ + 1] == '/') {
                while (i_ < src_.size() && src_[i_] != '\n') bump();
                continue;
            }
            break;
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        tok_start_ = i_;
        if (i_ >= src_.size()) return;
        char c = src_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok_.kind = Token::Kind::Ident;
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                tok_.text += src_[i_], bump();
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[i_ + 1])))) {
            tok_.kind = Token::Kind::Number;
            bool seen_e = false;
            while (i_ < src_.size()) {
                char d = src_[i_];
                if (std::isdigit(static_cast<unsigned char>(d)) || d == '.') {
                    tok_.text += d, bump();
                } else if ((d == 'e' || d == 'E') && !seen_e) {
                    seen_e = true;
                    tok_.text += d, bump();
                    if (i_ < src_.size() && (src_[i_] == '+' || src_[i_] == '-'))
                        tok_.text += src_[i_], bump();
                } else {
                    break;
                }
            }
            return;
        }
        if (c == '"') {
            tok_.kind = Token::Kind::String;
            bump();
            while (i_ < src_.size() && src_[i_] != '"') tok_.text += src_[i_], bump();
            if (i_ >= src_.size()) throw input_error("unterminated string literal");
            bump();
            return;
        }
        tok_.kind = Token::Kind::Sym;
        if (c == '-' && i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
            tok_.text = "->";
            bump();
            bump();
            return;
        }
        tok_.text = std::string(1, c);
        bump();
    }

    void bump() {
        if (src_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    const std::string &src_;
    size_t i_ = 0;
    size_t tok_start_ = 0;
    size_t prev_end_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

// --- constant angle expressions ---------------------------------------------

class ExprParser {
  public:
    explicit ExprParser(Lexer &lx) : lx_(lx) {}

    double parse() { return sum(); }

  private:
    double sum() {
        double v = product();
        for (;;) {
            if (lx_.at_sym("+")) {
                lx_.take();
                v += product();
            } else if (lx_.at_sym("-")) {
                lx_.take();
                v -= product();
            } else {
                return v;
            }
        }
    }

    double product() {
        double v = unary();
        for (;;) {
            if (lx_.at_sym("*")) {
                lx_.take();
                v *= unary();
            } else if (lx_.at_sym("/")) {
                lx_.take();
                double d = unary();
                if (d == 0.0) lx_.fail("division by zero in angle expression");
                v /= d;
            } else {
                return v;
            }
        }
    }

    double unary() {
        if (lx_.at_sym("-")) {
            lx_.take();
            return -unary();
        }
        if (lx_.at_sym("+")) {
            lx_.take();
            return unary();
        }
        return atom();
    }

    double atom() {
        const Token &t = lx_.peek();
        if (t.kind == Token::Kind::Number) {
            return std::strtod(lx_.take().text.c_str(), nullptr);
        }
        if (t.kind == Token::Kind::Sym && t.text == "(") {
            lx_.take();
            double v = sum();
            lx_.expect_sym(")");
            return v;
        }
        if (t.kind == Token::Kind::Ident) {
            std::string name = lx_.take().text;
            if (name == "pi") return std::numbers::pi;
            if (name == "tau") return 2 * std::numbers::pi;
            if (name == "euler") return std::numbers::e;
            // built-in math functions over constants
            static const std::pair<const char *, double (*)(double)> fns[] = {
                {"sin", std::sin},       {"cos", std::cos},       {"tan", std::tan},
                {"arcsin", std::asin},   {"arccos", std::acos},   {"arctan", std::atan},
                {"exp", std::exp},       {"ln", std::log},        {"sqrt", std::sqrt},
            };
            for (auto [fname, fn] : fns) {
                if (name != fname) continue;
                lx_.expect_sym("(");
                double arg = sum();
                lx_.expect_sym(")");
                double v = fn(arg);
                if (!std::isfinite(v)) lx_.fail("domain error in call to " + name);
                return v;
            }
            if (name == "pow") {
                lx_.expect_sym("(");
                double base = sum();
                lx_.expect_sym(",");
                double e = sum();
                lx_.expect_sym(")");
                double v = std::pow(base, e);
                if (!std::isfinite(v)) lx_.fail("domain error in call to pow");
                return v;
            }
            lx_.fail("unknown constant or function '" + name + "'");
        }
        lx_.fail("expected angle expression");
    }

    Lexer &lx_;
};

Angle parse_angle(Lexer &lx) {
    size_t from = lx.pos_of_current();
    double v = ExprParser(lx).parse();
    std::string text = lx.slice(from, lx.pos_before_current());
    if (is_plain_literal(text)) text.clear();  // already canonical-ish; keep if not literal
    return Angle(v, text);
}

// --- statements ---------------------------------------------------------------

struct Parser {
    Lexer lx;
    QasmProgram prog;

    explicit Parser(const std::string &src) : lx(src) {}

    QasmProgram run() {
        parse_header();
        while (lx.at_ident("include")) parse_include();
        while (lx.peek().kind != Token::Kind::End) parse_item();
        auto diags = validate(prog);
        if (!diags.empty()) {
            const auto &d = diags.front();
            throw input_error((d.stmt >= 0 ? "statement " + std::to_string(d.stmt) + ": " : "") +
                              d.message);
        }
        return std::move(prog);
    }

    void parse_header() {
        if (!lx.at_ident("OPENQASM")) lx.fail("expected OPENQASM version header");
        lx.take();
        const Token &t = lx.peek();
        if (t.kind != Token::Kind::Number) lx.fail("expected version number");
        std::string v = lx.take().text;
        if (v == "2.0")
            prog.dialect = Dialect::Qasm2;
        else if (v == "3" || v == "3.0")
            prog.dialect = Dialect::Qasm3;
        else
            lx.fail("unsupported OpenQASM version '" + v + "'");
        lx.expect_sym(";");
    }

    void parse_include() {
        lx.take();
        if (lx.peek().kind != Token::Kind::String) lx.fail("expected include file name");
        std::string name = lx.take().text;
        if (!include_known(name)) lx.fail("unknown include '" + name + "'");
        prog.includes.push_back(name);
        lx.expect_sym(";");
    }

    void parse_item() {
        if (prog.dialect == Dialect::Qasm3 &&
            (lx.at_ident("qubit") || lx.at_ident("bit"))) {
            parse_decl3();
        } else if (prog.dialect == Dialect::Qasm2 &&
                   (lx.at_ident("qreg") || lx.at_ident("creg"))) {
            parse_decl2();
        } else {
            parse_stmt();
        }
    }

    void parse_decl3() {
        Declaration d;
        d.quantum = lx.take().text == "qubit";
        if (lx.at_sym("[")) {
            lx.take();
            d.size = parse_int("register size");
            lx.expect_sym("]");
        }
        d.name = lx.expect_ident("register name");
        prog.decls.push_back(d);
        lx.expect_sym(";");
    }

    void parse_decl2() {
        Declaration d;
        d.quantum = lx.take().text == "qreg";
        d.name = lx.expect_ident("register name");
        lx.expect_sym("[");
        d.size = parse_int("register size");
        lx.expect_sym("]");
        prog.decls.push_back(d);
        lx.expect_sym(";");
    }

    int parse_int(const char *what) {
        bool neg = false;
        if (lx.at_sym("-")) {
            neg = true;
            lx.take();
        }
        if (lx.peek().kind != Token::Kind::Number) lx.fail(std::string("expected ") + what);
        std::string t = lx.take().text;
        if (t.find('.') != std::string::npos || t.find('e') != std::string::npos ||
            t.find('E') != std::string::npos)
            lx.fail(std::string(what) + " must be an integer");
        int v = std::atoi(t.c_str());
        return neg ? -v : v;
    }

    Operand parse_operand() {
        Operand op;
        op.reg = lx.expect_ident("register operand");
        if (lx.at_sym("[")) {
            lx.take();
            op.index = parse_int("operand index");
            lx.expect_sym("]");
        }
        return op;
    }

    void parse_stmt() {
        if (lx.at_ident("measure")) {  // 2.0 form: measure q -> c;
            if (prog.dialect != Dialect::Qasm2) lx.fail("use 'c = measure q;' in OpenQASM 3");
            lx.take();
            Statement s;
            s.kind = Statement::Kind::Measure;
            Operand src = parse_operand();
            lx.expect_sym("->");
            Operand dst = parse_operand();
            s.operands = {src, dst};
            prog.stmts.push_back(std::move(s));
            lx.expect_sym(";");
            return;
        }
        if (lx.at_ident("reset")) {
            lx.take();
            Statement s;
            s.kind = Statement::Kind::Reset;
            s.operands = {parse_operand()};
            prog.stmts.push_back(std::move(s));
            lx.expect_sym(";");
            return;
        }

        // modifiers
        std::vector<Modifier> mods;
        for (;;) {
            if (lx.at_ident("ctrl")) {
                lx.take();
                mods.push_back({ModKind::PosCtrl});
            } else if (lx.at_ident("negctrl")) {
                lx.take();
                mods.push_back({ModKind::NegCtrl});
            } else if (lx.at_ident("inv")) {
                lx.take();
                mods.push_back({ModKind::Inverse});
            } else if (lx.at_ident("pow")) {
                lx.take();
                lx.expect_sym("(");
                Modifier m{ModKind::Power};
                m.power = parse_int("power exponent (integers only)");
                lx.expect_sym(")");
                mods.push_back(m);
            } else {
                break;
            }
            lx.expect_sym("@");
        }
        if (!mods.empty() && prog.dialect == Dialect::Qasm2)
            lx.fail("gate modifiers are not valid in OpenQASM 2.0");

        std::string name = lx.expect_ident("gate or call name");

        // `dst = measure src;` / `dst = QMeas(src);` — a gate name is never
        // followed directly by '[' or '=', so this lookahead is unambiguous.
        if (lx.at_sym("[")) {
            lx.take();
            int idx = parse_int("operand index");
            lx.expect_sym("]");
            lx.expect_sym("=");
            parse_assign_rhs(Operand{name, idx}, mods);
            return;
        }
        // plain ident followed by '='?
        if (lx.at_sym("=")) {
            lx.take();
            parse_assign_rhs(Operand{name, std::nullopt}, mods);
            return;
        }

        if (is_call_name(name)) {
            if (prog.dialect == Dialect::Qasm2) lx.fail("calls are not valid in OpenQASM 2.0");
            if (!mods.empty()) lx.fail("modifiers cannot be applied to calls");
            if (name == "QMeas") lx.fail("QMeas needs a destination: 'c = QMeas(q);'");
            Statement s;
            s.kind = Statement::Kind::Call;
            s.call = name;
            lx.expect_sym("(");
            s.operands = {parse_operand()};
            lx.expect_sym(")");
            lx.expect_sym(";");
            prog.stmts.push_back(std::move(s));
            return;
        }

        auto entry = lookup_qasm_gate(name, prog.dialect);
        if (!entry) lx.fail("unknown gate '" + name + "'");
        std::string inc = include_for(name, prog.dialect);
        if (!inc.empty() &&
            std::find(prog.includes.begin(), prog.includes.end(), inc) == prog.includes.end())
            lx.fail("gate '" + name + "' requires include \"" + inc + "\"");

        Statement s;
        s.kind = Statement::Kind::Gate;
        s.gate = entry->kind;
        s.mods = std::move(mods);
        for (int i = 0; i < entry->implied_ctrls; ++i) s.mods.push_back({ModKind::PosCtrl});
        if (lx.at_sym("(")) {
            lx.take();
            if (!lx.at_sym(")")) {
                s.params.push_back(parse_angle(lx));
                while (lx.at_sym(",")) {
                    lx.take();
                    s.params.push_back(parse_angle(lx));
                }
            }
            lx.expect_sym(")");
        }
        if (!lx.at_sym(";")) {
            s.operands.push_back(parse_operand());
            while (lx.at_sym(",")) {
                lx.take();
                s.operands.push_back(parse_operand());
            }
        }
        lx.expect_sym(";");
        prog.stmts.push_back(std::move(s));
    }

    void parse_assign_rhs(Operand dst, const std::vector<Modifier> &mods) {
        if (!mods.empty()) lx.fail("modifiers cannot precede an assignment");
        if (prog.dialect != Dialect::Qasm3) lx.fail("assignment form requires OpenQASM 3");
        if (lx.at_ident("measure")) {
            lx.take();
            Statement s;
            s.kind = Statement::Kind::Measure;
            Operand src = parse_operand();
            s.operands = {src, dst};
            prog.stmts.push_back(std::move(s));
            lx.expect_sym(";");
            return;
        }
        std::string fn = lx.expect_ident("call name");
        if (fn != "QMeas") lx.fail("only QMeas returns a value");
        Statement s;
        s.kind = Statement::Kind::Call;
        s.call = fn;
        lx.expect_sym("(");
        Operand src = parse_operand();
        lx.expect_sym(")");
        lx.expect_sym(";");
        s.operands = {dst, src};
        prog.stmts.push_back(std::move(s));
    }
};

}  // namespace

QasmProgram parse_qasm(const std::string &text) { return Parser(text).run(); }

double parse_angle_expr(const std::string &text) {
    Lexer lx(text);
    double v = ExprParser(lx).parse();
    if (lx.peek().kind != Token::Kind::End) lx.fail("trailing input after expression");
    return v;
}

bool include_known(const std::string &name, const std::vector<std::string> &extra_dirs) {
    static const char *known[] = {"stdgates.inc", "qelib1.inc", "quipgates.inc",
                                  "quipfuncs.inc", "bkpgates.inc"};
    for (const char *k : known)
        if (name == k) return true;
    std::vector<std::string> dirs = extra_dirs;
    if (const char *env = std::getenv("LINGUA_INCLUDE_PATH")) {
        std::stringstream ss(env);
        std::string d;
        while (std::getline(ss, d, ':'))
            if (!d.empty()) dirs.push_back(d);
    }
    for (const auto &d : dirs)
        if (std::filesystem::exists(std::filesystem::path(d) / name)) return true;
    return false;
}

namespace {

std::string render_operand(const Operand &op) {
    return op.index ? op.reg + "[" + std::to_string(*op.index) + "]" : op.reg;
}

}  // namespace

std::string write_qasm(const QasmProgram &p) {
    std::ostringstream os;
    bool q2 = p.dialect == Dialect::Qasm2;
    os << (q2 ? "OPENQASM 2.0;\n" : "OPENQASM 3;\n");
    for (const auto &inc : p.includes) os << "include \"" << inc << "\";\n";
    for (const auto &c : p.comments) os << "// " << c << '\n';
    for (const auto &d : p.decls) {
        if (q2) {
            if (!d.size)
                throw input_error("scalar register '" + d.name +
                                  "' is not representable in OpenQASM 2.0");
            os << (d.quantum ? "qreg " : "creg ") << d.name << '[' << *d.size << "];\n";
        } else {
            os << (d.quantum ? "qubit" : "bit");
            if (d.size) os << '[' << *d.size << ']';
            os << ' ' << d.name << ";\n";
        }
    }
    for (const auto &s : p.stmts) {
        switch (s.kind) {
            case Statement::Kind::Gate: {
                // Absorb the innermost run of positive controls into a
                // first-class name when one exists (cx, ccx, cp, ...).
                int suffix = 0;
                for (auto it = s.mods.rbegin(); it != s.mods.rend(); ++it) {
                    if (it->kind != ModKind::PosCtrl) break;
                    ++suffix;
                }
                std::string name;
                int absorbed = 0;
                if (!qasm_spelling(s.gate, suffix, p.dialect, name, absorbed))
                    throw input_error(std::string("gate '") + kind_id(s.gate) +
                                      "' has no spelling in this dialect");
                int explicit_mods = static_cast<int>(s.mods.size()) - absorbed;
                if (q2 && explicit_mods > 0)
                    throw input_error("modifiers are not representable in OpenQASM 2.0");
                if (q2 && s.gate == GateKind::GPhase)
                    throw input_error("gphase is not representable in OpenQASM 2.0");
                for (int i = 0; i < explicit_mods; ++i) {
                    const Modifier &m = s.mods[i];
                    switch (m.kind) {
                        case ModKind::PosCtrl: os << "ctrl @ "; break;
                        case ModKind::NegCtrl: os << "negctrl @ "; break;
                        case ModKind::Inverse: os << "inv @ "; break;
                        case ModKind::Power: os << "pow(" << m.power << ") @ "; break;
                    }
                }
                os << name;
                if (!s.params.empty()) {
                    os << '(';
                    for (size_t i = 0; i < s.params.size(); ++i)
                        os << (i ? ", " : "") << s.params[i].render();
                    os << ')';
                }
                for (size_t i = 0; i < s.operands.size(); ++i)
                    os << (i ? ", " : " ") << render_operand(s.operands[i]);
                os << ";\n";
                break;
            }
            case Statement::Kind::Measure:
                if (q2)
                    os << "measure " << render_operand(s.operands[0]) << " -> "
                       << render_operand(s.operands[1]) << ";\n";
                else
                    os << render_operand(s.operands[1]) << " = measure "
                       << render_operand(s.operands[0]) << ";\n";
                break;
            case Statement::Kind::Reset:
                os << "reset " << render_operand(s.operands[0]) << ";\n";
                break;
            case Statement::Kind::Call:
                if (q2) throw input_error("calls are not representable in OpenQASM 2.0");
                if (s.call == "QMeas")
                    os << render_operand(s.operands[0]) << " = QMeas("
                       << render_operand(s.operands[1]) << ");\n";
                else
                    os << s.call << '(' << render_operand(s.operands[0]) << ");\n";
                break;
        }
    }
    return os.str();
}

std::vector<std::string> compute_includes(const QasmProgram &p) {
    std::set<std::string> incs;
    for (const auto &s : p.stmts) {
        if (s.kind == Statement::Kind::Call) {
            if (p.dialect == Dialect::Qasm3) incs.insert("quipfuncs.inc");
            continue;
        }
        if (s.kind != Statement::Kind::Gate) continue;
        int suffix = 0;
        for (auto it = s.mods.rbegin(); it != s.mods.rend(); ++it) {
            if (it->kind != ModKind::PosCtrl) break;
            ++suffix;
        }
        std::string name;
        int absorbed = 0;
        if (!qasm_spelling(s.gate, suffix, p.dialect, name, absorbed)) continue;
        std::string inc = include_for(name, p.dialect);
        if (!inc.empty()) incs.insert(inc);
    }
    // Baseline gate library even for empty programs.
    incs.insert(p.dialect == Dialect::Qasm3 ? "stdgates.inc" : "qelib1.inc");
    std::vector<std::string> out(incs.begin(), incs.end());
    // canonical order as used by normalize()
    QasmProgram tmp;
    tmp.includes = out;
    return normalize(tmp).includes;
}

}  // namespace lq
