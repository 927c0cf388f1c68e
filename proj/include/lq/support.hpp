#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lq {

// User-facing problem with the input (bad syntax, dialect violation,
// DFA rejection, ...). Maps to exit code 1.
struct input_error : std::runtime_error {
    explicit input_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Broken internal invariant (catalog hole, oracle mismatch, ...).
// Maps to exit code 2.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string &msg) : std::logic_error(msg) {}
};

// Shortest decimal rendering that round-trips through double.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// An angle is a folded double plus the optional source spelling; the
// spelling is kept verbatim so parse(write(P)) is the identity, and is
// cleared by normalize/elim_funs (canonical float rendering).
struct Angle {
    double value = 0.0;
    std::string text;  // empty = render value canonically

    Angle() = default;
    Angle(double v) : value(v) {}
    Angle(double v, std::string t) : value(v), text(std::move(t)) {}

    std::string render() const { return text.empty() ? format_double(value) : text; }
};

inline bool is_plain_literal(const std::string &s) {
    if (s.empty()) return false;
    const char *b = s.data();
    const char *e = b + s.size();
    if (*b == '-') ++b;
    double v;
    auto res = std::from_chars(b, e, v);
    return res.ec == std::errc() && res.ptr == e;
}

}  // namespace lq
