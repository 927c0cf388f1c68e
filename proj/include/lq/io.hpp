#pragma once

#include <string>
#include <vector>

#include "lq/ir.hpp"

namespace lq {

// OpenQASM reader/writer. The dialect is taken from the version header
// (parse) or from the program itself (write). Both throw input_error with
// a line:col position on bad input, and write_qasm throws on dialect
// violations (e.g. a modifier in a 2.0 program).
QasmProgram parse_qasm(const std::string &text);
std::string write_qasm(const QasmProgram &p);

// Constant-folds an OpenQASM 3 angle expression (literals, pi/tau/euler,
// + - * /, built-in math functions over constants).
double parse_angle_expr(const std::string &text);

// Quipper ASCII reader/writer.
QuipCircuit parse_quip(const std::string &text);
std::string write_quip(const QuipCircuit &c);

// Include files needed by the gate/call names `p` uses, in canonical order.
std::vector<std::string> compute_includes(const QasmProgram &p);

// Include-name recognition: the five table-driven names, plus any file
// found on LINGUA_INCLUDE_PATH or in `extra_dirs`.
bool include_known(const std::string &name, const std::vector<std::string> &extra_dirs = {});

}  // namespace lq
