#pragma once

#include <set>
#include <string>

#include "lq/ir.hpp"

namespace lq {

// Control elimination works on Quipper circuits; the OpenQASM overload is a
// convenience wrapper that round-trips through the translators. After the
// pass every gate satisfies ctrl_census_ok: at most one positive control on
// X/Y/Z/H/Swap, at most two controls on a global phase, none elsewhere, and
// no negative controls anywhere.
QuipCircuit elim_ctrls(const QuipCircuit &c);
QasmProgram elim_ctrls(const QasmProgram &p);
bool ctrl_census_ok(const QuipGate &g);

// Modifier and call elimination (OpenQASM). Each pass is pure and
// idempotent: elim_invs leaves no inv @, elim_pows no pow(k) @, elim_funs
// no wire-management calls and only literal angles.
QasmProgram elim_invs(const QasmProgram &p);
QasmProgram elim_pows(const QasmProgram &p);
QasmProgram elim_funs(const QasmProgram &p);

// Collapses all quantum registers into one array q[N] and all classical
// bits into c[M] (declaration order, then index); the old-name mapping is
// emitted as comments.
QasmProgram reg_merge(const QasmProgram &p);

// Dialect conversion to OpenQASM 2.0. Requires the elim passes to have run
// (throws input_error on residual inv/pow/negctrl modifiers or calls).
QasmProgram to_qasm2(const QasmProgram &p);

// Restricts a register-merged 2.0 program to the whitelisted gate names.
// Throws input_error when a gate cannot be reduced to the whitelist.
QasmProgram to_lsc(const QasmProgram &p, const std::set<std::string> &whitelist);

// Parses a whitelist config: one name per line, '#' comments.
std::set<std::string> parse_lsc_whitelist(const std::string &cfg_text);

}  // namespace lq
