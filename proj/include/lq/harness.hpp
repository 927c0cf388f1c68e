#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lq/ir.hpp"

namespace lq {

// Program generators. Deterministic per seed; every generated program
// passes validate, and generated Quipper circuits are DFA-valid by
// construction. The measurement-free mode (all wires eager quantum inputs,
// unitaries only) is the subclass on which the matrix oracle defines the
// semantics used by the preservation checks.
struct GenOptions {
    int max_wires = 6;
    int max_gates = 64;
    Dialect dialect = Dialect::Qasm3;
    bool measurement_free = false;
    bool allow_mods = true;    // dialect-3 modifier stacks
    bool allow_calls = true;   // dialect-3 wire-management calls
    int max_extra_ctrls = 2;   // explicit control modifiers per gate
};

QasmProgram gen_qasm(uint64_t seed, const GenOptions &opt = {});
QuipCircuit gen_quip(uint64_t seed, const GenOptions &opt = {});

// One law's outcome. On failure the first counterexample is minimized by
// gate deletion, then wire deletion, and serialized.
struct LawResult {
    std::string law;
    int samples = 0;
    int failures = 0;
    std::string counterexample;
};

struct LawReport {
    uint64_t seed = 0;
    std::vector<LawResult> rows;
    bool ok() const;
};

// Generic shrinking property drivers (exposed for fault-injection tests).
// `holds` returns true when the law is satisfied; throwing counts as a
// failure on the original sample but aborts a shrink candidate.
LawResult check_qasm_property(const std::string &law, uint64_t seed, int samples,
                              const GenOptions &opt,
                              const std::function<bool(const QasmProgram &)> &holds);
LawResult check_quip_property(const std::string &law, uint64_t seed, int samples,
                              const GenOptions &opt,
                              const std::function<bool(const QuipCircuit &)> &holds);

// Runs the named laws (empty = all) over freshly generated corpora:
//   retraction-qasm2 retraction-qasm3 retraction-quip
//   inversion idempotence preservation fixpoints
LawReport check_laws(uint64_t seed, int samples,
                     const std::vector<std::string> &laws = {});

std::string format_report(const LawReport &r);

}  // namespace lq
