#include "doctest.h"
#include "lq/harness.hpp"
#include "lq/io.hpp"

using namespace lq;

TEST_CASE("generators are deterministic and always valid") {
    GenOptions q3;
    GenOptions q2;
    q2.dialect = Dialect::Qasm2;
    for (uint64_t s = 0; s < 50; ++s) {
        QasmProgram a = gen_qasm(s, q3), b = gen_qasm(s, q3);
        CHECK(fingerprint(a) == fingerprint(b));
        CHECK(validate(a).empty());
        CHECK(validate(gen_qasm(s, q2)).empty());
        QuipCircuit c = gen_quip(s), d = gen_quip(s);
        CHECK(fingerprint(c) == fingerprint(d));
        CHECK(validate(c).empty());
        CHECK(!run_dfa(c));
    }
}

TEST_CASE("fault injection produces a minimized counterexample") {
    // A deliberately broken "law": programs must not contain an inverse
    // modifier. The shrinker should cut the counterexample down to the
    // single offending statement.
    auto no_inv = [](const QasmProgram &p) {
        for (const auto &s : p.stmts)
            for (const auto &m : s.mods)
                if (m.kind == ModKind::Inverse) return false;
        return true;
    };
    GenOptions opt;
    opt.max_gates = 32;
    LawResult r = check_qasm_property("mutation", 7, 50, opt, no_inv);
    CHECK(r.failures > 0);
    REQUIRE(!r.counterexample.empty());
    QasmProgram shrunk = parse_qasm(r.counterexample);
    CHECK(shrunk.stmts.size() == 1);  // gate deletion worked
    CHECK(!no_inv(shrunk));           // and the law still fails
}

TEST_CASE("law suite smoke run") {
    LawReport rep = check_laws(11, 20);
    std::string text = format_report(rep);
    INFO(text);
    for (const auto &row : rep.rows) {
        INFO(row.law, ": ", row.counterexample);
        CHECK(row.failures == 0);
    }
    CHECK(rep.ok());
    // Determinism of the report.
    CHECK(format_report(check_laws(11, 20)) == text);
}
