#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "twoway/constructions.hpp"
#include "twoway/io.hpp"

using namespace twoway;

namespace {

// Line/column of the ParseError thrown by parse_machine, or (0,0).
std::pair<int, int> parse_failure(const std::string& text) {
    try {
        parse_machine(text);
    } catch (const ParseError& e) {
        return {e.line, e.column};
    }
    return {0, 0};
}

}  // namespace

TEST_CASE("two-way automaton round-trip") {
    TwoWayMachine m = fixtures::scanner_2dfa();
    std::string text = serialize(m, DocKind::TwoWayDfa);
    MachineDocument doc = parse_machine(text);
    CHECK(doc.kind == DocKind::TwoWayDfa);
    CHECK(doc.two_way() == m);
    CHECK(serialize(doc) == text);
}

TEST_CASE("two-way transducer round-trip") {
    TwoWayMachine rev = reverse_transducer("ab");
    std::string text = serialize(rev, DocKind::TwoWayRftClaim);
    MachineDocument doc = parse_machine(text);
    CHECK(doc.kind == DocKind::TwoWayRftClaim);
    CHECK(doc.two_way() == rev);

    TwoWayMachine ff = flipflop_to_planar(fixtures::flipflop_seq());
    MachineDocument doc2 = parse_machine(serialize(ff, DocKind::TwoWayDft));
    CHECK(doc2.kind == DocKind::TwoWayDft);
    CHECK(doc2.two_way() == ff);
}

TEST_CASE("sequential transducer round-trip") {
    SequentialTransducer seq = fixtures::flipflop_seq();
    MachineDocument doc = parse_machine(serialize(seq));
    CHECK(doc.kind == DocKind::Sequential);
    CHECK(doc.sequential() == seq);
}

TEST_CASE("register transducer round-trip") {
    MonotoneRegisterTransducer mrt = fixtures::wrap_reset_mrt();
    MachineDocument doc = parse_machine(serialize(mrt));
    CHECK(doc.kind == DocKind::Mrt);
    CHECK(doc.mrt() == mrt);
}

TEST_CASE("comments and blank lines are ignored") {
    MachineDocument doc = parse_machine(
        "# a one-state acceptor\n"
        "machine 2dfa\n"
        "\n"
        "input a   # the alphabet\n"
        "states go:>\n"
        "initial go\n"
        "final go\n"
        "t go ^ -> go\n"
        "t go a -> go\n"
        "t go $ -> go\n");
    CHECK(doc.two_way().state_count() == 1);
    CHECK(run(doc.two_way(), "aa").status == RunStatus::Accepted);
}

TEST_CASE("syntax errors carry line and column") {
    // Bad direction suffix on line 3: the offending token starts at column 12.
    CHECK(parse_failure("machine 2dfa\n"
                        "input a\n"
                        "states p:> q:x\n"
                        "initial p\n") == std::pair<int, int>{3, 12});

    // Wrong arrow.
    CHECK(parse_failure("machine 2dfa\n"
                        "input a\n"
                        "states p:>\n"
                        "initial p\n"
                        "t p a => p\n") == std::pair<int, int>{5, 7});

    // Truncated transition: the error points just past the last token.
    CHECK(parse_failure("machine 2dfa\n"
                        "input a\n"
                        "states p:>\n"
                        "initial p\n"
                        "t p a ->\n") == std::pair<int, int>{5, 9});

    // Trailing junk.
    CHECK(parse_failure("machine 2dfa\n"
                        "input a\n"
                        "states p:>\n"
                        "initial p q\n") == std::pair<int, int>{4, 11});

    // Unquoted output word.
    CHECK(parse_failure("machine 2dft\n"
                        "input a\n"
                        "output a\n"
                        "states p:>\n"
                        "initial p\n"
                        "t p a -> p : aa\n") == std::pair<int, int>{6, 14});

    // Duplicate section.
    CHECK(parse_failure("machine 2dfa\n"
                        "input a\n"
                        "input a\n"
                        "states p:>\n"
                        "initial p\n") == std::pair<int, int>{3, 1});

    // Unknown section.
    CHECK(parse_failure("machine 2dfa\n"
                        "input a\n"
                        "states p:>\n"
                        "initial p\n"
                        "tape p\n") == std::pair<int, int>{5, 1});

    // Automata carry no outputs.
    CHECK(parse_failure("machine 2dfa\n"
                        "input a\n"
                        "output a\n"
                        "states p:>\n"
                        "initial p\n") == std::pair<int, int>{3, 1});
    CHECK(parse_failure("machine 2dfa\n"
                        "input a\n"
                        "states p:>\n"
                        "initial p\n"
                        "t p a -> p : \"\"\n") == std::pair<int, int>{5, 12});

    // Transducers require outputs on every transition.
    CHECK(parse_failure("machine 2dft\n"
                        "input a\n"
                        "output a\n"
                        "states p:>\n"
                        "initial p\n"
                        "t p a -> p\n") == std::pair<int, int>{6, 10});

    // Alphabets must not repeat symbols.
    CHECK(parse_failure("machine 2dfa\n"
                        "input a b a\n"
                        "states p:>\n"
                        "initial p\n") == std::pair<int, int>{2, 1});

    // Markers are reserved.
    CHECK(parse_failure("machine 2dfa\n"
                        "input a ^\n"
                        "states p:>\n"
                        "initial p\n") == std::pair<int, int>{2, 9});

    // Unknown machine kind.
    CHECK(parse_failure("machine 3dfa\n") == std::pair<int, int>{1, 9});

    // Empty document.
    CHECK(parse_failure("\n# nothing here\n") == std::pair<int, int>{1, 1});
}

TEST_CASE("structural validation failures") {
    CHECK_THROWS_AS(parse_machine("machine 2dfa\n"
                                  "states p:>\n"
                                  "initial p\n"),
                    ValidationError);  // missing input
    CHECK_THROWS_AS(parse_machine("machine 2dfa\n"
                                  "input a\n"
                                  "initial p\n"),
                    ParseError);  // initial before states
    CHECK_THROWS_AS(parse_machine("machine 2dfa\n"
                                  "input a\n"
                                  "states p:>\n"),
                    ValidationError);  // missing initial
    CHECK_THROWS_AS(parse_machine("machine 2dft\n"
                                  "input a\n"
                                  "states p:>\n"
                                  "initial p\n"),
                    ValidationError);  // missing output
    CHECK_THROWS_AS(parse_machine("machine 2dfa\n"
                                  "input a\n"
                                  "states p:>\n"
                                  "initial p\n"
                                  "final q\n"),
                    ValidationError);  // unknown final state
    CHECK_THROWS_AS(parse_machine("machine 2dfa\n"
                                  "input a\n"
                                  "states p:>\n"
                                  "order p q\n"
                                  "initial p\n"),
                    ValidationError);  // unknown state in order
    CHECK_THROWS_AS(parse_machine("machine 2dfa\n"
                                  "input a\n"
                                  "states p:<\n"
                                  "initial p\n"),
                    ValidationError);  // backward initial state
}

TEST_CASE("sequential dialect") {
    MachineDocument doc = parse_machine("machine seq\n"
                                        "input a b\n"
                                        "output c\n"
                                        "states 1 2\n"
                                        "initial 1\n"
                                        "final 2 : \"cc\"\n"
                                        "t 1 a -> 2 : \"c\"\n"
                                        "t 2 a -> 2 : \"\"\n"
                                        "t 1 b -> 1 : \"\"\n"
                                        "t 2 b -> 1 : \"c\"\n");
    const SequentialTransducer& seq = doc.sequential();
    CHECK(seq.state_names == std::vector<std::string>{"1", "2"});
    CHECK(seq.final_output == std::vector<Word>{"", "cc"});  // default ""
    CHECK(seq_run(seq, "a") == "ccc");

    // Direction suffixes are a two-way concept.
    CHECK(parse_failure("machine seq\n"
                        "input a\n"
                        "output a\n"
                        "states 1:>\n"
                        "initial 1\n"
                        "t 1 a -> 1 : \"\"\n") == std::pair<int, int>{4, 8});

    // The transition table must be total.
    CHECK_THROWS_AS(parse_machine("machine seq\n"
                                  "input a\n"
                                  "output a\n"
                                  "states 1 2\n"
                                  "initial 1\n"
                                  "t 1 a -> 2 : \"\"\n"),
                    ValidationError);

    // One transition per (state, letter).
    CHECK_THROWS_AS(parse_machine("machine seq\n"
                                  "input a\n"
                                  "output a\n"
                                  "states 1\n"
                                  "initial 1\n"
                                  "t 1 a -> 1 : \"\"\n"
                                  "t 1 a -> 1 : \"a\"\n"),
                    ParseError);
}

TEST_CASE("register dialect") {
    MachineDocument doc = parse_machine("machine mrt\n"
                                        "input a\n"
                                        "output x y\n"
                                        "registers X Y\n"
                                        "u a X := \"x\" Y\n"
                                        "u a Y := \"y\"\n");
    const MonotoneRegisterTransducer& mrt = doc.mrt();
    CHECK(mrt.register_names == std::vector<std::string>{"X", "Y"});
    CHECK(mrt_apply(mrt, "aa") == "xy");

    // Every (letter, register) pair needs an update.
    CHECK_THROWS_AS(parse_machine("machine mrt\n"
                                  "input a\n"
                                  "output x\n"
                                  "registers X Y\n"
                                  "u a X := \"x\"\n"),
                    ValidationError);

    // Non-monotone updates are rejected at parse time.
    CHECK_THROWS_AS(parse_machine("machine mrt\n"
                                  "input a\n"
                                  "output x\n"
                                  "registers X Y\n"
                                  "u a X := Y\n"
                                  "u a Y := X\n"),
                    ValidationError);

    // Unknown register on the right-hand side.
    CHECK(parse_failure("machine mrt\n"
                        "input a\n"
                        "output x\n"
                        "registers X\n"
                        "u a X := Z\n") == std::pair<int, int>{5, 10});
}

TEST_CASE("profile diagrams") {
    TwoWayMachine rev = reverse_transducer("ab");
    std::string dot = emit_dot_profile(rev, 'a');
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
    CHECK(dot.find("label=\"a\"") != std::string::npos);  // emitted letter
    CHECK(emit_dot_profile(rev, 'a') == dot);  // byte-stable
}

TEST_CASE("run diagrams") {
    TwoWayMachine rev = reverse_transducer("ab");
    std::string dot = emit_dot_run(rev, "ab");
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("red") != std::string::npos);  // executed steps highlighted

    TwoWayMachine nd = fixtures::scanner_2dfa();
    nd.add_transition('a', 0, "", 1);  // now two choices for (0, a)
    nd.normalize();
    CHECK_THROWS_AS(emit_dot_run(nd, "ab"), NondeterministicMachine);
}
