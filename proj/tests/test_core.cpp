#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "twoway/core.hpp"
#include "twoway/errors.hpp"

using namespace twoway;

TEST_CASE("tape helpers") {
    CHECK(tape_of("abc") == "^abc$");
    CHECK(tape_of("") == "^$");
    CHECK(is_marker('^'));
    CHECK(is_marker('$'));
    CHECK_FALSE(is_marker('a'));
}

TEST_CASE("canonical_alphabet sorts, dedups, and rejects markers") {
    CHECK(canonical_alphabet("cba") == "abc");
    CHECK(canonical_alphabet("aabba") == "ab");
    CHECK(canonical_alphabet("") == "");
    CHECK_THROWS_AS(canonical_alphabet("a^"), ValidationError);
    CHECK(alphabet_contains("abc", 'b'));
    CHECK_FALSE(alphabet_contains("abc", 'z'));
}

TEST_CASE("directed state set ranks follow the declared order") {
    DirectedStateSet s = fixtures::space({+1, -1, +1});
    s.order = std::vector<State>{2, 0, 1};
    auto rank = s.ranks();
    CHECK(rank[2] == 0);
    CHECK(rank[0] == 1);
    CHECK(rank[1] == 2);

    s.order.reset();
    CHECK_THROWS_AS(s.ranks(), MissingOrder);

    s.order = std::vector<State>{0, 0, 1};
    CHECK_THROWS_AS(s.validate(), ValidationError);
}

TEST_CASE("machine validation rejects malformed machines") {
    TwoWayMachine m = fixtures::scanner_2dfa();

    SUBCASE("marker in the input alphabet") {
        m.input_alphabet = "^a";
        CHECK_THROWS_AS(m.validate(), ValidationError);
    }
    SUBCASE("backward initial state") {
        m.initial = 1;
        CHECK_THROWS_AS(m.validate(), ValidationError);
    }
    SUBCASE("automaton transitions must stay silent") {
        m.add_transition('a', 0, "x", 0);
        CHECK_THROWS_AS(m.validate(), ValidationError);
    }
    SUBCASE("transition on an undeclared symbol") {
        m.add_transition('z', 0, "", 0);
        CHECK_THROWS_AS(m.validate(), AlphabetError);
    }
    SUBCASE("output over an undeclared symbol") {
        TwoWayMachine t = fixtures::identity_copier("ab");
        t.add_transition('a', 0, "z", 0);
        CHECK_THROWS_AS(t.validate(), AlphabetError);
    }
    SUBCASE("state out of range") {
        m.add_transition('a', 7, "", 0);
        CHECK_THROWS_AS(m.validate(), UnknownState);
    }
}

TEST_CASE("normalize sorts and deduplicates") {
    TwoWayMachine m = fixtures::scanner_2dfa();
    m.add_transition('a', 0, "", 0);  // duplicate
    m.finals.push_back(3);
    m.normalize();
    CHECK(m.delta['a'].size() == 3);
    CHECK(m.finals == std::vector<State>{3});
}

TEST_CASE("step moves the head per the four direction cases") {
    TwoWayMachine rev = reverse_transducer("ab");
    // States: 1 forward, 2 backward, 3 forward.

    SUBCASE("forward crossing consumes one symbol to the left") {
        auto r = step(rev, {"^", 0, "ab$"});
        REQUIRE(r.has_value());
        CHECK(r->config == Configuration{"^a", 0, "b$"});
        CHECK(r->emitted == "");
    }
    SUBCASE("forward turn keeps the split") {
        auto r = step(rev, {"^ab", 0, "$"});
        REQUIRE(r.has_value());
        CHECK(r->config == Configuration{"^ab", 1, "$"});
    }
    SUBCASE("backward crossing emits and moves left") {
        auto r = step(rev, {"^ab", 1, "$"});
        REQUIRE(r.has_value());
        CHECK(r->config == Configuration{"^a", 1, "b$"});
        CHECK(r->emitted == "b");
    }
    SUBCASE("backward turn keeps the split") {
        auto r = step(rev, {"^", 1, "ab$"});
        REQUIRE(r.has_value());
        CHECK(r->config == Configuration{"^", 2, "ab$"});
    }
    SUBCASE("no transition applies") {
        TwoWayMachine scan = fixtures::scanner_2dfa();
        CHECK_FALSE(step(scan, {"^", 1, "c$"}).has_value());  // 1 reads ^
    }
    SUBCASE("backward state with an empty left part is stuck") {
        CHECK_FALSE(step(rev, {"", 1, "^ab$"}).has_value());
    }
}

TEST_CASE("run accepts and rejects per the language") {
    TwoWayMachine m = fixtures::scanner_2dfa();
    CHECK(run(m, "bac").status == RunStatus::Accepted);
    CHECK(run(m, "bbcab").status == RunStatus::Accepted);
    CHECK(run(m, "abc").status == RunStatus::RejectedStuck);  // a two before c
    CHECK(run(m, "c").status == RunStatus::RejectedStuck);
    CHECK(run(m, "ab").status == RunStatus::RejectedStuck);  // no c at all
    CHECK(run(m, "").status == RunStatus::RejectedStuck);
}

TEST_CASE("run rejects in a non-final state") {
    TwoWayMachine m = fixtures::build_machine(
        MachineKind::Automaton, "a", "", {{"0", +1}}, 0, {},
        {{'^', 0, "", 0}, {'a', 0, "", 0}, {'$', 0, "", 0}});
    RunResult r = run(m, "aa");
    CHECK(r.status == RunStatus::RejectedNonfinal);
}

TEST_CASE("run flags loops within the pigeonhole bound") {
    TwoWayMachine m = fixtures::looping_machine();
    RunResult r = run(m, "a");
    CHECK(r.status == RunStatus::Looping);
    CHECK(r.steps == static_cast<std::size_t>(m.state_count()) * 4 + 1);
}

TEST_CASE("run collects output only on acceptance") {
    TwoWayMachine rev = reverse_transducer("ab");
    RunResult r = run(rev, "ab");
    CHECK(r.status == RunStatus::Accepted);
    CHECK(r.output == "ba");

    TwoWayMachine loop = fixtures::looping_machine();
    CHECK(run(loop, "a").output.empty());
}

TEST_CASE("run records a trace ending in the halt configuration") {
    TwoWayMachine rev = reverse_transducer("ab");
    RunResult r = run(rev, "ab", true);
    REQUIRE(r.status == RunStatus::Accepted);
    REQUIRE_FALSE(r.trace.empty());
    CHECK(r.trace.front().first == Configuration{"", 0, "^ab$"});
    CHECK(r.trace.back().first == Configuration{"^ab$", 2, ""});
    CHECK(r.trace.size() == r.steps + 1);

    Word collected;
    for (const auto& [cfg, emitted] : r.trace)
        collected += emitted;
    CHECK(collected == r.output);
}

TEST_CASE("run rejects words outside the alphabet") {
    CHECK_THROWS_AS(run(fixtures::scanner_2dfa(), "xyz"), AlphabetError);
}

TEST_CASE("determinism and reversibility checks") {
    TwoWayMachine scan = fixtures::scanner_2dfa();
    CHECK(is_deterministic(scan));
    CHECK_FALSE(is_reversible(scan));  // b sends both 2 and 3 to 3

    CHECK(is_reversible(reverse_transducer("abc")));
    CHECK(is_reversible(fixtures::identity_copier("ab")));

    TwoWayMachine nd = scan;
    nd.add_transition('a', 0, "", 3);
    nd.normalize();
    CHECK_FALSE(is_deterministic(nd));
    CHECK_FALSE(is_reversible(nd));
    CHECK_THROWS_AS(run(nd, "a"), NondeterministicMachine);
    CHECK_THROWS_AS(step(nd, {"^", 0, "a$"}), NondeterministicMachine);
}

TEST_CASE("deterministic index finds the unique transition") {
    TwoWayMachine scan = fixtures::scanner_2dfa();
    DeterministicIndex index(scan);
    const Transition* t = index.find('c', 0);
    REQUIRE(t != nullptr);
    CHECK(t->to == 1);
    CHECK(index.find('$', 0) == nullptr);
    CHECK(index.find('z', 0) == nullptr);
}

TEST_CASE("domain automaton forgets outputs and keeps the language") {
    TwoWayMachine rev = reverse_transducer("ab");
    TwoWayMachine dom = domain_automaton(rev);
    CHECK(dom.kind == MachineKind::Automaton);
    CHECK(dom.output_alphabet.empty());
    for (const auto& [sym, list] : dom.delta)
        for (const Transition& t : list)
            CHECK(t.out.empty());
    CHECK(run(dom, "ab").status == RunStatus::Accepted);
    CHECK(run(dom, "").status == RunStatus::Accepted);
}
