#pragma once

// Shared example machines used across the test files.

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "twoway/behavior.hpp"
#include "twoway/constructions.hpp"
#include "twoway/core.hpp"

namespace fixtures {

using twoway::Behavior;
using twoway::DirectedStateSet;
using twoway::MachineKind;
using twoway::MonotoneRegisterTransducer;
using twoway::RegisterUpdate;
using twoway::RhsItem;
using twoway::SequentialTransducer;
using twoway::State;
using twoway::Symbol;
using twoway::TwoWayMachine;
using twoway::Word;

struct StateSpec {
    std::string name;
    int direction;
};

inline TwoWayMachine build_machine(
    MachineKind kind, const std::string& input, const std::string& output,
    const std::vector<StateSpec>& state_specs, State initial,
    const std::vector<State>& finals,
    const std::vector<std::tuple<Symbol, State, Word, State>>& table) {
    TwoWayMachine m;
    m.kind = kind;
    m.input_alphabet = input;
    m.output_alphabet = output;
    for (const StateSpec& s : state_specs) {
        m.states.names.push_back(s.name);
        m.states.direction.push_back(s.direction);
    }
    std::vector<State> natural(state_specs.size());
    for (State q = 0; q < static_cast<State>(natural.size()); ++q)
        natural[q] = q;
    m.states.order = natural;
    m.initial = initial;
    m.finals = finals;
    for (const auto& [sym, from, out, to] : table)
        m.add_transition(sym, from, out, to);
    m.normalize();
    m.validate();
    return m;
}

/// Directed state set with natural order and generated names.
inline DirectedStateSet space(const std::vector<int>& directions) {
    DirectedStateSet s;
    for (std::size_t q = 0; q < directions.size(); ++q) {
        s.names.push_back("q" + std::to_string(q));
        s.direction.push_back(directions[q]);
    }
    std::vector<State> natural(directions.size());
    for (State q = 0; q < static_cast<State>(natural.size()); ++q)
        natural[q] = q;
    s.order = natural;
    return s;
}

inline Behavior rel(int n, const std::vector<std::pair<int, int>>& pairs) {
    Behavior b(n);
    for (auto [q, r] : pairs)
        b.set(q, r);
    return b;
}

/// Four-state automaton over {a,b,c} accepting the words whose first c is
/// preceded, two cells earlier, by a b: state 0 scans right for the first c,
/// 1 and 2 walk two cells back, a b there launches 3, which sails to the
/// right end. Deterministic, not reversible, planar in the listed order.
inline TwoWayMachine scanner_2dfa() {
    return build_machine(
        MachineKind::Automaton, "abc", "",
        {{"0", +1}, {"1", -1}, {"2", -1}, {"3", +1}}, 0, {3},
        {
            {'a', 0, "", 0}, {'a', 1, "", 2}, {'a', 3, "", 3},
            {'b', 0, "", 0}, {'b', 1, "", 2}, {'b', 2, "", 3}, {'b', 3, "", 3},
            {'c', 0, "", 1}, {'c', 1, "", 2}, {'c', 3, "", 3},
            {'^', 0, "", 0}, {'^', 3, "", 3},
            {'$', 3, "", 3},
        });
}

/// Two forward states; the letter a swaps them. No state order makes the
/// swap planar, and its behavior monoid is the (non-aperiodic) group {id, swap}.
inline TwoWayMachine swap_machine() {
    return build_machine(MachineKind::Automaton, "ab", "",
                         {{"0", +1}, {"1", +1}}, 0, {0},
                         {
                             {'a', 0, "", 1}, {'a', 1, "", 0},
                             {'b', 0, "", 0}, {'b', 1, "", 1},
                             {'^', 0, "", 0},
                             {'$', 0, "", 0}, {'$', 1, "", 1},
                         });
}

/// Bounces between the first letter and the left marker forever.
inline TwoWayMachine looping_machine() {
    return build_machine(MachineKind::Automaton, "a", "",
                         {{"p", +1}, {"r", -1}}, 0, {0},
                         {
                             {'^', 0, "", 0}, {'^', 1, "", 0},
                             {'a', 0, "", 1},
                         });
}

/// One-state transducer computing the identity function on its alphabet.
inline TwoWayMachine identity_copier(const std::string& alphabet) {
    std::vector<std::tuple<Symbol, State, Word, State>> table;
    table.emplace_back('^', 0, "", 0);
    table.emplace_back('$', 0, "", 0);
    for (Symbol a : alphabet)
        table.emplace_back(a, 0, Word(1, a), 0);
    return build_machine(MachineKind::Transducer, alphabet, alphabet,
                         {{"0", +1}}, 0, {0}, table);
}

/// Two-state aperiodic sequential transducer over {a,b,c}: a resets to
/// state 1, b sets state 2, c keeps the state. Outputs: a|a c|a from 1,
/// b|c from 1, a|c b|bb c|bb from 2; final words "ab" and "bbb".
inline SequentialTransducer flipflop_seq() {
    SequentialTransducer seq;
    seq.state_names = {"1", "2"};
    seq.input_alphabet = "abc";
    seq.output_alphabet = "abc";
    seq.initial = 0;
    seq.transitions['a'] = {{0, "a"}, {0, "c"}};
    seq.transitions['b'] = {{1, "c"}, {1, "bb"}};
    seq.transitions['c'] = {{0, "a"}, {1, "bb"}};
    seq.final_output = {"ab", "bbb"};
    return seq;
}

/// Second two-state aperiodic sequential transducer (used in composition
/// chains): a is constant-to-2, b fixes the state, c is constant-to-1.
inline SequentialTransducer const_blend_seq() {
    SequentialTransducer seq;
    seq.state_names = {"1", "2"};
    seq.input_alphabet = "abc";
    seq.output_alphabet = "abc";
    seq.initial = 0;
    seq.transitions['a'] = {{1, "ba"}, {1, "b"}};
    seq.transitions['b'] = {{0, "a"}, {1, "ab"}};
    seq.transitions['c'] = {{0, ""}, {0, "c"}};
    seq.final_output = {"c", "a"};
    return seq;
}

inline RhsItem chunk(const Word& w) { return RhsItem{w, -1}; }
inline RhsItem reg(int r) { return RhsItem{Word(), r}; }

/// Two-register transducer over {a,b,c}: a wraps X in a..b and Y in b..a,
/// b resets X to d and folds the old X into Y, c moves Y into X and clears Y.
inline MonotoneRegisterTransducer wrap_reset_mrt() {
    MonotoneRegisterTransducer mrt;
    mrt.register_names = {"X", "Y"};
    mrt.input_alphabet = "abc";
    mrt.output_alphabet = "abcde";
    mrt.updates['a'] =
        RegisterUpdate{{{chunk("a"), reg(0), chunk("b")},   // X := a X b
                        {chunk("b"), reg(1), chunk("a")}}}; // Y := b Y a
    mrt.updates['b'] =
        RegisterUpdate{{{chunk("d")},                        // X := d
                        {reg(0), chunk("e"), reg(1)}}};      // Y := X e Y
    mrt.updates['c'] =
        RegisterUpdate{{{reg(1), chunk("c")},                // X := Y c
                        {}}};                                // Y := empty
    return mrt;
}

/// A pair of planar reversible transducers built around one interesting
/// letter: the first emits "a" crossing the letter forward and "bc" crossing
/// it backward; the second crosses a emitting x / y, turns left at b
/// emitting z and turns right at c emitting w. Their composite's transitions
/// on that letter exercise all four composition quadrants.
inline std::pair<TwoWayMachine, TwoWayMachine> segment_pair() {
    TwoWayMachine first = build_machine(
        MachineKind::Transducer, "a", "abc",
        {{"1", +1}, {"2", -1}, {"3", -1}}, 0, {0},
        {
            {'^', 0, "", 0},
            {'a', 0, "a", 0}, {'a', 1, "bc", 2},
            {'$', 0, "", 1},
        });
    TwoWayMachine second = build_machine(
        MachineKind::Transducer, "abc", "wxyz",
        {{"q", +1}, {"r", -1}}, 0, {0},
        {
            {'^', 0, "", 0},
            {'a', 0, "x", 0}, {'a', 1, "y", 1},
            {'b', 0, "z", 1},
            {'c', 1, "w", 0},
            {'$', 0, "", 1},
        });
    return {first, second};
}

}  // namespace fixtures
