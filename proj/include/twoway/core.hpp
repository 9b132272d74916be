#pragma once

// Two-way finite-state machines over marker-delimited tapes: directed state
// sets, configurations, and the deterministic step/run semantics.
//
// A word w is processed on the tape ^w$ ("^" left marker, "$" right marker).
// Every state carries a fixed reading direction: a forward state reads the
// first symbol to its right, a backward state the last symbol to its left.
// The head never moves past the markers except through the final accepting
// crossing of "$".

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twoway/errors.hpp"

namespace twoway {

using State = int;
using Symbol = char;
using Word = std::string;

/// Tape delimiters. Reserved: never members of an input or output alphabet.
inline constexpr Symbol kLeftMark = '^';
inline constexpr Symbol kRightMark = '$';

inline bool is_marker(Symbol s) { return s == kLeftMark || s == kRightMark; }

/// The tape contents for an input word.
inline Word tape_of(const Word& input) {
    return kLeftMark + input + kRightMark;
}

/// Finite state set where every state moves the head in a fixed direction.
/// The optional total order on the states is what planarity is judged
/// against; it plays no role in the run semantics.
struct DirectedStateSet {
    std::vector<std::string> names;
    std::vector<int> direction;               // +1 forward, -1 backward
    std::optional<std::vector<State>> order;   // states listed least first

    int size() const { return static_cast<int>(names.size()); }
    bool forward(State q) const { return direction.at(q) > 0; }

    /// ranks()[q] = position of q in the order (0 = least).
    /// Throws MissingOrder when no order is declared.
    std::vector<int> ranks() const;

    void validate() const;

    friend bool operator==(const DirectedStateSet&,
                           const DirectedStateSet&) = default;
};

enum class MachineKind { Automaton, Transducer };

struct Transition {
    State from;
    Word out;
    State to;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// A two-way automaton or transducer. An automaton is the special case
/// whose transitions all emit the empty word.
struct TwoWayMachine {
    MachineKind kind = MachineKind::Transducer;
    std::string input_alphabet;    // sorted, distinct, marker-free
    std::string output_alphabet;   // sorted, distinct; empty for automata
    DirectedStateSet states;
    State initial = 0;
    std::vector<State> finals;     // sorted, distinct
    // Transition table keyed by tape symbol (input letters and markers).
    // Each list is kept sorted and duplicate-free.
    std::map<Symbol, std::vector<Transition>> delta;

    int state_count() const { return states.size(); }
    bool is_final(State q) const;
    /// The transition list for a symbol, or nullptr when none is declared.
    const std::vector<Transition>* transitions(Symbol a) const;
    void add_transition(Symbol a, State from, Word out, State to);
    /// Sorts and deduplicates the transition lists and the final-state set.
    void normalize();
    void validate() const;

    friend bool operator==(const TwoWayMachine&, const TwoWayMachine&) = default;
};

/// A configuration (left, state, right): the tape split around the head.
/// Forward states read the first symbol of `right`, backward states the
/// last symbol of `left`.
struct Configuration {
    Word left;
    State state;
    Word right;
    friend bool operator==(const Configuration&, const Configuration&) = default;
};

enum class RunStatus { Accepted, RejectedStuck, RejectedNonfinal, Looping };

struct RunResult {
    RunStatus status = RunStatus::RejectedStuck;
    Word output;  // concatenated emissions; meaningful when accepted
    // Optional trace: (configuration before step i, word emitted by step i),
    // with the halting configuration appended last (empty emission).
    std::vector<std::pair<Configuration, Word>> trace;
    std::size_t steps = 0;
};

struct StepResult {
    Configuration config;
    Word emitted;
};

/// Dense per-symbol lookup from source state to its unique transition.
/// Construction fails with NondeterministicMachine if any state has two
/// distinct transitions on the same symbol.
class DeterministicIndex {
  public:
    explicit DeterministicIndex(const TwoWayMachine& m);
    const Transition* find(Symbol a, State q) const;

  private:
    std::map<Symbol, std::vector<int>> slots_;
    const TwoWayMachine* machine_;
};

/// One move of the machine. Empty result: no transition applies (the run is
/// stuck). Throws NondeterministicMachine if two distinct transitions apply.
std::optional<StepResult> step(const TwoWayMachine&, const Configuration&);

/// Runs the machine on ^input$ from the initial state at the left end.
/// Halts as accepted/rejected on reaching (^input$, q, eps), as stuck when no
/// transition applies, and as looping when the step count exceeds
/// |Q| * (|input| + 3), which pigeonholes a repeated configuration.
RunResult run(const TwoWayMachine&, const Word& input, bool want_trace = false);

/// Every (state, symbol) pair has at most one outgoing transition.
bool is_deterministic(const TwoWayMachine&);

/// Deterministic, and every (state, symbol) pair also has at most one
/// incoming transition: the machine computes a partial injection per symbol.
bool is_reversible(const TwoWayMachine&);

/// Forgets the output annotations. The result accepts exactly the domain of
/// the transducer.
TwoWayMachine domain_automaton(const TwoWayMachine&);

/// True when `c` occurs in the sorted alphabet string.
bool alphabet_contains(const std::string& alphabet, Symbol c);

/// Sorts and deduplicates alphabet characters; rejects markers.
std::string canonical_alphabet(const std::string& symbols);

}  // namespace twoway
