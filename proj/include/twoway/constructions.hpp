#pragma once

// Machine constructions: composition of planar reversible transducers, the
// flip-flop translation of two-state aperiodic sequential transducers, the
// translation of monotone register transducers, and the reverse transducer.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twoway/core.hpp"

namespace twoway {

/// A one-way deterministic transducer with total transition function and a
/// final-output word per state.
struct SequentialTransducer {
    std::vector<std::string> state_names;
    std::string input_alphabet;   // sorted, distinct, marker-free
    std::string output_alphabet;  // sorted, distinct, marker-free
    State initial = 0;
    // transitions[a][q] = (target, emitted word); one entry per state.
    std::map<Symbol, std::vector<std::pair<State, Word>>> transitions;
    std::vector<Word> final_output;  // one word per state

    int state_count() const { return static_cast<int>(state_names.size()); }
    void validate() const;

    friend bool operator==(const SequentialTransducer&,
                           const SequentialTransducer&) = default;
};

/// Runs the sequential transducer; defined on every word over its alphabet.
Word seq_run(const SequentialTransducer&, const Word& input);

/// True when the transition monoid (closure of the per-letter state maps
/// under composition) contains no nontrivial permutation. For two states
/// this says: no letter acts as the transposition.
bool is_aperiodic_sequential(const SequentialTransducer&);

/// Renames the two states so the initial one comes first (canonical names
/// "1", "2"). Throws WrongStateCount unless there are exactly two states.
SequentialTransducer normalize_two_state(const SequentialTransducer&);

/// Translates a two-state aperiodic sequential transducer into a five-state
/// planar reversible two-way transducer computing the same function.
/// States, in planar order: q1 fwd, r1 bwd, s fwd, r2 bwd, q2 fwd. Each
/// letter contributes either an identity column (letter fixes both states)
/// or a constant column (letter maps both states to k): q-states turn into
/// their r-states, s crosses into q_k, and r_k turns back into s.
/// Throws WrongStateCount / NotAperiodic.
TwoWayMachine flipflop_to_planar(const SequentialTransducer&);

/// One right-hand-side item: either a literal chunk or a register.
struct RhsItem {
    Word chunk;     // used when reg < 0
    int reg = -1;   // register index, or -1 for a chunk
    bool is_register() const { return reg >= 0; }
    friend bool operator==(const RhsItem&, const RhsItem&) = default;
};

/// The register assignment performed by one input letter:
/// assignment[r] is the right-hand side for register r.
struct RegisterUpdate {
    std::vector<std::vector<RhsItem>> assignment;
    friend bool operator==(const RegisterUpdate&, const RegisterUpdate&) = default;
};

/// A register transducer whose updates are copyless and monotone: in the
/// concatenation rhs(r1) ... rhs(rn) (registers in order) each register
/// occurs at most once, and the occurrences appear in register order.
/// The first register is the output register.
struct MonotoneRegisterTransducer {
    std::vector<std::string> register_names;
    std::string input_alphabet;
    std::string output_alphabet;
    std::map<Symbol, RegisterUpdate> updates;  // one per input letter

    int register_count() const {
        return static_cast<int>(register_names.size());
    }
    void validate() const;

    friend bool operator==(const MonotoneRegisterTransducer&,
                           const MonotoneRegisterTransducer&) = default;
};

/// Explanation of a copyless/monotone violation, or empty when the update
/// is fine.
std::optional<std::string> copyless_monotone_violation(const RegisterUpdate&,
                                                       int register_count);
bool is_copyless_monotone(const RegisterUpdate&, int register_count);

/// Runs the register transducer: all registers start empty, each letter
/// applies its update simultaneously, the output register's final value is
/// the result. Defined on every word over the input alphabet.
Word mrt_apply(const MonotoneRegisterTransducer&, const Word& input);

/// Translates a monotone register transducer into a planar reversible
/// two-way transducer with states {start} + {(r, -1), (r, +1) per register}:
/// (r, -1) rewinds to where register r started accumulating, (r, +1) replays
/// the accumulation forward, emitting r's value. Throws NotCopylessMonotone.
TwoWayMachine mrt_to_planar(const MonotoneRegisterTransducer&);

/// The three-state planar reversible transducer computing the mirror image
/// of its input: cross to the right end, walk back emitting each letter,
/// turn at the left marker and cross silently to accept.
TwoWayMachine reverse_transducer(const std::string& alphabet);

/// Composition of planar reversible transducers: runs `second` over the
/// output segments of `first`, cell by cell. States are pairs (q, r) in a
/// direction-twisted lexicographic order: first's order outermost, second's
/// order inside it, reversed within the band of each backward first-machine
/// state. The direction of (q, r) is the product of directions. Requires
/// both machines reversible and planar
/// with declared orders, and first's output alphabet equal to second's input
/// alphabet. The result computes second(first(w)) and is reversible and
/// planar (both rechecked; NotReversible / NotPlanar on violation).
TwoWayMachine compose_transducers(const TwoWayMachine& first,
                                  const TwoWayMachine& second);

}  // namespace twoway
