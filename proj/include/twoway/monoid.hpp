#pragma once

// The behavior monoid of a directed state set.
//
// Behaviors compose through a three-layer reachability graph: layers -1, 0
// stand for the boundaries of a cell carrying f, layers 0, +1 for a cell
// carrying g. f * g relates q to r when the layered graph has a path from
// q's entry vertex to r's exit vertex. The identity relation is the unit.
// A monoid is aperiodic when every element's power sequence stabilizes to a
// fixed point (x^{n+1} = x^n for some n).

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "twoway/behavior.hpp"
#include "twoway/core.hpp"

namespace twoway {

/// Diagram composition of two behaviors over the same directed state set.
Behavior compose_behaviors(const DirectedStateSet&, const Behavior& f,
                           const Behavior& g);

/// Output-forgetting projection of one transition relation. A symbol with no
/// declared transitions projects to the empty relation. Throws AlphabetError
/// for symbols outside the input alphabet and the markers.
Behavior projected_behavior(const TwoWayMachine&, Symbol);

/// Fold of projected_behavior over the word (tape symbols allowed).
Behavior behavior_of_word(const TwoWayMachine&, const Word&);

/// The projections of all input letters (markers excluded), by symbol.
std::map<Symbol, Behavior> letter_behaviors(const TwoWayMachine&);

struct AperiodicityReport {
    bool aperiodic = false;
    // Least n with x^{n+1} = x^n for every element; meaningful when aperiodic.
    int index = 0;
    std::optional<Behavior> offending;  // an element with a longer power cycle
};

struct BehaviorMonoid {
    std::vector<Behavior> elements;  // insertion order; unit first
    std::map<Symbol, Behavior> generators;
    Behavior unit;
    AperiodicityReport aperiodicity_report;
};

/// Breadth-first closure of {unit} and the generators under composition.
/// Element order is deterministic: seeds in symbol order, then products in
/// discovery order. Throws CapExceeded past `cap` elements.
BehaviorMonoid generate_monoid(const DirectedStateSet&,
                               const std::map<Symbol, Behavior>& generators,
                               std::size_t cap = 1'000'000);

/// Power-stabilization test over an explicit element list. Powers are
/// computed with compose_behaviors; the list need not be closed.
AperiodicityReport aperiodicity(const DirectedStateSet&,
                                const std::vector<Behavior>& elements);
AperiodicityReport aperiodicity(const DirectedStateSet&, const BehaviorMonoid&);

/// All planar partial functions on the state set, in a fixed enumeration
/// order. Throws StateSpaceTooLarge when |Q| > max_states and MissingOrder
/// without an order.
std::vector<Behavior> enumerate_planar_deterministic(const DirectedStateSet&,
                                                     int max_states = 6);

struct SubmonoidReport {
    std::size_t carrier_size = 0;
    bool unit_in_carrier = false;
    bool closed = false;
    std::optional<std::pair<Behavior, Behavior>> closure_counterexample;
    AperiodicityReport aperiodicity;
    bool ok() const {
        return unit_in_carrier && closed && aperiodicity.aperiodic;
    }
};

/// Verifies that the planar deterministic behaviors form an aperiodic
/// submonoid: unit present, closed under composition, aperiodic. With
/// deterministic_only = false the carrier is all planar relations instead
/// (closure is expected to fail there; |Q| <= 4 enforced).
SubmonoidReport verify_tl_submonoid(const DirectedStateSet&,
                                    bool deterministic_only = true,
                                    int max_states = 6);

/// f split by head-turn type, with the padded left/right factors.
/// left_factor = into_turns + identity on states without an into-turn;
/// right_factor = out_turns + identity on states without an out-turn.
/// The identity f = left_factor * through * right_factor holds whenever f
/// is a partial function (a state with two pairs, one of them a turn, can
/// lose the other pair to the missing identity pad); it is checked on every
/// deterministic call (std::logic_error on violation). Nondeterministic f
/// still gets the partition and the padded factors, unchecked.
struct TurnFactorization {
    Behavior into_turns;   // forward source, backward target
    Behavior out_turns;    // backward source, forward target
    Behavior through;      // everything else
    Behavior left_factor;
    Behavior right_factor;
};

TurnFactorization factor_turns(const DirectedStateSet&, const Behavior& f);

}  // namespace twoway
