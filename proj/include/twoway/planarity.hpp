#pragma once

// Planarity of transitions and machines.
//
// The transition profile of a relation f on a directed state set draws one
// vertex (q, -1) on the left and one vertex (q, +1) on the right boundary of
// a tape cell, and an edge (q, -rho(q)) -> (r, rho(r)) for every pair
// (q, r) in f: a head arrives on the side it reads toward and leaves on the
// side it moves toward. The extended order places the 2|Q| vertices on one
// line, right-side vertices above all left-side ones, ascending by state on
// the right and descending on the left. f is planar when no two profile
// edges interleave in that order, i.e. the chords can be drawn without
// crossing.

#include <optional>
#include <utility>
#include <vector>

#include "twoway/behavior.hpp"
#include "twoway/core.hpp"

namespace twoway {

struct ProfileVertex {
    State state;
    int side;  // -1 left boundary, +1 right boundary
    friend bool operator==(const ProfileVertex&, const ProfileVertex&) = default;
};

struct ProfileEdge {
    ProfileVertex src;
    ProfileVertex dst;
    std::optional<Word> label;  // output word, when built from a transducer
    friend bool operator==(const ProfileEdge&, const ProfileEdge&) = default;
};

struct TransitionProfile {
    int state_count = 0;
    std::vector<ProfileEdge> edges;
};

/// Profile of a bare relation (unlabeled edges).
TransitionProfile transition_profile(const DirectedStateSet&, const Behavior&);
/// Profile of one transition list, with output words as edge labels.
TransitionProfile transition_profile(const DirectedStateSet&,
                                     const std::vector<Transition>&);

/// The linear placement of the 2|Q| profile vertices.
struct ExtendedOrder {
    std::vector<int> position;               // indexed by 2*q + (side > 0)
    std::vector<ProfileVertex> by_position;  // inverse map

    int position_of(const ProfileVertex& v) const {
        return position[2 * v.state + (v.side > 0 ? 1 : 0)];
    }
};

/// Throws MissingOrder when the state set declares no order.
ExtendedOrder extend_order(const DirectedStateSet&);

/// A crossing: four vertices u < r < v < s in the extended order with edges
/// joining {u, v} and {r, s}.
struct PlanarityWitness {
    ProfileVertex u, r, v, s;
    ProfileEdge edge1;  // joins {u, v}
    ProfileEdge edge2;  // joins {r, s}
};

/// Empty result: planar. Otherwise the lexicographically least witness
/// (by positions of u, r, v, s in the extended order).
std::optional<PlanarityWitness> is_planar_transition(const DirectedStateSet&,
                                                     const Behavior&);

enum class LetterScope { InputOnly, All };

struct MachinePlanarityWitness {
    Symbol symbol;
    PlanarityWitness witness;
};

/// Checks every transition relation of the machine; letters in sorted order,
/// then the left marker, then the right marker. Empty result: planar.
std::optional<MachinePlanarityWitness> is_planar_machine(
    const TwoWayMachine&, LetterScope scope = LetterScope::All);

/// Searches all |Q|! state orders (with prefix pruning) for one that makes
/// every checked relation planar. Returns the first order found, trying
/// states in index order at each position. Throws StateSpaceTooLarge when
/// |Q| > cap.
std::optional<std::vector<State>> find_planar_order(
    const TwoWayMachine&, LetterScope scope = LetterScope::All, int cap = 10);

/// Independent check: places the profile vertices on a circle in extended
/// order and tests each pair of chords for strict interleaving. True when no
/// two chords cross.
bool geometric_planarity_oracle(const DirectedStateSet&, const Behavior&);

}  // namespace twoway
