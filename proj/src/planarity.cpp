#include "twoway/planarity.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace twoway {

namespace {

ProfileVertex edge_source(const DirectedStateSet& s, State q) {
    return ProfileVertex{q, s.forward(q) ? -1 : +1};  // arrives reading side
}

ProfileVertex edge_target(const DirectedStateSet& s, State r) {
    return ProfileVertex{r, s.forward(r) ? +1 : -1};  // leaves moving side
}

}  // namespace

TransitionProfile transition_profile(const DirectedStateSet& s,
                                     const Behavior& f) {
    TransitionProfile profile;
    profile.state_count = s.size();
    for (auto [q, r] : f.pairs())
        profile.edges.push_back(
            ProfileEdge{edge_source(s, q), edge_target(s, r), std::nullopt});
    return profile;
}

TransitionProfile transition_profile(const DirectedStateSet& s,
                                     const std::vector<Transition>& list) {
    TransitionProfile profile;
    profile.state_count = s.size();
    for (const Transition& t : list) {
        if (t.from < 0 || t.from >= s.size() || t.to < 0 || t.to >= s.size())
            throw UnknownState("transition references a state out of range");
        profile.edges.push_back(
            ProfileEdge{edge_source(s, t.from), edge_target(s, t.to), t.out});
    }
    return profile;
}

ExtendedOrder extend_order(const DirectedStateSet& s) {
    std::vector<int> rank = s.ranks();  // throws MissingOrder
    const int n = s.size();
    ExtendedOrder ext;
    ext.position.assign(2 * static_cast<std::size_t>(n), 0);
    ext.by_position.assign(2 * static_cast<std::size_t>(n),
                           ProfileVertex{0, 0});
    for (State q = 0; q < n; ++q) {
        int left = (n - 1) - rank[q];  // left side descends with the order
        int right = n + rank[q];       // right side ascends above it
        ext.position[2 * q + 0] = left;
        ext.position[2 * q + 1] = right;
        ext.by_position[left] = ProfileVertex{q, -1};
        ext.by_position[right] = ProfileVertex{q, +1};
    }
    return ext;
}

namespace {

struct Chord {
    int lo, hi;          // endpoint positions, lo < hi
    const ProfileEdge* edge;
};

std::vector<Chord> chords_of(const TransitionProfile& profile,
                             const ExtendedOrder& ext) {
    std::vector<Chord> chords;
    chords.reserve(profile.edges.size());
    for (const ProfileEdge& e : profile.edges) {
        int a = ext.position_of(e.src);
        int b = ext.position_of(e.dst);
        if (a == b)
            continue;  // degenerate; cannot take part in a crossing
        chords.push_back(Chord{std::min(a, b), std::max(a, b), &e});
    }
    return chords;
}

}  // namespace

std::optional<PlanarityWitness> is_planar_transition(const DirectedStateSet& s,
                                                     const Behavior& f) {
    TransitionProfile profile = transition_profile(s, f);
    ExtendedOrder ext = extend_order(s);
    std::vector<Chord> chords = chords_of(profile, ext);

    // A crossing is a pair of chords whose endpoint positions strictly
    // interleave: u < r < v < s with {u, v} one chord and {r, s} the other.
    std::optional<std::array<int, 4>> best;
    const ProfileEdge* best_first = nullptr;
    const ProfileEdge* best_second = nullptr;
    for (std::size_t i = 0; i < chords.size(); ++i) {
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            const Chord* a = &chords[i];
            const Chord* b = &chords[j];
            if (a->lo > b->lo)
                std::swap(a, b);
            if (!(a->lo < b->lo && b->lo < a->hi && a->hi < b->hi))
                continue;
            std::array<int, 4> key{a->lo, b->lo, a->hi, b->hi};
            if (!best || key < *best) {
                best = key;
                best_first = a->edge;
                best_second = b->edge;
            }
        }
    }
    if (!best)
        return std::nullopt;
    PlanarityWitness w;
    w.u = ext.by_position[(*best)[0]];
    w.r = ext.by_position[(*best)[1]];
    w.v = ext.by_position[(*best)[2]];
    w.s = ext.by_position[(*best)[3]];
    w.edge1 = *best_first;
    w.edge2 = *best_second;
    return w;
}

namespace {

// Projection of one transition list to a relation on the states.
Behavior relation_of(const TwoWayMachine& m, Symbol sym) {
    Behavior b(m.state_count());
    if (const auto* list = m.transitions(sym))
        for (const Transition& t : *list)
            b.set(t.from, t.to);
    return b;
}

// The symbols a planarity check walks through, in reporting order.
std::vector<Symbol> checked_symbols(const TwoWayMachine& m, LetterScope scope) {
    std::vector<Symbol> symbols(m.input_alphabet.begin(),
                                m.input_alphabet.end());
    if (scope == LetterScope::All) {
        symbols.push_back(kLeftMark);
        symbols.push_back(kRightMark);
    }
    return symbols;
}

}  // namespace

std::optional<MachinePlanarityWitness> is_planar_machine(const TwoWayMachine& m,
                                                         LetterScope scope) {
    for (Symbol sym : checked_symbols(m, scope))
        if (auto w = is_planar_transition(m.states, relation_of(m, sym)))
            return MachinePlanarityWitness{sym, *w};
    return std::nullopt;
}

namespace {

// Restriction of a relation to a chosen, reordered subset of the states.
// placed[i] = original state at position i of the candidate order.
bool prefix_planar(const DirectedStateSet& states, const Behavior& relation,
                   const std::vector<State>& placed) {
    DirectedStateSet sub;
    std::vector<int> pos(states.size(), -1);
    for (int i = 0; i < static_cast<int>(placed.size()); ++i) {
        pos[placed[i]] = i;
        sub.names.push_back(states.names[placed[i]]);
        sub.direction.push_back(states.direction[placed[i]]);
    }
    std::vector<State> natural(placed.size());
    for (std::size_t i = 0; i < placed.size(); ++i)
        natural[i] = static_cast<State>(i);
    sub.order = natural;

    Behavior restricted(static_cast<int>(placed.size()));
    for (auto [q, r] : relation.pairs())
        if (pos[q] >= 0 && pos[r] >= 0)
            restricted.set(pos[q], pos[r]);
    return !is_planar_transition(sub, restricted).has_value();
}

bool search_order(const TwoWayMachine& m, const std::vector<Behavior>& relations,
                  std::vector<State>& placed, std::vector<bool>& used) {
    if (placed.size() == m.states.names.size())
        return true;
    for (State q = 0; q < m.state_count(); ++q) {
        if (used[q])
            continue;
        placed.push_back(q);
        used[q] = true;
        bool viable = true;
        for (const Behavior& rel : relations) {
            if (!prefix_planar(m.states, rel, placed)) {
                viable = false;
                break;
            }
        }
        if (viable && search_order(m, relations, placed, used))
            return true;
        placed.pop_back();
        used[q] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<State>> find_planar_order(const TwoWayMachine& m,
                                                    LetterScope scope, int cap) {
    if (m.state_count() > cap)
        throw StateSpaceTooLarge("order search over " +
                                 std::to_string(m.state_count()) +
                                 " states exceeds the cap of " +
                                 std::to_string(cap));
    std::set<Behavior> distinct;
    for (Symbol sym : checked_symbols(m, scope))
        distinct.insert(relation_of(m, sym));
    std::vector<Behavior> relations(distinct.begin(), distinct.end());

    std::vector<State> placed;
    std::vector<bool> used(m.state_count(), false);
    if (search_order(m, relations, placed, used))
        return placed;
    return std::nullopt;
}

bool geometric_planarity_oracle(const DirectedStateSet& s, const Behavior& f) {
    // Walk the circle once: with all vertices placed on a circle in extended
    // order, two chords cross exactly when one — and only one — endpoint of
    // the second lies on the open arc cut off by the first.
    ExtendedOrder ext = extend_order(s);
    std::vector<std::pair<int, int>> arcs;
    for (auto [q, r] : f.pairs()) {
        int a = ext.position_of(ProfileVertex{q, s.forward(q) ? -1 : +1});
        int b = ext.position_of(ProfileVertex{r, s.forward(r) ? +1 : -1});
        arcs.emplace_back(a, b);
    }
    auto strictly_inside = [](int x, int lo, int hi) {
        return lo < x && x < hi;
    };
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        int lo = std::min(arcs[i].first, arcs[i].second);
        int hi = std::max(arcs[i].first, arcs[i].second);
        if (lo == hi)
            continue;
        for (std::size_t j = 0; j < arcs.size(); ++j) {
            if (i == j)
                continue;
            auto [x, y] = arcs[j];
            // Shared endpoints never cross.
            if (x == lo || x == hi || y == lo || y == hi)
                continue;
            if (strictly_inside(x, lo, hi) != strictly_inside(y, lo, hi))
                return false;
        }
    }
    return true;
}

}  // namespace twoway
