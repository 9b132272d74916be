#include "twoway/monoid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "twoway/planarity.hpp"

namespace twoway {

Behavior compose_behaviors(const DirectedStateSet& s, const Behavior& f,
                           const Behavior& g) {
    const int n = s.size();
    if (f.states() != n || g.states() != n)
        throw std::invalid_argument("behavior dimension mismatch");

    // Layered reachability graph on Q x {-1, 0, +1}: the f-cell spans layers
    // -1..0, the g-cell layers 0..+1. Vertex id = (layer + 1) * n + state.
    auto vertex = [n](State q, int layer) { return (layer + 1) * n + q; };
    std::vector<std::vector<int>> adj(3 * static_cast<std::size_t>(n));
    for (auto [q, r] : f.pairs()) {
        int src_layer = s.forward(q) ? -1 : 0;  // arrives on its reading side
        int dst_layer = s.forward(r) ? 0 : -1;  // leaves on its moving side
        adj[vertex(q, src_layer)].push_back(vertex(r, dst_layer));
    }
    for (auto [q, r] : g.pairs()) {
        int src_layer = s.forward(q) ? 0 : 1;
        int dst_layer = s.forward(r) ? 1 : 0;
        adj[vertex(q, src_layer)].push_back(vertex(r, dst_layer));
    }

    Behavior result(n);
    std::vector<char> reached(adj.size());
    std::vector<int> stack;
    for (State q = 0; q < n; ++q) {
        std::fill(reached.begin(), reached.end(), 0);
        int entry = vertex(q, s.forward(q) ? -1 : +1);
        stack.assign(1, entry);
        reached[entry] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!reached[w]) {
                    reached[w] = 1;
                    stack.push_back(w);
                }
        }
        for (State r = 0; r < n; ++r)
            if (reached[vertex(r, s.forward(r) ? +1 : -1)])
                result.set(q, r);
    }
    return result;
}

Behavior projected_behavior(const TwoWayMachine& m, Symbol sym) {
    if (!is_marker(sym) && !alphabet_contains(m.input_alphabet, sym))
        throw AlphabetError(std::string("symbol '") + sym +
                            "' is not in the input alphabet");
    Behavior b(m.state_count());
    if (const auto* list = m.transitions(sym))
        for (const Transition& t : *list)
            b.set(t.from, t.to);
    return b;
}

Behavior behavior_of_word(const TwoWayMachine& m, const Word& word) {
    Behavior acc = Behavior::identity(m.state_count());
    for (Symbol sym : word)
        acc = compose_behaviors(m.states, acc, projected_behavior(m, sym));
    return acc;
}

std::map<Symbol, Behavior> letter_behaviors(const TwoWayMachine& m) {
    std::map<Symbol, Behavior> gens;
    for (Symbol a : m.input_alphabet)
        gens.emplace(a, projected_behavior(m, a));
    return gens;
}

BehaviorMonoid generate_monoid(const DirectedStateSet& s,
                               const std::map<Symbol, Behavior>& generators,
                               std::size_t cap) {
    BehaviorMonoid monoid;
    monoid.unit = Behavior::identity(s.size());
    monoid.generators = generators;

    std::unordered_set<Behavior, BehaviorHash> seen;
    std::deque<Behavior> queue;
    auto admit = [&](const Behavior& b) {
        if (!seen.insert(b).second)
            return;
        if (seen.size() > cap)
            throw CapExceeded("behavior monoid exceeds " + std::to_string(cap) +
                              " elements");
        monoid.elements.push_back(b);
        queue.push_back(b);
    };

    admit(monoid.unit);
    for (const auto& [sym, g] : generators) {
        if (g.states() != s.size())
            throw std::invalid_argument("generator dimension mismatch");
        admit(g);
    }
    while (!queue.empty()) {
        Behavior x = std::move(queue.front());
        queue.pop_front();
        for (const auto& [sym, g] : generators)
            admit(compose_behaviors(s, x, g));
    }
    monoid.aperiodicity_report = aperiodicity(s, monoid.elements);
    return monoid;
}

AperiodicityReport aperiodicity(const DirectedStateSet& s,
                                const std::vector<Behavior>& elements) {
    AperiodicityReport report;
    report.aperiodic = true;
    for (const Behavior& x : elements) {
        // Walk x^0, x^1, ... until two consecutive powers agree (threshold)
        // or some earlier power repeats (a cycle longer than one).
        std::unordered_set<Behavior, BehaviorHash> visited;
        Behavior power = Behavior::identity(s.size());
        visited.insert(power);
        int exponent = 0;
        while (true) {
            Behavior next = compose_behaviors(s, power, x);
            if (next == power) {
                report.index = std::max(report.index, exponent);
                break;
            }
            if (!visited.insert(next).second) {
                report.aperiodic = false;
                report.offending = x;
                report.index = 0;
                return report;
            }
            power = std::move(next);
            ++exponent;
        }
    }
    return report;
}

AperiodicityReport aperiodicity(const DirectedStateSet& s,
                                const BehaviorMonoid& monoid) {
    return aperiodicity(s, monoid.elements);
}

std::vector<Behavior> enumerate_planar_deterministic(const DirectedStateSet& s,
                                                     int max_states) {
    const int n = s.size();
    if (n > max_states)
        throw StateSpaceTooLarge("enumeration over " + std::to_string(n) +
                                 " states exceeds the cap of " +
                                 std::to_string(max_states));
    if (!s.order)
        throw MissingOrder("planar enumeration needs a state order");

    // Every partial function as a mixed-radix counter: digit q in
    // [0, n] picks the image of q, n meaning undefined.
    std::vector<Behavior> result;
    std::vector<int> image(n, 0);
    while (true) {
        Behavior b(n);
        for (State q = 0; q < n; ++q)
            if (image[q] < n)
                b.set(q, image[q]);
        if (!is_planar_transition(s, b))
            result.push_back(b);
        int digit = n - 1;
        while (digit >= 0 && image[digit] == n)
            image[digit--] = 0;
        if (digit < 0)
            break;
        ++image[digit];
    }
    return result;
}

SubmonoidReport verify_tl_submonoid(const DirectedStateSet& s,
                                    bool deterministic_only, int max_states) {
    const int n = s.size();
    SubmonoidReport report;

    std::vector<Behavior> carrier;
    if (deterministic_only) {
        carrier = enumerate_planar_deterministic(s, max_states);
    } else {
        if (n > 4)
            throw StateSpaceTooLarge(
                "relation enumeration is limited to 4 states");
        // All planar relations: every subset of Q x Q, filtered.
        std::size_t cells = static_cast<std::size_t>(n) * n;
        for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
            Behavior b(n);
            for (std::size_t bit = 0; bit < cells; ++bit)
                if (mask & (std::size_t{1} << bit))
                    b.set(static_cast<State>(bit / n),
                          static_cast<State>(bit % n));
            if (!is_planar_transition(s, b))
                carrier.push_back(b);
        }
    }
    report.carrier_size = carrier.size();

    std::unordered_set<Behavior, BehaviorHash> members(carrier.begin(),
                                                       carrier.end());
    report.unit_in_carrier = members.count(Behavior::identity(n)) > 0;

    report.closed = true;
    for (const Behavior& f : carrier) {
        for (const Behavior& g : carrier) {
            if (!members.count(compose_behaviors(s, f, g))) {
                report.closed = false;
                report.closure_counterexample = {f, g};
                break;
            }
        }
        if (!report.closed)
            break;
    }
    report.aperiodicity = aperiodicity(s, carrier);
    return report;
}

TurnFactorization factor_turns(const DirectedStateSet& s, const Behavior& f) {
    const int n = s.size();
    TurnFactorization parts{Behavior(n), Behavior(n), Behavior(n), Behavior(n),
                            Behavior(n)};
    std::vector<bool> has_into(n, false), has_out(n, false);
    for (auto [q, r] : f.pairs()) {
        if (s.forward(q) && !s.forward(r)) {
            parts.into_turns.set(q, r);
            has_into[q] = true;
        } else if (!s.forward(q) && s.forward(r)) {
            parts.out_turns.set(q, r);
            has_out[q] = true;
        } else {
            parts.through.set(q, r);
        }
    }
    parts.left_factor = parts.into_turns;
    parts.right_factor = parts.out_turns;
    for (State q = 0; q < n; ++q) {
        if (!has_into[q])
            parts.left_factor.set(q, q);
        if (!has_out[q])
            parts.right_factor.set(q, q);
    }

    // The recompose identity needs f to be a partial function: a state with
    // both an out-turn and a same-direction pair gets no identity pad in
    // right_factor, so its same-direction pair cannot reach the middle cell
    // (e.g. {(0,0),(0,1)} with state 0 backward, state 1 forward loses (0,0)).
    // Deterministic behaviors never have two pairs on one state, so for them
    // the identity always holds and is asserted here.
    if (f.is_partial_function()) {
        Behavior recomposed = compose_behaviors(
            s, compose_behaviors(s, parts.left_factor, parts.through),
            parts.right_factor);
        if (recomposed != f)
            throw std::logic_error("turn factorization failed to recompose");
    }
    return parts;
}

}  // namespace twoway
