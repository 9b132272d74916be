#include "twoway/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "twoway/planarity.hpp"

namespace twoway {

void SequentialTransducer::validate() const {
    const int n = state_count();
    if (n <= 0)
        throw ValidationError("sequential transducer needs at least one state");
    if (initial < 0 || initial >= n)
        throw UnknownState("initial state out of range");
    if (static_cast<int>(final_output.size()) != n)
        throw ValidationError("final outputs must cover every state");
    for (Symbol a : input_alphabet) {
        auto it = transitions.find(a);
        if (it == transitions.end() || static_cast<int>(it->second.size()) != n)
            throw ValidationError(
                std::string("transition function is not total on '") + a + "'");
        for (const auto& [target, out] : it->second) {
            if (target < 0 || target >= n)
                throw UnknownState("transition target out of range");
            for (Symbol c : out)
                if (!alphabet_contains(output_alphabet, c))
                    throw AlphabetError(
                        std::string("output uses undeclared symbol '") + c + "'");
        }
    }
    for (const auto& [sym, list] : transitions) {
        (void)list;
        if (!alphabet_contains(input_alphabet, sym))
            throw AlphabetError(std::string("transition on undeclared symbol '") +
                                sym + "'");
    }
    for (const Word& w : final_output)
        for (Symbol c : w)
            if (!alphabet_contains(output_alphabet, c))
                throw AlphabetError(
                    std::string("final output uses undeclared symbol '") + c +
                    "'");
}

Word seq_run(const SequentialTransducer& seq, const Word& input) {
    State q = seq.initial;
    Word out;
    for (Symbol a : input) {
        auto it = seq.transitions.find(a);
        if (it == seq.transitions.end())
            throw AlphabetError(std::string("input uses undeclared symbol '") +
                                a + "'");
        const auto& [target, emitted] = it->second[q];
        out += emitted;
        q = target;
    }
    return out + seq.final_output[q];
}

bool is_aperiodic_sequential(const SequentialTransducer& seq) {
    const int n = seq.state_count();
    // Closure of the per-letter state maps under composition: every element
    // is some word's state map, so extending by one letter at a time covers
    // the whole transition semigroup.
    std::vector<std::vector<int>> generators;
    for (Symbol a : seq.input_alphabet) {
        std::vector<int> f(n);
        for (State q = 0; q < n; ++q)
            f[q] = seq.transitions.at(a)[q].first;
        generators.push_back(std::move(f));
    }
    auto after = [n](const std::vector<int>& f, const std::vector<int>& g) {
        std::vector<int> h(n);
        for (int q = 0; q < n; ++q)
            h[q] = g[f[q]];  // apply f, then g
        return h;
    };
    std::set<std::vector<int>> closure;
    std::vector<std::vector<int>> queue;
    for (const auto& f : generators)
        if (closure.insert(f).second)
            queue.push_back(f);
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& g : generators) {
            std::vector<int> h = after(queue[i], g);
            if (closure.insert(h).second)
                queue.push_back(h);
        }
    // Aperiodic: every element's power sequence reaches a fixed point.
    for (const std::vector<int>& x : closure) {
        std::set<std::vector<int>> visited;
        std::vector<int> power = x;
        visited.insert(power);
        while (true) {
            std::vector<int> next = after(power, x);
            if (next == power)
                break;
            if (!visited.insert(next).second)
                return false;  // cycle of length > 1
            power = std::move(next);
        }
    }
    return true;
}

SequentialTransducer normalize_two_state(const SequentialTransducer& seq) {
    if (seq.state_count() != 2)
        throw WrongStateCount("flip-flop translation needs exactly two states");
    seq.validate();
    SequentialTransducer out = seq;
    out.state_names = {"1", "2"};
    if (seq.initial == 0)
        return out;
    out.initial = 0;
    auto flip = [](State q) { return 1 - q; };
    for (auto& [sym, list] : out.transitions) {
        std::vector<std::pair<State, Word>> swapped(2);
        for (State q = 0; q < 2; ++q)
            swapped[flip(q)] = {flip(list[q].first), list[q].second};
        list = swapped;
    }
    std::swap(out.final_output[0], out.final_output[1]);
    return out;
}

TwoWayMachine flipflop_to_planar(const SequentialTransducer& input) {
    SequentialTransducer seq = normalize_two_state(input);
    if (!is_aperiodic_sequential(seq))
        throw NotAperiodic("some letter acts as the transposition");

    // States in planar order: q1 < r1 < s < r2 < q2. The q-states mirror the
    // sequential run; an r-state walks back to hand control to s, which
    // re-crosses to pick the run up again.
    enum : State { Q1 = 0, R1 = 1, S = 2, R2 = 3, Q2 = 4 };
    TwoWayMachine m;
    m.kind = MachineKind::Transducer;
    m.input_alphabet = seq.input_alphabet;
    m.output_alphabet = seq.output_alphabet;
    m.states.names = {"q1", "r1", "s", "r2", "q2"};
    m.states.direction = {+1, -1, +1, -1, +1};
    m.states.order = std::vector<State>{Q1, R1, S, R2, Q2};
    m.initial = Q1;
    m.finals = {S};

    for (Symbol a : seq.input_alphabet) {
        const auto& row = seq.transitions.at(a);
        auto [t1, u] = row[0];
        auto [t2, v] = row[1];
        if (t1 == 0 && t2 == 1) {  // identity column: everything crosses
            m.add_transition(a, Q1, u, Q1);
            m.add_transition(a, Q2, v, Q2);
            m.add_transition(a, R1, "", R1);
            m.add_transition(a, R2, "", R2);
            m.add_transition(a, S, "", S);
        } else if (t1 == t2) {     // constant column onto state t1
            State qk = t1 == 0 ? Q1 : Q2;
            State rk = t1 == 0 ? R1 : R2;
            m.add_transition(a, Q1, u, R1);
            m.add_transition(a, Q2, v, R2);
            m.add_transition(a, S, "", qk);
            m.add_transition(a, rk, "", S);
        } else {                   // the transposition: not aperiodic
            throw NotAperiodic(std::string("letter '") + a +
                               "' acts as the transposition");
        }
    }
    m.add_transition(kLeftMark, Q1, "", Q1);
    m.add_transition(kLeftMark, R1, "", S);
    m.add_transition(kRightMark, S, "", S);
    m.add_transition(kRightMark, Q1, seq.final_output[0], R1);
    m.add_transition(kRightMark, Q2, seq.final_output[1], R2);
    m.normalize();
    m.validate();
    return m;
}

void MonotoneRegisterTransducer::validate() const {
    const int n = register_count();
    if (n <= 0)
        throw ValidationError("register transducer needs at least one register");
    for (Symbol a : input_alphabet) {
        auto it = updates.find(a);
        if (it == updates.end() ||
            static_cast<int>(it->second.assignment.size()) != n)
            throw ValidationError(std::string("update missing for letter '") +
                                  a + "'");
        for (const auto& rhs : it->second.assignment) {
            for (const RhsItem& item : rhs) {
                if (item.is_register()) {
                    if (item.reg >= n)
                        throw UnknownState("right-hand side register out of range");
                } else {
                    for (Symbol c : item.chunk)
                        if (!alphabet_contains(output_alphabet, c))
                            throw AlphabetError(
                                std::string("chunk uses undeclared symbol '") +
                                c + "'");
                }
            }
        }
    }
    for (const auto& [sym, update] : updates) {
        (void)update;
        if (!alphabet_contains(input_alphabet, sym))
            throw AlphabetError(std::string("update on undeclared symbol '") +
                                sym + "'");
    }
}

std::optional<std::string> copyless_monotone_violation(
    const RegisterUpdate& update, int register_count) {
    // Concatenate the right-hand sides in register order and read off the
    // register occurrences; they must be strictly increasing.
    std::vector<int> occurrences;
    for (const auto& rhs : update.assignment)
        for (const RhsItem& item : rhs)
            if (item.is_register())
                occurrences.push_back(item.reg);
    for (std::size_t i = 0; i < occurrences.size(); ++i) {
        if (occurrences[i] >= register_count)
            return "register index out of range";
        if (i > 0 && occurrences[i] <= occurrences[i - 1]) {
            std::ostringstream msg;
            if (occurrences[i] == occurrences[i - 1])
                msg << "register #" << occurrences[i] << " is used twice";
            else
                msg << "register #" << occurrences[i] << " appears after #"
                    << occurrences[i - 1];
            return msg.str();
        }
    }
    return std::nullopt;
}

bool is_copyless_monotone(const RegisterUpdate& update, int register_count) {
    return !copyless_monotone_violation(update, register_count).has_value();
}

Word mrt_apply(const MonotoneRegisterTransducer& mrt, const Word& input) {
    const int n = mrt.register_count();
    std::vector<Word> value(n);
    for (Symbol a : input) {
        auto it = mrt.updates.find(a);
        if (it == mrt.updates.end())
            throw AlphabetError(std::string("input uses undeclared symbol '") +
                                a + "'");
        std::vector<Word> next(n);
        for (int r = 0; r < n; ++r) {
            for (const RhsItem& item : it->second.assignment[r])
                next[r] += item.is_register() ? value[item.reg] : item.chunk;
        }
        value = std::move(next);
    }
    return value[0];
}

namespace {

// rhs as a constant prefix, register hops (register, following constant).
struct RhsShape {
    Word prefix;
    std::vector<std::pair<int, Word>> hops;
};

RhsShape shape_of(const std::vector<RhsItem>& rhs) {
    RhsShape shape;
    for (const RhsItem& item : rhs) {
        if (item.is_register())
            shape.hops.emplace_back(item.reg, Word());
        else if (shape.hops.empty())
            shape.prefix += item.chunk;
        else
            shape.hops.back().second += item.chunk;
    }
    return shape;
}

}  // namespace

TwoWayMachine mrt_to_planar(const MonotoneRegisterTransducer& mrt) {
    mrt.validate();
    for (const auto& [sym, update] : mrt.updates)
        if (auto violation =
                copyless_monotone_violation(update, mrt.register_count()))
            throw NotCopylessMonotone(std::string("update for '") + sym +
                                      "': " + *violation);

    // One start state plus a rewind/replay pair per register: (r, -1) walks
    // left to where r's value started accumulating, (r, +1) walks right
    // replaying the accumulation and emitting the value.
    const int n = mrt.register_count();
    TwoWayMachine m;
    m.kind = MachineKind::Transducer;
    m.input_alphabet = mrt.input_alphabet;
    m.output_alphabet = mrt.output_alphabet;
    auto in_state = [](int r) { return 1 + 2 * r; };
    auto out_state = [](int r) { return 2 + 2 * r; };
    m.states.names.push_back(".");
    m.states.direction.push_back(+1);
    for (int r = 0; r < n; ++r) {
        m.states.names.push_back(mrt.register_names[r] + "-");
        m.states.direction.push_back(-1);
        m.states.names.push_back(mrt.register_names[r] + "+");
        m.states.direction.push_back(+1);
    }
    std::vector<State> natural(m.states.names.size());
    for (std::size_t i = 0; i < natural.size(); ++i)
        natural[i] = static_cast<State>(i);
    m.states.order = natural;
    m.initial = 0;
    m.finals = {out_state(0)};

    m.add_transition(kLeftMark, 0, "", 0);
    for (int r = 0; r < n; ++r)
        m.add_transition(kLeftMark, in_state(r), "", out_state(r));
    m.add_transition(kRightMark, 0, "", in_state(0));
    m.add_transition(kRightMark, out_state(0), "", out_state(0));

    for (Symbol a : mrt.input_alphabet) {
        m.add_transition(a, 0, "", 0);
        const RegisterUpdate& update = mrt.updates.at(a);
        for (int r = 0; r < n; ++r) {
            RhsShape shape = shape_of(update.assignment[r]);
            if (shape.hops.empty()) {
                // Constant assignment: the whole value is emitted in place.
                m.add_transition(a, in_state(r), shape.prefix, out_state(r));
                continue;
            }
            // Rewinding r continues into its first source register; replaying
            // a source register hops to the next one; the last hop completes
            // the replay of r itself.
            m.add_transition(a, in_state(r), shape.prefix,
                             in_state(shape.hops.front().first));
            for (std::size_t i = 0; i + 1 < shape.hops.size(); ++i)
                m.add_transition(a, out_state(shape.hops[i].first),
                                 shape.hops[i].second,
                                 in_state(shape.hops[i + 1].first));
            m.add_transition(a, out_state(shape.hops.back().first),
                             shape.hops.back().second, out_state(r));
        }
    }
    m.normalize();
    m.validate();
    return m;
}

TwoWayMachine reverse_transducer(const std::string& alphabet) {
    std::string alpha = canonical_alphabet(alphabet);
    TwoWayMachine m;
    m.kind = MachineKind::Transducer;
    m.input_alphabet = alpha;
    m.output_alphabet = alpha;
    m.states.names = {"1", "2", "3"};
    m.states.direction = {+1, -1, +1};
    m.states.order = std::vector<State>{0, 1, 2};
    m.initial = 0;
    m.finals = {2};
    m.add_transition(kLeftMark, 0, "", 0);   // initial crossing
    m.add_transition(kLeftMark, 1, "", 2);   // done emitting; head back right
    m.add_transition(kRightMark, 0, "", 1);  // turn: start emitting backward
    m.add_transition(kRightMark, 2, "", 2);  // accepting crossing
    for (Symbol a : alpha) {
        m.add_transition(a, 0, "", 0);             // silent pass to the right
        m.add_transition(a, 1, Word(1, a), 1);     // emit while walking left
        m.add_transition(a, 2, "", 2);             // silent pass to accept
    }
    m.normalize();
    m.validate();
    return m;
}

namespace {

struct SegmentExit {
    int side;     // -1 left, +1 right
    State state;
    Word out;
};

// Runs a deterministic machine over a bounded tape segment, entering in
// `entry` from the side that state reads toward. Empty result: the head got
// stuck or cycled inside the segment.
std::optional<SegmentExit> run_segment(const TwoWayMachine& m,
                                       const DeterministicIndex& index,
                                       const Word& segment, State entry) {
    const std::size_t bound =
        static_cast<std::size_t>(m.state_count()) * (segment.size() + 2);
    State q = entry;
    std::size_t pos = m.states.forward(entry) ? 0 : segment.size();
    Word out;
    std::size_t steps = 0;
    while (true) {
        bool fwd = m.states.forward(q);
        if (fwd && pos == segment.size())
            return SegmentExit{+1, q, out};
        if (!fwd && pos == 0)
            return SegmentExit{-1, q, out};
        Symbol a = fwd ? segment[pos] : segment[pos - 1];
        const Transition* t = index.find(a, q);
        if (!t)
            return std::nullopt;
        out += t->out;
        bool dst_fwd = m.states.forward(t->to);
        if (fwd && dst_fwd)
            ++pos;
        else if (!fwd && !dst_fwd)
            --pos;
        q = t->to;
        if (++steps > bound)
            return std::nullopt;  // cycling inside the segment
    }
}

std::string witness_note(const TwoWayMachine& m,
                         const MachinePlanarityWitness& w) {
    auto vertex = [&](const ProfileVertex& v) {
        return "(" + m.states.names[v.state] + "," +
               (v.side > 0 ? std::string("+1") : std::string("-1")) + ")";
    };
    std::ostringstream msg;
    msg << "on '" << w.symbol << "': edges " << vertex(w.witness.u) << "-"
        << vertex(w.witness.v) << " and " << vertex(w.witness.r) << "-"
        << vertex(w.witness.s) << " cross";
    return msg.str();
}

}  // namespace

TwoWayMachine compose_transducers(const TwoWayMachine& first,
                                  const TwoWayMachine& second) {
    if (!is_reversible(first))
        throw NotReversible("first machine is not reversible");
    if (!is_reversible(second))
        throw NotReversible("second machine is not reversible");
    if (!first.states.order || !second.states.order)
        throw MissingOrder("composition needs state orders on both machines");
    if (auto w = is_planar_machine(first))
        throw NotPlanar("first machine: " + witness_note(first, *w));
    if (auto w = is_planar_machine(second))
        throw NotPlanar("second machine: " + witness_note(second, *w));
    if (first.output_alphabet != second.input_alphabet)
        throw AlphabetMismatch(
            "first machine's output alphabet differs from second's input "
            "alphabet");

    const std::vector<State>& order1 = *first.states.order;
    const std::vector<State>& order2 = *second.states.order;
    const int n2 = second.state_count();
    std::vector<int> rank1 = first.states.ranks();
    std::vector<int> rank2 = second.states.ranks();
    // Pair states enumerated in a direction-twisted lexicographic order:
    // within the band of a first-machine state q the second order is kept
    // when q is forward and reversed when q is backward. The plain product
    // order is not planar in general: when the first machine turns
    // forward-to-backward, the second machine's forward entries pair with the
    // turn's source band and its backward entries with the target band, and
    // keeping the same sub-order on both bands makes those chords interleave
    // (reverse composed with itself exhibits this at the right marker).
    // Reversing the sub-order under backward states gives every such band
    // pair mirror orientations, so crossings in the pair diagram project to
    // crossings of one of the component machines.
    auto pair_state = [&](State q, State r) {
        int column = first.states.direction[q] > 0 ? rank2[r]
                                                   : n2 - 1 - rank2[r];
        return rank1[q] * n2 + column;
    };

    TwoWayMachine composite;
    composite.kind = MachineKind::Transducer;
    composite.input_alphabet = first.input_alphabet;
    composite.output_alphabet = second.output_alphabet;
    for (State q : order1) {
        const bool fwd = first.states.direction[q] > 0;
        for (int k = 0; k < n2; ++k) {
            State r = order2[fwd ? k : n2 - 1 - k];
            composite.states.names.push_back(first.states.names[q] + "." +
                                             second.states.names[r]);
            composite.states.direction.push_back(first.states.direction[q] *
                                                 second.states.direction[r]);
        }
    }
    std::vector<State> natural(composite.states.names.size());
    for (std::size_t i = 0; i < natural.size(); ++i)
        natural[i] = static_cast<State>(i);
    composite.states.order = natural;
    composite.initial = pair_state(first.initial, second.initial);
    for (State f1 : first.finals)
        for (State f2 : second.finals)
            composite.finals.push_back(pair_state(f1, f2));

    DeterministicIndex index2(second);
    for (const auto& [sym, list] : first.delta) {
        std::set<Transition> acc;
        for (const Transition& t : list) {
            // The tape segment the second machine sees for this step. Marker
            // reads that belong to the outer ends of the first machine's run
            // carry the corresponding marker of the second machine's tape:
            // the left marker is read forward only by the initial crossing,
            // the right marker is crossed forward only by the accepting move.
            Word segment = t.out;
            if (sym == kLeftMark && first.states.forward(t.from))
                segment.insert(segment.begin(), kLeftMark);
            if (sym == kRightMark && first.states.forward(t.to))
                segment.push_back(kRightMark);
            for (State r = 0; r < n2; ++r) {
                auto exit = run_segment(second, index2, segment, r);
                if (!exit)
                    continue;
                bool entered_left = second.states.forward(r);
                bool exited_right = exit->side > 0;
                // Entering from the left happens before the first machine's
                // step, from the right after it; same for the exits.
                State src = entered_left ? t.from : t.to;
                State dst = exited_right ? t.to : t.from;
                acc.insert(Transition{pair_state(src, r), exit->out,
                                      pair_state(dst, exit->state)});
            }
        }
        composite.delta[sym].assign(acc.begin(), acc.end());
    }
    composite.normalize();
    composite.validate();

    if (!is_reversible(composite))
        throw NotReversible("composite machine is not reversible");
    if (auto w = is_planar_machine(composite)) {
        std::string note = "composite machine: " + witness_note(composite, *w);
        if (composite.state_count() <= 8) {
            note += find_planar_order(composite)
                        ? "; another state order would be planar"
                        : "; no state order is planar";
        }
        throw NotPlanar(note);
    }
    return composite;
}

}  // namespace twoway
