#include "twoway/core.hpp"

#include <algorithm>
#include <set>

namespace twoway {

std::vector<int> DirectedStateSet::ranks() const {
    if (!order)
        throw MissingOrder("state set declares no order");
    std::vector<int> rank(names.size(), -1);
    for (int pos = 0; pos < static_cast<int>(order->size()); ++pos)
        rank.at((*order)[pos]) = pos;
    return rank;
}

void DirectedStateSet::validate() const {
    if (direction.size() != names.size())
        throw ValidationError("state set: directions do not match states");
    for (int d : direction)
        if (d != 1 && d != -1)
            throw ValidationError("state set: direction must be +1 or -1");
    if (order) {
        if (order->size() != names.size())
            throw ValidationError("order must list every state exactly once");
        std::vector<bool> seen(names.size(), false);
        for (State q : *order) {
            if (q < 0 || q >= size())
                throw UnknownState("order references state #" + std::to_string(q));
            if (seen[q])
                throw ValidationError("order lists state " + names[q] + " twice");
            seen[q] = true;
        }
    }
}

bool TwoWayMachine::is_final(State q) const {
    return std::binary_search(finals.begin(), finals.end(), q);
}

const std::vector<Transition>* TwoWayMachine::transitions(Symbol a) const {
    auto it = delta.find(a);
    return it == delta.end() ? nullptr : &it->second;
}

void TwoWayMachine::add_transition(Symbol a, State from, Word out, State to) {
    delta[a].push_back(Transition{from, std::move(out), to});
}

void TwoWayMachine::normalize() {
    for (auto& [sym, list] : delta) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    std::sort(finals.begin(), finals.end());
    finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
}

void TwoWayMachine::validate() const {
    states.validate();
    for (Symbol c : input_alphabet)
        if (is_marker(c))
            throw ValidationError("input alphabet uses a reserved marker");
    for (Symbol c : output_alphabet)
        if (is_marker(c))
            throw ValidationError("output alphabet uses a reserved marker");
    if (initial < 0 || initial >= state_count())
        throw UnknownState("initial state out of range");
    if (!states.forward(initial))
        throw ValidationError("initial state must be forward");
    for (State f : finals)
        if (f < 0 || f >= state_count())
            throw UnknownState("final state out of range");
    for (const auto& [sym, list] : delta) {
        if (!is_marker(sym) && !alphabet_contains(input_alphabet, sym))
            throw AlphabetError(std::string("transition on undeclared symbol '") +
                                sym + "'");
        for (const Transition& t : list) {
            if (t.from < 0 || t.from >= state_count() || t.to < 0 ||
                t.to >= state_count())
                throw UnknownState("transition references a state out of range");
            if (kind == MachineKind::Automaton && !t.out.empty())
                throw ValidationError("automaton transitions cannot emit output");
            for (Symbol c : t.out)
                if (!alphabet_contains(output_alphabet, c))
                    throw AlphabetError(
                        std::string("output uses undeclared symbol '") + c + "'");
        }
    }
}

bool alphabet_contains(const std::string& alphabet, Symbol c) {
    return std::binary_search(alphabet.begin(), alphabet.end(), c);
}

std::string canonical_alphabet(const std::string& symbols) {
    std::string a = symbols;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    for (Symbol c : a)
        if (is_marker(c))
            throw ValidationError("alphabet uses a reserved marker");
    return a;
}

DeterministicIndex::DeterministicIndex(const TwoWayMachine& m) : machine_(&m) {
    for (const auto& [sym, list] : m.delta) {
        std::vector<int> slot(m.state_count(), -1);
        for (int i = 0; i < static_cast<int>(list.size()); ++i) {
            const Transition& t = list[i];
            if (slot[t.from] >= 0) {
                const Transition& prev = list[slot[t.from]];
                if (prev.to != t.to || prev.out != t.out)
                    throw NondeterministicMachine(
                        std::string("state ") + m.states.names[t.from] +
                        " has two transitions on '" + sym + "'");
            } else {
                slot[t.from] = i;
            }
        }
        slots_[sym] = std::move(slot);
    }
}

const Transition* DeterministicIndex::find(Symbol a, State q) const {
    auto it = slots_.find(a);
    if (it == slots_.end())
        return nullptr;
    int i = it->second[q];
    return i < 0 ? nullptr : &machine_->delta.at(a)[i];
}

namespace {

// Applies one transition to a configuration; the symbol has already been
// read off the correct side.
Configuration apply_move(const TwoWayMachine& m, const Configuration& c,
                         Symbol sym, State to) {
    bool src_fwd = m.states.forward(c.state);
    bool dst_fwd = m.states.forward(to);
    Configuration next = c;
    next.state = to;
    if (src_fwd && dst_fwd) {            // cross the cell rightward
        next.left.push_back(sym);
        next.right.erase(0, 1);
    } else if (!src_fwd && !dst_fwd) {   // cross the cell leftward
        next.left.pop_back();
        next.right.insert(next.right.begin(), sym);
    }
    // Turns re-read from the other side; the split does not move.
    return next;
}

}  // namespace

std::optional<StepResult> step(const TwoWayMachine& m, const Configuration& c) {
    bool fwd = m.states.forward(c.state);
    if (fwd ? c.right.empty() : c.left.empty())
        return std::nullopt;  // nothing to read on that side
    Symbol sym = fwd ? c.right.front() : c.left.back();
    const std::vector<Transition>* list = m.transitions(sym);
    if (!list)
        return std::nullopt;
    const Transition* found = nullptr;
    for (const Transition& t : *list) {
        if (t.from != c.state)
            continue;
        if (found && (found->to != t.to || found->out != t.out))
            throw NondeterministicMachine(
                std::string("state ") + m.states.names[c.state] +
                " has two transitions on '" + sym + "'");
        found = &t;
    }
    if (!found)
        return std::nullopt;
    return StepResult{apply_move(m, c, sym, found->to), found->out};
}

RunResult run(const TwoWayMachine& m, const Word& input, bool want_trace) {
    for (Symbol c : input)
        if (!alphabet_contains(m.input_alphabet, c))
            throw AlphabetError(std::string("input uses undeclared symbol '") +
                                c + "'");
    DeterministicIndex index(m);  // throws NondeterministicMachine

    RunResult result;
    Configuration cfg{Word(), m.initial, tape_of(input)};
    const std::size_t bound =
        static_cast<std::size_t>(m.state_count()) * (input.size() + 3);

    while (true) {
        if (cfg.right.empty()) {  // whole tape on the left: the run is over
            result.status = m.is_final(cfg.state) ? RunStatus::Accepted
                                                  : RunStatus::RejectedNonfinal;
            break;
        }
        bool fwd = m.states.forward(cfg.state);
        if (!fwd && cfg.left.empty()) {  // backward state with nothing left
            result.status = RunStatus::RejectedStuck;
            break;
        }
        Symbol sym = fwd ? cfg.right.front() : cfg.left.back();
        const Transition* t = index.find(sym, cfg.state);
        if (!t) {
            result.status = RunStatus::RejectedStuck;
            break;
        }
        if (want_trace)
            result.trace.emplace_back(cfg, t->out);
        result.output += t->out;
        cfg = apply_move(m, cfg, sym, t->to);
        ++result.steps;
        if (result.steps > bound) {
            result.status = RunStatus::Looping;
            break;
        }
    }
    if (want_trace)
        result.trace.emplace_back(cfg, Word());
    if (result.status != RunStatus::Accepted)
        result.output.clear();
    return result;
}

bool is_deterministic(const TwoWayMachine& m) {
    try {
        DeterministicIndex index(m);
    } catch (const NondeterministicMachine&) {
        return false;
    }
    return true;
}

bool is_reversible(const TwoWayMachine& m) {
    if (!is_deterministic(m))
        return false;
    for (const auto& [sym, list] : m.delta) {
        std::set<State> targets;
        for (const Transition& t : list)
            if (!targets.insert(t.to).second)
                return false;  // two sources share a target
    }
    return true;
}

TwoWayMachine domain_automaton(const TwoWayMachine& m) {
    TwoWayMachine result = m;
    result.kind = MachineKind::Automaton;
    result.output_alphabet.clear();
    for (auto& [sym, list] : result.delta)
        for (Transition& t : list)
            t.out.clear();
    result.normalize();
    return result;
}

}  // namespace twoway
