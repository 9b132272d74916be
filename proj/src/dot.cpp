#include <algorithm>
#include <sstream>
#include <tuple>

#include "twoway/io.hpp"

namespace twoway {

namespace {

// Every boundary column lists the states least-first (by the declared order
// when there is one), matching the usual drawing with the least state on
// top of each column.
std::vector<State> column_states(const TwoWayMachine& m) {
    if (m.states.order)
        return *m.states.order;
    std::vector<State> states(m.state_count());
    for (State q = 0; q < m.state_count(); ++q)
        states[q] = q;
    return states;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string symbol_label(Symbol sym) {
    return std::string(1, sym);
}

void emit_column(std::ostringstream& out, const TwoWayMachine& m,
                 const std::string& prefix, const std::vector<State>& states) {
    out << "  { rank=same;";
    for (State q : states)
        out << ' ' << prefix << q << ';';
    out << " }\n";
    for (State q : states)
        out << "  " << prefix << q << " [label=" << quote(m.states.names[q])
            << "];\n";
}

// Endpoint column of a transition within one cell: 0 = left boundary,
// 1 = right boundary.
int source_column(const TwoWayMachine& m, State q) {
    return m.states.forward(q) ? 0 : 1;
}
int target_column(const TwoWayMachine& m, State q) {
    return m.states.forward(q) ? 1 : 0;
}

}  // namespace

std::string emit_dot_profile(const TwoWayMachine& m, Symbol sym) {
    if (!is_marker(sym) && !alphabet_contains(m.input_alphabet, sym))
        throw AlphabetError(std::string("symbol '") + sym +
                            "' is not in the input alphabet");
    std::ostringstream out;
    out << "digraph profile {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  label=" << quote("cell: " + symbol_label(sym)) << ";\n";
    emit_column(out, m, "l", column_states(m));
    emit_column(out, m, "r", column_states(m));
    if (const auto* list = m.transitions(sym)) {
        std::vector<Transition> sorted = *list;
        std::sort(sorted.begin(), sorted.end());
        for (const Transition& t : sorted) {
            out << "  " << (source_column(m, t.from) == 0 ? "l" : "r") << t.from
                << " -> " << (target_column(m, t.to) == 0 ? "l" : "r") << t.to;
            if (m.kind == MachineKind::Transducer)
                out << " [label=" << quote(t.out) << "]";
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string emit_dot_run(const TwoWayMachine& m, const Word& input) {
    RunResult result = run(m, input, /*want_trace=*/true);
    const Word tape = tape_of(input);

    // The executed steps, as (cell index, source state, target state).
    struct Step {
        int cell;
        State from, to;
        bool operator==(const Step& o) const {
            return cell == o.cell && from == o.from && to == o.to;
        }
        bool operator<(const Step& o) const {
            return std::tie(cell, from, to) < std::tie(o.cell, o.from, o.to);
        }
    };
    std::vector<Step> steps;
    for (std::size_t i = 0; i + 1 < result.trace.size(); ++i) {
        const Configuration& before = result.trace[i].first;
        const Configuration& after = result.trace[i + 1].first;
        int cell = m.states.forward(before.state)
                       ? static_cast<int>(before.left.size())
                       : static_cast<int>(before.left.size()) - 1;
        steps.push_back(Step{cell, before.state, after.state});
    }
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    auto executed = [&steps](int cell, State from, State to) {
        return std::binary_search(steps.begin(), steps.end(),
                                  Step{cell, from, to});
    };

    std::ostringstream out;
    out << "digraph run {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  label=" << quote("input: " + input) << ";\n";
    for (int boundary = 0; boundary <= static_cast<int>(tape.size());
         ++boundary) {
        std::ostringstream prefix;
        prefix << 'b' << boundary << '_';
        emit_column(out, m, prefix.str(), column_states(m));
    }
    for (int cell = 0; cell < static_cast<int>(tape.size()); ++cell) {
        const auto* list = m.transitions(tape[cell]);
        if (!list)
            continue;
        std::vector<Transition> sorted = *list;
        std::sort(sorted.begin(), sorted.end());
        for (const Transition& t : sorted) {
            out << "  b" << (cell + source_column(m, t.from)) << '_' << t.from
                << " -> b" << (cell + target_column(m, t.to)) << '_' << t.to;
            out << " [label=" << quote(t.out);
            if (executed(cell, t.from, t.to))
                out << ", color=red, penwidth=2";
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace twoway
