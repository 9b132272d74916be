// Command-line front end: checking, running, composing, and translating
// two-way machines stored as text files.
//
// Exit codes: 0 = success / property holds / machines equal;
//             1 = property fails (witness printed on stdout);
//             2 = usage, parse, or validation errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "twoway/constructions.hpp"
#include "twoway/core.hpp"
#include "twoway/io.hpp"
#include "twoway/monoid.hpp"
#include "twoway/oracles.hpp"
#include "twoway/planarity.hpp"

namespace {

using namespace twoway;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ValidationError("cannot write '" + path + "'");
    out << text;
}

MachineDocument load(const std::string& path) {
    return parse_machine(read_file(path));
}

std::string describe_vertex(const TwoWayMachine& m, const ProfileVertex& v) {
    return "(" + m.states.names[v.state] + "," + (v.side > 0 ? "+1" : "-1") +
           ")";
}

void print_witness(const TwoWayMachine& m, const MachinePlanarityWitness& w) {
    std::cout << "crossing on '" << w.symbol << "': " << describe_vertex(m, w.witness.u)
              << " < " << describe_vertex(m, w.witness.r) << " < "
              << describe_vertex(m, w.witness.v) << " < "
              << describe_vertex(m, w.witness.s) << " with edges "
              << describe_vertex(m, w.witness.edge1.src) << "->"
              << describe_vertex(m, w.witness.edge1.dst) << " and "
              << describe_vertex(m, w.witness.edge2.src) << "->"
              << describe_vertex(m, w.witness.edge2.dst) << "\n";
}

std::string order_names(const TwoWayMachine& m, const std::vector<State>& order) {
    std::string out;
    for (State q : order) {
        if (!out.empty())
            out += " < ";
        out += m.states.names[q];
    }
    return out;
}

LetterScope scope_of(const std::string& letters) {
    if (letters == "all")
        return LetterScope::All;
    if (letters == "input")
        return LetterScope::InputOnly;
    throw CLI::ValidationError("--letters", "must be 'all' or 'input'");
}

int check_two_way(const TwoWayMachine& m, bool search_order,
                  LetterScope scope) {
    std::cout << "deterministic: " << (is_deterministic(m) ? "yes" : "no")
              << "\n";
    std::cout << "reversible: " << (is_reversible(m) ? "yes" : "no") << "\n";
    if (!search_order && m.states.order) {
        if (auto w = is_planar_machine(m, scope)) {
            std::cout << "planar: no\n";
            print_witness(m, *w);
            return 1;
        }
        std::cout << "planar: yes (order " << order_names(m, *m.states.order)
                  << ")\n";
        return 0;
    }
    if (auto order = find_planar_order(m, scope)) {
        std::cout << "planar: yes (order " << order_names(m, *order) << ")\n";
        return 0;
    }
    std::cout << "planar: no (no state order works)\n";
    return 1;
}

int cmd_check(const std::string& path, bool search_order,
              const std::string& letters) {
    MachineDocument doc = load(path);
    switch (doc.kind) {
        case DocKind::Sequential: {
            const SequentialTransducer& seq = doc.sequential();
            bool aperiodic = is_aperiodic_sequential(seq);
            std::cout << "states: " << seq.state_count() << "\n";
            std::cout << "aperiodic: " << (aperiodic ? "yes" : "no") << "\n";
            return aperiodic ? 0 : 1;
        }
        case DocKind::Mrt: {
            const MonotoneRegisterTransducer& mrt = doc.mrt();
            int failures = 0;
            for (Symbol a : mrt.input_alphabet) {
                auto violation = copyless_monotone_violation(
                    mrt.updates.at(a), mrt.register_count());
                if (violation) {
                    std::cout << "letter '" << a << "': " << *violation << "\n";
                    ++failures;
                }
            }
            std::cout << "copyless-monotone: " << (failures ? "no" : "yes")
                      << "\n";
            return failures ? 1 : 0;
        }
        default:
            return check_two_way(doc.two_way(), search_order,
                                 scope_of(letters));
    }
}

const char* status_name(RunStatus status) {
    switch (status) {
        case RunStatus::Accepted: return "accepted";
        case RunStatus::RejectedStuck: return "rejected (stuck)";
        case RunStatus::RejectedNonfinal: return "rejected (nonfinal state)";
        case RunStatus::Looping: return "looping";
    }
    return "?";
}

int cmd_run(const std::string& path, const std::string& word, bool trace) {
    MachineDocument doc = load(path);
    if (doc.kind == DocKind::Sequential) {
        std::cout << "output: " << seq_run(doc.sequential(), word) << "\n";
        return 0;
    }
    if (doc.kind == DocKind::Mrt) {
        std::cout << "output: " << mrt_apply(doc.mrt(), word) << "\n";
        return 0;
    }
    const TwoWayMachine& m = doc.two_way();
    RunResult result = run(m, word, trace);
    if (trace) {
        for (const auto& [cfg, emitted] : result.trace) {
            std::cout << cfg.left << " | " << m.states.names[cfg.state] << " | "
                      << cfg.right;
            if (!emitted.empty())
                std::cout << "   emits \"" << emitted << "\"";
            std::cout << "\n";
        }
    }
    std::cout << "status: " << status_name(result.status) << "\n";
    if (result.status == RunStatus::Accepted &&
        m.kind == MachineKind::Transducer)
        std::cout << "output: " << result.output << "\n";
    return result.status == RunStatus::Accepted ? 0 : 1;
}

int cmd_monoid(const std::string& path, std::size_t cap) {
    MachineDocument doc = load(path);
    const TwoWayMachine& m = doc.two_way();
    BehaviorMonoid monoid = generate_monoid(m.states, letter_behaviors(m), cap);
    std::cout << "elements: " << monoid.elements.size() << "\n";
    if (monoid.aperiodicity_report.aperiodic) {
        std::cout << "aperiodic: yes (index " << monoid.aperiodicity_report.index
                  << ")\n";
        return 0;
    }
    std::cout << "aperiodic: no\n";
    if (monoid.aperiodicity_report.offending) {
        std::cout << "offending element:";
        for (auto [q, r] : monoid.aperiodicity_report.offending->pairs())
            std::cout << " (" << m.states.names[q] << "," << m.states.names[r]
                      << ")";
        std::cout << "\n";
    }
    return 1;
}

int cmd_compose(const std::string& first_path, const std::string& second_path,
                const std::string& out_path) {
    TwoWayMachine first = load(first_path).two_way();
    TwoWayMachine second = load(second_path).two_way();
    TwoWayMachine composite = compose_transducers(first, second);
    write_file(out_path, serialize(composite, DocKind::TwoWayRftClaim));
    std::cout << "states: " << composite.state_count() << "\n";
    return 0;
}

int cmd_translate(const std::string& path, const std::string& out_path) {
    MachineDocument doc = load(path);
    TwoWayMachine translated;
    if (doc.kind == DocKind::Sequential)
        translated = flipflop_to_planar(doc.sequential());
    else if (doc.kind == DocKind::Mrt)
        translated = mrt_to_planar(doc.mrt());
    else
        throw CLI::ValidationError("translate",
                                   "input must be a seq or mrt machine");
    write_file(out_path, serialize(translated, DocKind::TwoWayRftClaim));
    std::cout << "states: " << translated.state_count() << "\n";
    return 0;
}

int cmd_gen_reverse(const std::string& alphabet, const std::string& out_path) {
    std::string alpha;
    for (char c : alphabet)
        if (c != ' ')
            alpha.push_back(c);
    TwoWayMachine m = reverse_transducer(alpha);
    write_file(out_path, serialize(m, DocKind::TwoWayRftClaim));
    return 0;
}

Evaluator evaluator_of(const MachineDocument& doc) {
    switch (doc.kind) {
        case DocKind::Sequential:
            return [seq = doc.sequential()](const Word& w) {
                return std::optional<Word>(seq_run(seq, w));
            };
        case DocKind::Mrt:
            return [mrt = doc.mrt()](const Word& w) {
                return std::optional<Word>(mrt_apply(mrt, w));
            };
        default:
            return transducer_evaluator(doc.two_way());
    }
}

std::string input_alphabet_of(const MachineDocument& doc) {
    switch (doc.kind) {
        case DocKind::Sequential: return doc.sequential().input_alphabet;
        case DocKind::Mrt: return doc.mrt().input_alphabet;
        default: return doc.two_way().input_alphabet;
    }
}

int cmd_equiv(const std::string& left_path, const std::string& right_path,
              int max_length) {
    MachineDocument left = load(left_path);
    MachineDocument right = load(right_path);
    if (input_alphabet_of(left) != input_alphabet_of(right))
        throw ValidationError("machines have different input alphabets");
    EquivalenceReport report =
        semantic_equiv(evaluator_of(left), evaluator_of(right),
                       input_alphabet_of(left), max_length);
    if (report.equal) {
        std::cout << "equal on all " << report.words_checked
                  << " words of length <= " << max_length << "\n";
        return 0;
    }
    auto show = [](const std::optional<Word>& w) {
        return w ? "\"" + *w + "\"" : std::string("undefined");
    };
    std::cout << "differ on \"" << report.counterexample->input
              << "\": left " << show(report.counterexample->left) << ", right "
              << show(report.counterexample->right) << "\n";
    return 1;
}

int cmd_diagram(const std::string& path, const std::string& letter,
                const std::optional<std::string>& word,
                const std::string& out_path) {
    MachineDocument doc = load(path);
    const TwoWayMachine& m = doc.two_way();
    std::string dot;
    if (word) {
        dot = emit_dot_run(m, *word);
    } else {
        if (letter.size() != 1)
            throw CLI::ValidationError("--letter", "must be a single symbol");
        dot = emit_dot_profile(m, letter[0]);
    }
    if (out_path.empty())
        std::cout << dot;
    else
        write_file(out_path, dot);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar two-way automata and transducers"};
    app.require_subcommand(1);

    std::string path, second_path, out_path, word, letters = "all";
    std::string alphabet;
    bool trace = false, search_order = false;
    std::size_t cap = 1'000'000;
    int max_length = 8;
    std::optional<std::string> run_word;
    std::string letter;

    auto* check = app.add_subcommand("check", "determinism/reversibility/planarity");
    check->add_option("file", path)->required();
    check->add_flag("--search-order", search_order,
                    "search all state orders instead of the declared one");
    check->add_option("--letters", letters, "'all' (default) or 'input'");

    auto* run_cmd = app.add_subcommand("run", "run a machine on a word");
    run_cmd->add_option("file", path)->required();
    run_cmd->add_option("word", word, "input word (may be empty)")->required();
    run_cmd->add_flag("--trace", trace, "print every configuration");

    auto* monoid_cmd = app.add_subcommand("monoid", "behavior monoid summary");
    monoid_cmd->add_option("file", path)->required();
    monoid_cmd->add_option("--cap", cap, "element cap");

    auto* compose = app.add_subcommand("compose", "compose SECOND after FIRST");
    compose->add_option("first", path)->required();
    compose->add_option("second", second_path)->required();
    compose->add_option("-o,--out", out_path)->required();

    auto* translate = app.add_subcommand("translate",
                                         "translate seq/mrt to a two-way machine");
    translate->add_option("file", path)->required();
    translate->add_option("-o,--out", out_path)->required();

    auto* gen_reverse = app.add_subcommand("gen-reverse",
                                           "emit the reversing transducer");
    gen_reverse->add_option("--alphabet", alphabet, "e.g. \"a b c\"")->required();
    gen_reverse->add_option("-o,--out", out_path)->required();

    auto* equiv = app.add_subcommand("equiv", "bounded semantic equivalence");
    equiv->add_option("left", path)->required();
    equiv->add_option("right", second_path)->required();
    equiv->add_option("--maxlen", max_length, "maximum word length (default 8)");

    auto* diagram = app.add_subcommand("diagram", "DOT diagram of a cell or run");
    diagram->add_option("file", path)->required();
    diagram->add_option("--letter", letter, "profile of one tape symbol");
    auto* run_opt = diagram->add_option("--run", run_word, "run on a word");
    run_opt->excludes("--letter");
    diagram->add_option("-o,--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (check->parsed())
            return cmd_check(path, search_order, letters);
        if (run_cmd->parsed())
            return cmd_run(path, word, trace);
        if (monoid_cmd->parsed())
            return cmd_monoid(path, cap);
        if (compose->parsed())
            return cmd_compose(path, second_path, out_path);
        if (translate->parsed())
            return cmd_translate(path, out_path);
        if (gen_reverse->parsed())
            return cmd_gen_reverse(alphabet, out_path);
        if (equiv->parsed())
            return cmd_equiv(path, second_path, max_length);
        if (diagram->parsed()) {
            if (letter.empty() && !run_word)
                throw CLI::ValidationError("diagram",
                                           "needs --letter or --run");
            return cmd_diagram(path, letter, run_word, out_path);
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const twoway::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const twoway::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
