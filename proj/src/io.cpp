#include "twoway/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace twoway {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

// Whitespace tokenization; a token starting with '#' comments out the rest
// of the line (so '#' stays usable inside quoted output words).
std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
               line[i] != '\r')
            ++i;
        std::string text = line.substr(start, i - start);
        if (text[0] == '#')
            break;
        tokens.push_back(Token{text, static_cast<int>(start) + 1});
    }
    return tokens;
}

struct Line {
    int number = 0;
    std::vector<Token> tokens;
    const Token& at(std::size_t i) const {
        if (i >= tokens.size())
            throw ParseError(number,
                             tokens.empty() ? 1
                                            : tokens.back().column +
                                                  static_cast<int>(
                                                      tokens.back().text.size()),
                             "unexpected end of line");
        return tokens[i];
    }
    void expect_end(std::size_t from) const {
        if (tokens.size() > from)
            throw ParseError(number, tokens[from].column,
                             "unexpected token '" + tokens[from].text + "'");
    }
};

[[noreturn]] void fail(const Line& line, const Token& tok,
                       const std::string& msg) {
    throw ParseError(line.number, tok.column, msg);
}

Symbol parse_alphabet_symbol(const Line& line, const Token& tok) {
    if (tok.text.size() != 1)
        fail(line, tok, "alphabet symbols are single characters");
    if (is_marker(tok.text[0]))
        fail(line, tok, "'" + tok.text + "' is reserved for the tape markers");
    return tok.text[0];
}

Symbol parse_tape_symbol(const Line& line, const Token& tok,
                         const std::string& alphabet) {
    if (tok.text.size() != 1)
        fail(line, tok, "tape symbols are single characters");
    Symbol c = tok.text[0];
    if (!is_marker(c) && !alphabet_contains(alphabet, c))
        fail(line, tok, "symbol '" + tok.text + "' is not in the input alphabet");
    return c;
}

Word parse_quoted(const Line& line, const Token& tok) {
    if (tok.text.size() < 2 || tok.text.front() != '"' || tok.text.back() != '"')
        fail(line, tok, "expected a quoted word");
    return tok.text.substr(1, tok.text.size() - 2);
}

std::string parse_alphabet_line(const Line& line) {
    std::string alpha;
    for (std::size_t i = 1; i < line.tokens.size(); ++i)
        alpha.push_back(parse_alphabet_symbol(line, line.tokens[i]));
    std::string canonical = canonical_alphabet(alpha);
    if (canonical.size() != alpha.size())
        throw ParseError(line.number, line.at(0).column,
                         "alphabet repeats a symbol");
    return canonical;
}

struct NameTable {
    std::map<std::string, State> index;
    State resolve(const Line& line, const Token& tok) const {
        auto it = index.find(tok.text);
        if (it == index.end())
            fail(line, tok, "unknown state '" + tok.text + "'");
        return it->second;
    }
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        Line line{number, tokenize(raw)};
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

// --- two-way machines -----------------------------------------------------

TwoWayMachine parse_two_way(const std::vector<Line>& lines, DocKind kind) {
    TwoWayMachine m;
    m.kind = kind == DocKind::TwoWayDfa ? MachineKind::Automaton
                                        : MachineKind::Transducer;
    NameTable names;
    bool saw_input = false, saw_output = false, saw_states = false,
         saw_initial = false;
    std::optional<std::vector<std::string>> order_names;
    std::vector<std::string> final_names;
    struct RawTransition {
        Line line;
        Token from, to;
        Symbol symbol;
        Word out;
    };
    std::vector<RawTransition> raw;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& head = line.at(0).text;
        if (head == "input") {
            if (saw_input)
                fail(line, line.at(0), "duplicate input line");
            saw_input = true;
            m.input_alphabet = parse_alphabet_line(line);
        } else if (head == "output") {
            if (kind == DocKind::TwoWayDfa)
                fail(line, line.at(0), "automata declare no output alphabet");
            if (saw_output)
                fail(line, line.at(0), "duplicate output line");
            saw_output = true;
            m.output_alphabet = parse_alphabet_line(line);
        } else if (head == "states") {
            if (saw_states)
                fail(line, line.at(0), "duplicate states line");
            saw_states = true;
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                const Token& tok = line.tokens[i];
                std::size_t colon = tok.text.rfind(':');
                if (colon == std::string::npos || colon + 2 != tok.text.size() ||
                    (tok.text[colon + 1] != '>' && tok.text[colon + 1] != '<'))
                    fail(line, tok,
                         "state must end with ':>' (forward) or ':<' (backward)");
                std::string name = tok.text.substr(0, colon);
                if (name.empty())
                    fail(line, tok, "empty state name");
                if (!names.index.emplace(name, m.state_count()).second)
                    fail(line, tok, "duplicate state '" + name + "'");
                m.states.names.push_back(name);
                m.states.direction.push_back(tok.text[colon + 1] == '>' ? +1 : -1);
            }
            if (m.states.names.empty())
                fail(line, line.at(0), "at least one state is required");
        } else if (head == "order") {
            if (order_names)
                fail(line, line.at(0), "duplicate order line");
            order_names.emplace();
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                order_names->push_back(line.tokens[i].text);
        } else if (head == "initial") {
            if (saw_initial)
                fail(line, line.at(0), "duplicate initial line");
            saw_initial = true;
            if (!saw_states)
                fail(line, line.at(0), "initial line before states line");
            m.initial = names.resolve(line, line.at(1));
            line.expect_end(2);
        } else if (head == "final") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                final_names.push_back(line.tokens[i].text);
        } else if (head == "t") {
            // t FROM SYM -> TO [: "OUT"]
            RawTransition t{line, line.at(1), line.at(4), ' ', Word()};
            if (line.at(3).text != "->")
                fail(line, line.at(3), "expected '->'");
            t.symbol = ' ';  // resolved after the alphabet is known
            if (line.tokens.size() > 5) {
                if (line.at(5).text != ":")
                    fail(line, line.at(5), "expected ':'");
                if (kind == DocKind::TwoWayDfa)
                    fail(line, line.at(5), "automaton transitions carry no output");
                t.out = parse_quoted(line, line.at(6));
                line.expect_end(7);
            } else if (kind != DocKind::TwoWayDfa) {
                fail(line, line.at(4), "transducer transitions need ': \"...\"'");
            }
            raw.push_back(std::move(t));
        } else {
            fail(line, line.at(0), "unknown section '" + head + "'");
        }
    }

    if (!saw_input)
        throw ValidationError("missing input line");
    if (!saw_states)
        throw ValidationError("missing states line");
    if (!saw_initial)
        throw ValidationError("missing initial line");
    if (kind != DocKind::TwoWayDfa && !saw_output)
        throw ValidationError("missing output line");

    if (order_names) {
        std::vector<State> order;
        for (const std::string& name : *order_names) {
            auto it = names.index.find(name);
            if (it == names.index.end())
                throw ValidationError("order references unknown state '" + name +
                                      "'");
            order.push_back(it->second);
        }
        m.states.order = std::move(order);
    }
    for (const std::string& name : final_names) {
        auto it = names.index.find(name);
        if (it == names.index.end())
            throw ValidationError("final references unknown state '" + name +
                                  "'");
        m.finals.push_back(it->second);
    }
    for (const RawTransition& t : raw) {
        Symbol sym = parse_tape_symbol(t.line, t.line.at(2), m.input_alphabet);
        m.add_transition(sym, names.resolve(t.line, t.from), t.out,
                         names.resolve(t.line, t.to));
    }
    m.normalize();
    m.validate();
    return m;
}

// --- sequential transducers -----------------------------------------------

SequentialTransducer parse_sequential(const std::vector<Line>& lines) {
    SequentialTransducer seq;
    NameTable names;
    bool saw_input = false, saw_output = false, saw_states = false,
         saw_initial = false;
    struct RawTransition {
        Line line;
        Token from, to;
        Word out;
    };
    std::vector<RawTransition> raw;
    std::vector<std::pair<Token, Word>> raw_finals;
    std::vector<Line> final_lines;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& head = line.at(0).text;
        if (head == "input") {
            if (saw_input)
                fail(line, line.at(0), "duplicate input line");
            saw_input = true;
            seq.input_alphabet = parse_alphabet_line(line);
        } else if (head == "output") {
            if (saw_output)
                fail(line, line.at(0), "duplicate output line");
            saw_output = true;
            seq.output_alphabet = parse_alphabet_line(line);
        } else if (head == "states") {
            if (saw_states)
                fail(line, line.at(0), "duplicate states line");
            saw_states = true;
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                const Token& tok = line.tokens[i];
                if (tok.text.find(':') != std::string::npos)
                    fail(line, tok, "one-way states carry no direction suffix");
                if (!names.index.emplace(tok.text, seq.state_count()).second)
                    fail(line, tok, "duplicate state '" + tok.text + "'");
                seq.state_names.push_back(tok.text);
            }
            if (seq.state_names.empty())
                fail(line, line.at(0), "at least one state is required");
        } else if (head == "initial") {
            if (saw_initial)
                fail(line, line.at(0), "duplicate initial line");
            saw_initial = true;
            seq.initial = names.resolve(line, line.at(1));
            line.expect_end(2);
        } else if (head == "final") {
            // final STATE : "OUT"
            if (line.at(2).text != ":")
                fail(line, line.at(2), "expected ':'");
            raw_finals.emplace_back(line.at(1), parse_quoted(line, line.at(3)));
            line.expect_end(4);
            final_lines.push_back(line);
        } else if (head == "t") {
            // t FROM SYM -> TO : "OUT"
            if (line.at(3).text != "->")
                fail(line, line.at(3), "expected '->'");
            if (line.at(5).text != ":")
                fail(line, line.at(5), "expected ':'");
            RawTransition t{line, line.at(1), line.at(4),
                            parse_quoted(line, line.at(6))};
            line.expect_end(7);
            raw.push_back(std::move(t));
        } else {
            fail(line, line.at(0), "unknown section '" + head + "'");
        }
    }
    if (!saw_input)
        throw ValidationError("missing input line");
    if (!saw_output)
        throw ValidationError("missing output line");
    if (!saw_states)
        throw ValidationError("missing states line");
    if (!saw_initial)
        throw ValidationError("missing initial line");

    seq.final_output.assign(seq.state_count(), Word());
    for (std::size_t i = 0; i < raw_finals.size(); ++i)
        seq.final_output[names.resolve(final_lines[i], raw_finals[i].first)] =
            raw_finals[i].second;

    for (Symbol a : seq.input_alphabet)
        seq.transitions[a].assign(seq.state_count(), {-1, Word()});
    for (const RawTransition& t : raw) {
        Symbol sym = t.line.at(2).text.size() == 1 ? t.line.at(2).text[0] : '\0';
        if (!alphabet_contains(seq.input_alphabet, sym))
            fail(t.line, t.line.at(2),
                 "symbol '" + t.line.at(2).text + "' is not in the input alphabet");
        State from = names.resolve(t.line, t.from);
        auto& slot = seq.transitions[sym][from];
        if (slot.first >= 0)
            fail(t.line, t.from,
                 "duplicate transition for state '" + t.from.text + "'");
        slot = {names.resolve(t.line, t.to), t.out};
    }
    for (Symbol a : seq.input_alphabet)
        for (State q = 0; q < seq.state_count(); ++q)
            if (seq.transitions[a][q].first < 0)
                throw ValidationError(std::string("state ") +
                                      seq.state_names[q] +
                                      " has no transition on '" + a + "'");
    seq.validate();
    return seq;
}

// --- register transducers ---------------------------------------------------

MonotoneRegisterTransducer parse_mrt(const std::vector<Line>& lines) {
    MonotoneRegisterTransducer mrt;
    std::map<std::string, int> registers;
    bool saw_input = false, saw_output = false, saw_registers = false;
    struct RawUpdate {
        Line line;
        Token symbol, reg;
        std::vector<Token> rhs;
    };
    std::vector<RawUpdate> raw;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& head = line.at(0).text;
        if (head == "input") {
            if (saw_input)
                fail(line, line.at(0), "duplicate input line");
            saw_input = true;
            mrt.input_alphabet = parse_alphabet_line(line);
        } else if (head == "output") {
            if (saw_output)
                fail(line, line.at(0), "duplicate output line");
            saw_output = true;
            mrt.output_alphabet = parse_alphabet_line(line);
        } else if (head == "registers") {
            if (saw_registers)
                fail(line, line.at(0), "duplicate registers line");
            saw_registers = true;
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                const Token& tok = line.tokens[i];
                if (!registers.emplace(tok.text, mrt.register_count()).second)
                    fail(line, tok, "duplicate register '" + tok.text + "'");
                mrt.register_names.push_back(tok.text);
            }
            if (mrt.register_names.empty())
                fail(line, line.at(0), "at least one register is required");
        } else if (head == "u") {
            // u SYM REG := RHS...
            if (line.at(3).text != ":=")
                fail(line, line.at(3), "expected ':='");
            RawUpdate u{line, line.at(1), line.at(2), {}};
            for (std::size_t i = 4; i < line.tokens.size(); ++i)
                u.rhs.push_back(line.tokens[i]);
            raw.push_back(std::move(u));
        } else {
            fail(line, line.at(0), "unknown section '" + head + "'");
        }
    }
    if (!saw_input)
        throw ValidationError("missing input line");
    if (!saw_output)
        throw ValidationError("missing output line");
    if (!saw_registers)
        throw ValidationError("missing registers line");

    const int n = mrt.register_count();
    for (Symbol a : mrt.input_alphabet)
        mrt.updates[a].assignment.assign(n, {});
    std::map<Symbol, std::vector<bool>> defined;
    for (Symbol a : mrt.input_alphabet)
        defined[a].assign(n, false);

    for (const RawUpdate& u : raw) {
        Symbol sym = u.symbol.text.size() == 1 ? u.symbol.text[0] : '\0';
        if (!alphabet_contains(mrt.input_alphabet, sym))
            fail(u.line, u.symbol,
                 "symbol '" + u.symbol.text + "' is not in the input alphabet");
        auto reg_it = registers.find(u.reg.text);
        if (reg_it == registers.end())
            fail(u.line, u.reg, "unknown register '" + u.reg.text + "'");
        if (defined[sym][reg_it->second])
            fail(u.line, u.reg, "duplicate update for register '" + u.reg.text +
                                    "' on '" + u.symbol.text + "'");
        defined[sym][reg_it->second] = true;
        std::vector<RhsItem>& rhs = mrt.updates[sym].assignment[reg_it->second];
        for (const Token& tok : u.rhs) {
            if (tok.text.front() == '"') {
                Word chunk = parse_quoted(u.line, tok);
                if (!chunk.empty())
                    rhs.push_back(RhsItem{chunk, -1});
            } else {
                auto it = registers.find(tok.text);
                if (it == registers.end())
                    fail(u.line, tok, "unknown register '" + tok.text + "'");
                rhs.push_back(RhsItem{Word(), it->second});
            }
        }
    }
    for (Symbol a : mrt.input_alphabet)
        for (int r = 0; r < n; ++r)
            if (!defined[a][r])
                throw ValidationError(std::string("register ") +
                                      mrt.register_names[r] +
                                      " has no update on '" + a + "'");
    for (const auto& [sym, update] : mrt.updates)
        if (auto violation = copyless_monotone_violation(update, n))
            throw ValidationError(std::string("update for '") + sym +
                                  "': " + *violation);
    mrt.validate();
    return mrt;
}

}  // namespace

MachineDocument parse_machine(const std::string& text) {
    std::vector<Line> lines = split_lines(text);
    if (lines.empty())
        throw ParseError(1, 1, "empty document");
    const Line& header = lines.front();
    if (header.at(0).text != "machine")
        fail(header, header.at(0), "document must start with a machine line");
    const std::string& kind = header.at(1).text;
    header.expect_end(2);

    MachineDocument doc;
    if (kind == "2dfa") {
        doc.kind = DocKind::TwoWayDfa;
        doc.value = parse_two_way(lines, doc.kind);
    } else if (kind == "2dft") {
        doc.kind = DocKind::TwoWayDft;
        doc.value = parse_two_way(lines, doc.kind);
    } else if (kind == "2rft-claim") {
        doc.kind = DocKind::TwoWayRftClaim;
        doc.value = parse_two_way(lines, doc.kind);
    } else if (kind == "seq") {
        doc.kind = DocKind::Sequential;
        doc.value = parse_sequential(lines);
    } else if (kind == "mrt") {
        doc.kind = DocKind::Mrt;
        doc.value = parse_mrt(lines);
    } else {
        fail(header, header.at(1), "unknown machine kind '" + kind + "'");
    }
    return doc;
}

namespace {

std::string spaced_alphabet(const std::string& alphabet) {
    std::string out;
    for (Symbol c : alphabet) {
        if (!out.empty())
            out += ' ';
        out += c;
    }
    return out;
}

const char* kind_name(DocKind kind) {
    switch (kind) {
        case DocKind::TwoWayDfa: return "2dfa";
        case DocKind::TwoWayDft: return "2dft";
        case DocKind::TwoWayRftClaim: return "2rft-claim";
        case DocKind::Sequential: return "seq";
        case DocKind::Mrt: return "mrt";
    }
    return "2dft";
}

}  // namespace

std::string serialize(const TwoWayMachine& m, DocKind kind) {
    std::ostringstream out;
    out << "machine " << kind_name(kind) << "\n";
    out << "input " << spaced_alphabet(m.input_alphabet) << "\n";
    if (kind != DocKind::TwoWayDfa)
        out << "output " << spaced_alphabet(m.output_alphabet) << "\n";
    out << "states";
    for (State q = 0; q < m.state_count(); ++q)
        out << ' ' << m.states.names[q] << (m.states.forward(q) ? ":>" : ":<");
    out << "\n";
    if (m.states.order) {
        out << "order";
        for (State q : *m.states.order)
            out << ' ' << m.states.names[q];
        out << "\n";
    }
    out << "initial " << m.states.names[m.initial] << "\n";
    if (!m.finals.empty()) {
        out << "final";
        for (State q : m.finals)
            out << ' ' << m.states.names[q];
        out << "\n";
    }
    std::string symbols = m.input_alphabet;
    symbols += kLeftMark;
    symbols += kRightMark;
    for (Symbol sym : symbols) {
        const auto* list = m.transitions(sym);
        if (!list)
            continue;
        for (const Transition& t : *list) {
            out << "t " << m.states.names[t.from] << ' ' << sym << " -> "
                << m.states.names[t.to];
            if (kind != DocKind::TwoWayDfa)
                out << " : \"" << t.out << '"';
            out << "\n";
        }
    }
    return out.str();
}

std::string serialize(const SequentialTransducer& seq) {
    std::ostringstream out;
    out << "machine seq\n";
    out << "input " << spaced_alphabet(seq.input_alphabet) << "\n";
    out << "output " << spaced_alphabet(seq.output_alphabet) << "\n";
    out << "states";
    for (const std::string& name : seq.state_names)
        out << ' ' << name;
    out << "\n";
    out << "initial " << seq.state_names[seq.initial] << "\n";
    for (State q = 0; q < seq.state_count(); ++q)
        out << "final " << seq.state_names[q] << " : \"" << seq.final_output[q]
            << "\"\n";
    for (Symbol a : seq.input_alphabet) {
        const auto& row = seq.transitions.at(a);
        for (State q = 0; q < seq.state_count(); ++q)
            out << "t " << seq.state_names[q] << ' ' << a << " -> "
                << seq.state_names[row[q].first] << " : \"" << row[q].second
                << "\"\n";
    }
    return out.str();
}

std::string serialize(const MonotoneRegisterTransducer& mrt) {
    std::ostringstream out;
    out << "machine mrt\n";
    out << "input " << spaced_alphabet(mrt.input_alphabet) << "\n";
    out << "output " << spaced_alphabet(mrt.output_alphabet) << "\n";
    out << "registers";
    for (const std::string& name : mrt.register_names)
        out << ' ' << name;
    out << "\n";
    for (Symbol a : mrt.input_alphabet) {
        const RegisterUpdate& update = mrt.updates.at(a);
        for (int r = 0; r < mrt.register_count(); ++r) {
            out << "u " << a << ' ' << mrt.register_names[r] << " :=";
            Word chunk;
            for (const RhsItem& item : update.assignment[r]) {
                if (item.is_register()) {
                    if (!chunk.empty()) {
                        out << " \"" << chunk << '"';
                        chunk.clear();
                    }
                    out << ' ' << mrt.register_names[item.reg];
                } else {
                    chunk += item.chunk;
                }
            }
            if (!chunk.empty())
                out << " \"" << chunk << '"';
            out << "\n";
        }
    }
    return out.str();
}

std::string serialize(const MachineDocument& doc) {
    switch (doc.kind) {
        case DocKind::Sequential:
            return serialize(doc.sequential());
        case DocKind::Mrt:
            return serialize(doc.mrt());
        default:
            return serialize(doc.two_way(), doc.kind);
    }
}

}  // namespace twoway
