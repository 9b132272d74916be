#include "twoway/oracles.hpp"

namespace twoway {

void for_each_word(const std::string& alphabet, int max_length,
                   const std::function<bool(const Word&)>& fn) {
    std::string alpha = canonical_alphabet(alphabet);
    if (!fn(Word()))
        return;
    if (alpha.empty())
        return;
    for (int length = 1; length <= max_length; ++length) {
        // Odometer over digit positions; wraps in lexicographic order.
        std::vector<int> digit(length, 0);
        while (true) {
            Word w(length, alpha[0]);
            for (int i = 0; i < length; ++i)
                w[i] = alpha[digit[i]];
            if (!fn(w))
                return;
            int i = length - 1;
            while (i >= 0 && digit[i] == static_cast<int>(alpha.size()) - 1)
                digit[i--] = 0;
            if (i < 0)
                break;
            ++digit[i];
        }
    }
}

std::vector<Word> enumerate_words(const std::string& alphabet, int max_length) {
    std::vector<Word> words;
    for_each_word(alphabet, max_length, [&](const Word& w) {
        words.push_back(w);
        return true;
    });
    return words;
}

EquivalenceReport semantic_equiv(const Evaluator& left, const Evaluator& right,
                                 const std::string& alphabet, int max_length) {
    EquivalenceReport report;
    report.max_length = max_length;
    report.equal = true;
    for_each_word(alphabet, max_length, [&](const Word& w) {
        ++report.words_checked;
        std::optional<Word> a = left(w);
        std::optional<Word> b = right(w);
        if (a != b) {
            report.equal = false;
            report.counterexample = EquivalenceReport::Mismatch{w, a, b};
            return false;
        }
        return true;
    });
    return report;
}

std::vector<Word> language_of(const TwoWayMachine& m, int max_length) {
    std::vector<Word> accepted;
    for_each_word(m.input_alphabet, max_length, [&](const Word& w) {
        if (run(m, w).status == RunStatus::Accepted)
            accepted.push_back(w);
        return true;
    });
    return accepted;
}

Evaluator transducer_evaluator(const TwoWayMachine& m) {
    // Copy the machine into the closure so the evaluator owns its data.
    return [machine = m](const Word& w) -> std::optional<Word> {
        RunResult r = run(machine, w);
        if (r.status != RunStatus::Accepted)
            return std::nullopt;
        return r.output;
    };
}

}  // namespace twoway
