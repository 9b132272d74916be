#pragma once

// Brute-force oracles: bounded-length word enumeration and semantic
// comparison of word functions. These are the reference implementations the
// constructions are validated against.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twoway/core.hpp"

namespace twoway {

/// A partial word function: empty result = undefined on that input.
using Evaluator = std::function<std::optional<Word>(const Word&)>;

/// All words over the alphabet up to the given length, shortest first and
/// lexicographic within one length (the alphabet is sorted first).
std::vector<Word> enumerate_words(const std::string& alphabet, int max_length);

/// Calls fn on every word in enumeration order until fn returns false.
void for_each_word(const std::string& alphabet, int max_length,
                   const std::function<bool(const Word&)>& fn);

struct EquivalenceReport {
    bool equal = false;
    struct Mismatch {
        Word input;
        std::optional<Word> left;
        std::optional<Word> right;
    };
    std::optional<Mismatch> counterexample;  // least in enumeration order
    std::size_t words_checked = 0;
    int max_length = 0;
};

/// Compares two partial word functions on every word up to max_length.
/// Two undefineds agree; defined vs undefined or different outputs is the
/// first counterexample.
EquivalenceReport semantic_equiv(const Evaluator& left, const Evaluator& right,
                                 const std::string& alphabet, int max_length);

/// Accepted words up to the given length, in enumeration order.
std::vector<Word> language_of(const TwoWayMachine&, int max_length);

/// input -> output when the machine accepts, undefined otherwise.
/// (For automata the output is the empty word on acceptance.)
Evaluator transducer_evaluator(const TwoWayMachine&);

}  // namespace twoway
