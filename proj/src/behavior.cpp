#include "twoway/behavior.hpp"

#include <bit>

namespace twoway {

bool Behavior::empty() const {
    for (std::uint64_t w : bits_)
        if (w)
            return false;
    return true;
}

std::size_t Behavior::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : bits_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::vector<std::pair<State, State>> Behavior::pairs() const {
    std::vector<std::pair<State, State>> out;
    for (State q = 0; q < n_; ++q)
        for (State r = 0; r < n_; ++r)
            if (test(q, r))
                out.emplace_back(q, r);
    return out;
}

bool Behavior::is_partial_function() const {
    for (State q = 0; q < n_; ++q) {
        int images = 0;
        for (State r = 0; r < n_; ++r)
            if (test(q, r) && ++images > 1)
                return false;
    }
    return true;
}

bool Behavior::is_injective() const {
    for (State r = 0; r < n_; ++r) {
        int sources = 0;
        for (State q = 0; q < n_; ++q)
            if (test(q, r) && ++sources > 1)
                return false;
    }
    return true;
}

std::size_t Behavior::hash() const {
    // FNV-1a over the words, seeded with the dimension.
    std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(n_);
    for (std::uint64_t w : bits_) {
        h ^= static_cast<std::size_t>(w);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace twoway
