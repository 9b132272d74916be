#pragma once

// Behaviors: binary relations on the state set, represented as |Q|^2 bit
// sets. The behavior of a tape segment relates q to r when a head entering
// the segment in state q (from the side q reads toward) eventually leaves it
// in state r (on the side r moves toward).

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "twoway/core.hpp"

namespace twoway {

class Behavior {
  public:
    Behavior() = default;
    explicit Behavior(int states)
        : n_(states), bits_((static_cast<std::size_t>(states) * states + 63) / 64, 0) {}

    static Behavior identity(int states) {
        Behavior b(states);
        for (State q = 0; q < states; ++q) b.set(q, q);
        return b;
    }

    int states() const { return n_; }

    bool test(State q, State r) const {
        std::size_t i = index(q, r);
        return (bits_[i >> 6] >> (i & 63)) & 1;
    }

    void set(State q, State r, bool value = true) {
        std::size_t i = index(q, r);
        if (value)
            bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool empty() const;
    std::size_t count() const;
    /// All related pairs, ordered by (q, r).
    std::vector<std::pair<State, State>> pairs() const;

    /// At most one r per q.
    bool is_partial_function() const;
    /// At most one q per r.
    bool is_injective() const;

    std::size_t hash() const;

    friend bool operator==(const Behavior&, const Behavior&) = default;
    friend auto operator<=>(const Behavior&, const Behavior&) = default;

  private:
    std::size_t index(State q, State r) const {
        return static_cast<std::size_t>(q) * n_ + r;
    }

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct BehaviorHash {
    std::size_t operator()(const Behavior& b) const { return b.hash(); }
};

}  // namespace twoway
