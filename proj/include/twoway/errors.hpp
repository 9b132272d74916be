#pragma once

#include <stdexcept>
#include <string>

namespace twoway {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A word or transition uses a symbol outside the declared alphabet.
struct AlphabetError : Error { using Error::Error; };

/// An operation that needs a deterministic machine was handed one with two
/// applicable transitions for the same state and symbol.
struct NondeterministicMachine : Error { using Error::Error; };

/// A state index or name does not resolve inside the machine at hand.
struct UnknownState : Error { using Error::Error; };

/// The operation needs a total order on the states and none is present.
struct MissingOrder : Error { using Error::Error; };

/// Exhaustive enumeration over the state space was refused as too large.
struct StateSpaceTooLarge : Error { using Error::Error; };

/// A closure computation grew past its element cap.
struct CapExceeded : Error { using Error::Error; };

/// A construction that needs reversible input (or promises reversible
/// output) hit a violation.
struct NotReversible : Error { using Error::Error; };

/// A construction that needs planar input (or promises planar output) hit a
/// crossing; the message carries the witness.
struct NotPlanar : Error { using Error::Error; };

/// Output alphabet of the first machine differs from the input alphabet of
/// the second.
struct AlphabetMismatch : Error { using Error::Error; };

/// The flip-flop translation takes exactly two states.
struct WrongStateCount : Error { using Error::Error; };

/// The sequential transducer's transition monoid contains a nontrivial
/// permutation.
struct NotAperiodic : Error { using Error::Error; };

/// A register update duplicates a register or uses them out of order.
struct NotCopylessMonotone : Error { using Error::Error; };

/// Structurally invalid machine description (unknown state, reserved symbol
/// misuse, non-forward initial state, ...).
struct ValidationError : Error { using Error::Error; };

/// Syntax error in a machine file; positions are 1-based.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

}  // namespace twoway
