#pragma once

// Text format for machines and DOT diagram emission.
//
// Machine files are line-oriented: `#` starts a comment, tokens are
// whitespace-separated, output words are double-quoted (no spaces, "" for
// the empty word). The header line `machine KIND` selects the dialect:
//
//   machine 2dft                  # or 2dfa, 2rft-claim
//   input a b c
//   output a b c                  # omitted for 2dfa
//   states 0:> 1:< 2:< 3:>        # :> forward, :< backward
//   order 0 1 2 3                 # optional
//   initial 0
//   final 3
//   t 0 a -> 0 : ""               # the `: "..."` part is omitted for 2dfa
//   t 0 ^ -> 0 : ""               # ^ = left marker, $ = right marker
//
//   machine seq
//   input a b c
//   output a b c
//   states 1 2                    # one-way states carry no direction
//   initial 1
//   t 1 a -> 1 : "a"
//   final 1 : "ab"                # per-state final output, default ""
//
//   machine mrt
//   input a b c
//   output a b c d e
//   registers X Y                 # first register is the output register
//   u a X := "a" X "b"            # register update, one per (letter, register)
//   u a Y := Y "a"
//
// `^` and `$` are reserved for the markers and are forbidden in alphabets.

#include <string>
#include <variant>

#include "twoway/constructions.hpp"
#include "twoway/core.hpp"

namespace twoway {

enum class DocKind { TwoWayDfa, TwoWayDft, TwoWayRftClaim, Sequential, Mrt };

struct MachineDocument {
    DocKind kind = DocKind::TwoWayDft;
    std::variant<TwoWayMachine, SequentialTransducer, MonotoneRegisterTransducer>
        value;

    const TwoWayMachine& two_way() const {
        return std::get<TwoWayMachine>(value);
    }
    const SequentialTransducer& sequential() const {
        return std::get<SequentialTransducer>(value);
    }
    const MonotoneRegisterTransducer& mrt() const {
        return std::get<MonotoneRegisterTransducer>(value);
    }
};

/// Parses and structurally validates one machine document.
/// Throws ParseError (syntax) and ValidationError (unresolved states,
/// reserved symbol misuse, non-forward initial state, ...).
MachineDocument parse_machine(const std::string& text);

/// Canonical text form: fixed section order, sorted alphabets, transitions
/// sorted by (symbol, source, target, output). parse(serialize(d)) == d.
std::string serialize(const MachineDocument&);
std::string serialize(const TwoWayMachine&, DocKind kind);
std::string serialize(const SequentialTransducer&);
std::string serialize(const MonotoneRegisterTransducer&);

/// DOT graph of one symbol's transition profile: left/right boundary columns
/// placed in extended order, output words as edge labels. Falls back to the
/// declaration order when the machine declares no state order. Output is
/// byte-stable.
std::string emit_dot_profile(const TwoWayMachine&, Symbol);

/// DOT graph of a run: one column of states per tape boundary, every
/// transition of each cell's symbol drawn, the executed steps highlighted.
/// Requires a deterministic machine; errors as run.
std::string emit_dot_run(const TwoWayMachine&, const Word& input);

}  // namespace twoway
