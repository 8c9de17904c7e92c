#pragma once

#include <stdexcept>
#include <string>

namespace domgame {

// Invalid generator/family parameters or malformed inputs.
struct ParamError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Text-format parse failure; line is 1-based.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

// A move that does not dominate any new vertex, or a move requested in a
// terminal position. Signals a caller bug or a cheating player.
struct MoveError : std::logic_error {
  using std::logic_error::logic_error;
};

// Instance exceeds a solver size cap.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check of the Dominator strategy failed. Should be
// unreachable on minimum-degree-2 inputs; reaching it means the terminal
// classification (or the theory) is wrong for this graph.
struct StrategyAssertion : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace domgame
