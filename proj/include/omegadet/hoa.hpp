#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "omegadet/automaton.hpp"

namespace omegadet
{
  /// Parse failure or use of a construct outside the supported subset.
  class HoaError : public std::runtime_error
  {
  public:
    HoaError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line), column_(column)
    {
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
  };

  /// Reads a HOA v1 document restricted to: explicit complete labels
  /// (a conjunction assigning every AP), state-based marks, a single start
  /// state, and acc-name one of Buchi, Rabin k, Streett k,
  /// parity min even K with the matching standard formula. The optional
  /// `symbol-names:` header restores symbol names.
  Automaton parse_hoa(std::string_view text);

  /// Byte-stable HOA text. Alphabets without APs must have a power-of-two
  /// size and are written over synthetic APs p0, p1, ...
  std::string emit_hoa(const Automaton& a);
}
