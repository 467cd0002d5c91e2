#pragma once

#include <iosfwd>

namespace omegadet
{
  /// Entry point of the command-line tool. Returns 0 on success, 1 for a
  /// negative verdict or a counterexample, 2 for usage and format errors.
  int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
}
