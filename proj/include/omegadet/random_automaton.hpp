#pragma once

#include <cstdint>

#include "omegadet/automaton.hpp"

namespace omegadet
{
  /// Knobs of the seeded random generator. Densities are per mille: each
  /// (state, symbol, target) triple is an edge with probability
  /// transition_density/1000, each state joins each acceptance set with
  /// probability acceptance_density/1000.
  struct RandomSpec
  {
    std::size_t states = 3;
    std::size_t symbols = 2;
    std::size_t pairs = 0;  // Streett only
    unsigned transition_density = 450;
    unsigned acceptance_density = 400;
  };

  /// Symbols are named "a", "b", ... ; reproducible for a given seed.
  Automaton random_nbw(const RandomSpec& spec, std::uint64_t seed);
  Automaton random_nsw(const RandomSpec& spec, std::uint64_t seed);
}
