#pragma once

#include <span>
#include <string>
#include <vector>

#include "omegadet/automaton.hpp"

namespace omegadet
{
  /// Ultimately periodic word prefix · period^ω. The period is nonempty.
  struct Lasso
  {
    std::vector<SymbolId> prefix;
    std::vector<SymbolId> period;

    bool operator==(const Lasso&) const = default;
  };

  std::string to_string(const Lasso& l, const Alphabet& sigma);

  /// Every (u, v) with |u| <= max_prefix and 1 <= |v| <= max_period;
  /// prefixes outer, periods inner, both length-lexicographic.
  std::vector<Lasso> enumerate_lassos(const Alphabet& sigma, std::size_t max_prefix,
                                      std::size_t max_period);

  struct CycleVerdict
  {
    bool accepted = false;
    StateSet cycle_states;
    std::vector<StateId> cycle;   // states on the closed loop, in run order
    std::size_t entry_steps = 0;  // letters read until the loop closes
  };

  /// Run of a deterministic complete automaton on a lasso; the acceptance
  /// condition is evaluated on the states of the eventual cycle.
  CycleVerdict run_deterministic(const Automaton& d, const Lasso& l);

  /// Some run visits the Büchi set infinitely often.
  bool nbw_member(const Automaton& a, const Lasso& l);

  /// Some run satisfies every Streett pair.
  bool nsw_member(const Automaton& a, const Lasso& l);

  /// Routes deterministic automata to run_deterministic and nondeterministic
  /// Büchi/Streett automata to the product-graph oracles.
  bool member(const Automaton& a, const Lasso& l);

  struct Disagreement
  {
    Lasso lasso;
    bool left = false;
    bool right = false;
  };

  struct DiffReport
  {
    std::size_t agreed = 0;
    std::vector<Disagreement> disagreements;

    std::size_t examined() const { return agreed + disagreements.size(); }
  };

  DiffReport differential_check(const Automaton& left, const Automaton& right,
                                std::span<const Lasso> lassos);
}
