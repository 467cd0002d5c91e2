#pragma once

// Breadth-first construction of a deterministic automaton from a step
// function. States are numbered in discovery order, initial first.

#include <deque>
#include <unordered_map>
#include <vector>

#include <boost/functional/hash.hpp>

#include "omegadet/automaton.hpp"

namespace omegadet::detail
{
  using Key = std::vector<std::uint64_t>;

  struct KeyHash
  {
    std::size_t operator()(const Key& k) const { return boost::hash_range(k.begin(), k.end()); }
  };

  template<class State>
  struct Exploration
  {
    std::vector<State> states;
    std::vector<StateId> table;  // [state * |Σ| + symbol]
  };

  template<class State, class StepFn, class KeyFn>
  Exploration<State>
  explore(State initial, std::size_t sigma, StepFn step, KeyFn key)
  {
    Exploration<State> out;
    std::unordered_map<Key, StateId, KeyHash> index;
    index.emplace(key(initial), 0);
    out.states.push_back(std::move(initial));
    for (std::size_t cur = 0; cur < out.states.size(); ++cur)
      for (SymbolId a = 0; a < sigma; ++a)
        {
          State next = step(out.states[cur], a);
          auto [it, fresh] = index.emplace(key(next), static_cast<StateId>(out.states.size()));
          if (fresh)
            out.states.push_back(std::move(next));
          out.table.push_back(it->second);
        }
    return out;
  }
}
