#include "omegadet/random_automaton.hpp"

#include <random>
#include <stdexcept>

namespace omegadet
{
  namespace
  {
    // Draws from the raw engine only, so sequences do not depend on the
    // standard library's distribution implementations.
    struct Coin
    {
      std::mt19937_64 engine;
      bool operator()(unsigned per_mille) { return engine() % 1000 < per_mille; }
    };

    Alphabet
    letters(std::size_t count)
    {
      if (count == 0 || count > 26)
        throw std::invalid_argument("random automata use between 1 and 26 symbols");
      std::vector<std::string> names;
      for (std::size_t i = 0; i < count; ++i)
        names.emplace_back(1, static_cast<char>('a' + i));
      return Alphabet::from_symbols(std::move(names));
    }

    StateSet
    random_set(Coin& coin, std::size_t n, unsigned density)
    {
      StateSet s(n);
      for (std::size_t q = 0; q < n; ++q)
        if (coin(density))
          s.set(q);
      return s;
    }

    void
    random_edges(Automaton& a, Coin& coin, unsigned density)
    {
      for (StateId s = 0; s < a.state_count; ++s)
        for (SymbolId x = 0; x < a.alphabet.size(); ++x)
          for (StateId t = 0; t < a.state_count; ++t)
            if (coin(density))
              a.add_edge(s, x, t);
    }
  }

  Automaton
  random_nbw(const RandomSpec& spec, std::uint64_t seed)
  {
    if (spec.states == 0)
      throw std::invalid_argument("random_nbw: at least one state required");
    Coin coin{std::mt19937_64(seed)};
    StateSet acc = random_set(coin, spec.states, spec.acceptance_density);
    Automaton a(letters(spec.symbols), spec.states, BuchiAcceptance{acc});
    random_edges(a, coin, spec.transition_density);
    return a;
  }

  Automaton
  random_nsw(const RandomSpec& spec, std::uint64_t seed)
  {
    if (spec.states == 0)
      throw std::invalid_argument("random_nsw: at least one state required");
    Coin coin{std::mt19937_64(seed)};
    StreettAcceptance acc;
    for (std::size_t i = 0; i < spec.pairs; ++i)
      {
        StateSet r = random_set(coin, spec.states, spec.acceptance_density);
        StateSet g = random_set(coin, spec.states, spec.acceptance_density);
        acc.pairs.push_back({std::move(r), std::move(g)});
      }
    Automaton a(letters(spec.symbols), spec.states, std::move(acc));
    random_edges(a, coin, spec.transition_density);
    return a;
  }
}
