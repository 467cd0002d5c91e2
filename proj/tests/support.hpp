#pragma once

// Fixtures and brute-force oracles shared by the unit and acceptance
// tests. The oracles here deliberately avoid the library's own
// membership code.

#include <algorithm>
#include <map>
#include <set>

#include "omegadet/automaton.hpp"
#include "omegadet/lasso.hpp"
#include "omegadet/random_automaton.hpp"

namespace omegadet::test
{
  // q0 -a-> q1, q0 -b-> q0, q1 -a-> q1, q1 -b-> q0, accepting q1
  inline Automaton
  infinitely_many_a()
  {
    Automaton a(Alphabet::from_symbols({"a", "b"}), 2,
                BuchiAcceptance{make_state_set(2, {1})});
    a.add_edge(0, 0, 1);
    a.add_edge(0, 1, 0);
    a.add_edge(1, 0, 1);
    a.add_edge(1, 1, 0);
    return a;
  }

  // s0 -a-> {s0, s1}, s1 -a-> s1, accepting s1
  inline Automaton
  two_state_chain()
  {
    Automaton a(Alphabet::from_symbols({"a"}), 2, BuchiAcceptance{make_state_set(2, {1})});
    a.add_edge(0, 0, 0);
    a.add_edge(0, 0, 1);
    a.add_edge(1, 0, 1);
    return a;
  }

  inline Automaton
  single_loop_buchi(bool accepting)
  {
    Automaton a(Alphabet::from_symbols({"a"}), 1,
                BuchiAcceptance{accepting ? make_state_set(1, {0}) : make_state_set(1)});
    a.add_edge(0, 0, 0);
    return a;
  }

  // one state looping on {a, b} with the given Streett pairs (as bitmasks
  // over the single state)
  inline Automaton
  single_loop_streett(std::vector<std::pair<bool, bool>> request_guard)
  {
    StreettAcceptance acc;
    for (auto [r, g] : request_guard)
      acc.pairs.push_back({r ? make_state_set(1, {0}) : make_state_set(1),
                           g ? make_state_set(1, {0}) : make_state_set(1)});
    Automaton a(Alphabet::from_symbols({"a", "b"}), 1, acc);
    a.add_edge(0, 0, 0);
    a.add_edge(0, 1, 0);
    return a;
  }

  struct Corpus
  {
    std::vector<Automaton> automata;
    std::vector<std::uint64_t> seeds;
  };

  // Random NBWs cycling n through 1..max_states.
  inline Corpus
  buchi_corpus(std::size_t count, std::size_t max_states, std::uint64_t seed)
  {
    Corpus c;
    for (std::size_t i = 0; i < count; ++i)
      {
        RandomSpec spec;
        spec.states = 1 + i % max_states;
        spec.symbols = 2;
        c.seeds.push_back(seed + i);
        c.automata.push_back(random_nbw(spec, seed + i));
      }
    return c;
  }

  // Random NSWs cycling n through 1..max_states and k through 0..max_pairs.
  inline Corpus
  streett_corpus(std::size_t count, std::size_t max_states, std::size_t max_pairs,
                 std::uint64_t seed)
  {
    Corpus c;
    for (std::size_t i = 0; i < count; ++i)
      {
        RandomSpec spec;
        spec.states = 1 + i % max_states;
        spec.pairs = (i / max_states) % (max_pairs + 1);
        spec.symbols = 2;
        c.seeds.push_back(seed + i);
        c.automata.push_back(random_nsw(spec, seed + i));
      }
    return c;
  }

  // Letter read at position i of u v^ω.
  inline SymbolId
  letter(const Lasso& l, std::size_t i)
  {
    if (i < l.prefix.size())
      return l.prefix[i];
    return l.period[(i - l.prefix.size()) % l.period.size()];
  }

  // Positions of the product graph: [0, |u|+|v|), wrapping back to |u|.
  inline std::size_t
  next_position(const Lasso& l, std::size_t p)
  {
    std::size_t total = l.prefix.size() + l.period.size();
    return p + 1 == total ? l.prefix.size() : p + 1;
  }

  // Product states (state, position) reachable from `from`, including the
  // start points themselves, restricted to states not in `blocked`.
  inline std::set<std::pair<StateId, std::size_t>>
  reach(const Automaton& a, const Lasso& l, std::vector<std::pair<StateId, std::size_t>> from,
        const StateSet& blocked)
  {
    std::set<std::pair<StateId, std::size_t>> seen;
    while (!from.empty())
      {
        auto [q, p] = from.back();
        from.pop_back();
        if (blocked.test(q) || !seen.insert({q, p}).second)
          continue;
        for (StateId t : a.succ(q, letter(l, p)))
          from.push_back({t, next_position(l, p)});
      }
    return seen;
  }

  // Büchi membership by nested reachability: some accepting product node
  // in the periodic part is reachable and lies on a cycle.
  inline bool
  brute_buchi_member(const Automaton& a, const Lasso& l)
  {
    const auto& alpha = std::get<BuchiAcceptance>(a.acceptance).accepting;
    StateSet none(a.state_count);
    auto reachable = reach(a, l, {{a.initial, 0}}, none);
    for (auto [q, p] : reachable)
      {
        if (!alpha.test(q) || p < l.prefix.size())
          continue;
        std::vector<std::pair<StateId, std::size_t>> succ;
        for (StateId t : a.succ(q, letter(l, p)))
          succ.push_back({t, next_position(l, p)});
        if (reach(a, l, succ, none).count({q, p}))
          return true;
      }
    return false;
  }

  // Streett membership by brute force over witness sets: guess J, delete
  // the guards outside J, and look for a cycle hitting every R_j, j ∈ J,
  // inside one strongly connected piece of the remaining product.
  inline bool
  brute_streett_member(const Automaton& a, const Lasso& l)
  {
    const auto& pairs = std::get<StreettAcceptance>(a.acceptance).pairs;
    const std::size_t k = pairs.size();
    StateSet none(a.state_count);
    auto reachable = reach(a, l, {{a.initial, 0}}, none);
    for (std::uint32_t J = 0; J < (1u << k); ++J)
      {
        StateSet blocked(a.state_count);
        for (std::size_t j = 0; j < k; ++j)
          if (!((J >> j) & 1u))
            blocked |= pairs[j].guard;
        for (auto [q, p] : reachable)
          {
            if (blocked.test(q) || p < l.prefix.size())
              continue;
            // the cycle component of (q, p) in the unblocked product
            auto fwd = reach(a, l, {{q, p}}, blocked);
            std::vector<std::pair<StateId, std::size_t>> component;
            for (auto node : fwd)
              {
                std::vector<std::pair<StateId, std::size_t>> succ;
                for (StateId t : a.succ(node.first, letter(l, node.second)))
                  succ.push_back({t, next_position(l, node.second)});
                if (reach(a, l, succ, blocked).count({q, p}))
                  component.push_back(node);
              }
            if (component.empty())
              continue;
            bool all = true;
            for (std::size_t j = 0; j < k && all; ++j)
              if ((J >> j) & 1u)
                all = std::any_of(component.begin(), component.end(),
                                  [&](auto node) { return pairs[j].request.test(node.first); });
            if (all)
              return true;
          }
      }
    return false;
  }

  // Deterministic run, simulated for long enough that the set of states
  // seen at period boundaries repeats, then the states of one full loop.
  inline StateSet
  brute_inf_states(const Automaton& d, const Lasso& l)
  {
    StateId q = d.initial;
    for (SymbolId x : l.prefix)
      q = d.succ(q, x).front();
    std::map<StateId, std::size_t> boundary;
    std::vector<StateId> order;
    while (!boundary.count(q))
      {
        boundary[q] = order.size();
        order.push_back(q);
        for (SymbolId x : l.period)
          q = d.succ(q, x).front();
      }
    StateSet inf(d.state_count);
    StateId r = q;
    do
      {
        for (SymbolId x : l.period)
          {
            inf.set(r);
            r = d.succ(r, x).front();
          }
      }
    while (r != q);
    return inf;
  }

  inline bool
  brute_accepts(const Acceptance& acc, const StateSet& inf)
  {
    auto hits = [&](const StateSet& s) { return (s & inf).any(); };
    if (auto* p = std::get_if<ParityAcceptance>(&acc))
      {
        std::vector<unsigned> seen;
        for (std::size_t q = 0; q < inf.size(); ++q)
          if (inf[q])
            seen.push_back(p->priority[q]);
        return !seen.empty() && *std::min_element(seen.begin(), seen.end()) % 2 == 0;
      }
    if (auto* r = std::get_if<RabinAcceptance>(&acc))
      {
        for (const auto& pair : r->pairs)
          if (!hits(pair.fin) && hits(pair.inf))
            return true;
        return false;
      }
    if (auto* s = std::get_if<StreettAcceptance>(&acc))
      {
        for (const auto& pair : s->pairs)
          if (hits(pair.guard) && !hits(pair.request))
            return false;
        return true;
      }
    return hits(std::get<BuchiAcceptance>(acc).accepting);
  }

  // Reference verdict for any automaton the library produces or reads.
  inline bool
  brute_member(const Automaton& a, const Lasso& l)
  {
    if (a.deterministic)
      {
        if (!a.is_complete())
          throw std::invalid_argument("brute_member: incomplete deterministic automaton");
        return brute_accepts(a.acceptance, brute_inf_states(a, l));
      }
    if (has_acceptance<BuchiAcceptance>(a))
      return brute_buchi_member(a, l);
    return brute_streett_member(a, l);
  }

  // L_k: the least symbol recurring forever is even. Symbols "1".."k"
  // carry ids 0..k-1.
  inline bool
  in_lk(const Lasso& l)
  {
    SymbolId least = *std::min_element(l.period.begin(), l.period.end());
    return (least + 1) % 2 == 0;
  }
}
