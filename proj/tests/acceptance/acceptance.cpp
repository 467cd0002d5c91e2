// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every bound below is exact; there are no tolerances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "omegadet/bounds.hpp"
#include "omegadet/constructions.hpp"
#include "omegadet/hoa.hpp"
#include "omegadet/lasso.hpp"
#include "omegadet/parity.hpp"
#include "omegadet/safra.hpp"
#include "support.hpp"

using namespace omegadet;

namespace
{
  constexpr std::uint64_t buchi_seed = 20000;
  constexpr std::size_t buchi_count = 200;
  constexpr std::size_t buchi_max_states = 4;

  constexpr std::uint64_t streett_seed = 30000;
  constexpr std::size_t streett_count = 100;
  constexpr std::size_t streett_max_states = 3;
  constexpr std::size_t streett_max_pairs = 2;

  constexpr std::size_t random_steps = 10000;

  struct Outcome
  {
    bool pass;
    std::string detail;
  };

  unsigned
  max_priority(const Automaton& d)
  {
    const auto& p = std::get<ParityAcceptance>(d.acceptance).priority;
    return *std::max_element(p.begin(), p.end());
  }

  std::string
  describe(const Automaton& a, std::uint64_t seed)
  {
    return "seed " + std::to_string(seed) + " (n=" + std::to_string(a.state_count) + ")";
  }

  struct Suite
  {
    test::Corpus nbw = test::buchi_corpus(buchi_count, buchi_max_states, buchi_seed);
    test::Corpus nsw =
      test::streett_corpus(streett_count, streett_max_states, streett_max_pairs, streett_seed);
    std::vector<Automaton> nbw_dpw;
    std::vector<Automaton> fixtures{test::infinitely_many_a(), build_lk_fixture(2),
                                    build_lk_fixture(3)};
    std::vector<Automaton> fixture_dpw;

    Suite()
    {
      for (const auto& a : nbw.automata)
        nbw_dpw.push_back(nbw_to_dpw(a));
      for (const auto& a : fixtures)
        fixture_dpw.push_back(nbw_to_dpw(a));
    }

    // Runs `check(source, dpw, lasso)` over the corpus and fixtures on
    // |u| <= 3, |v| <= 4; stops at the first failure.
    Outcome
    over_buchi_suite(const std::function<bool(const Automaton&, const Automaton&, const Lasso&)>&
                       check)
    {
      std::size_t lassos = 0;
      auto one = [&](const Automaton& a, const Automaton& d, const std::string& name) {
        for (const auto& l : enumerate_lassos(a.alphabet, 3, 4))
          {
            ++lassos;
            if (!check(a, d, l))
              return name + " on " + to_string(l, a.alphabet);
          }
        return std::string();
      };
      for (std::size_t i = 0; i < nbw.automata.size(); ++i)
        {
          auto bad = one(nbw.automata[i], nbw_dpw[i], describe(nbw.automata[i], nbw.seeds[i]));
          if (!bad.empty())
            return {false, "disagreement: " + bad};
        }
      const char* names[] = {"infinitely-many-a", "L_2", "L_3"};
      for (std::size_t i = 0; i < fixtures.size(); ++i)
        {
          auto bad = one(fixtures[i], fixture_dpw[i], names[i]);
          if (!bad.empty())
            return {false, "disagreement: " + bad};
        }
      return {true, std::to_string(lassos) + " lasso checks, 0 disagreements"};
    }

    Outcome buchi_state_bound()
    {
      std::size_t worst_states = 0;
      double worst_ratio = 0;
      std::vector<std::string> failures;
      for (std::size_t i = 0; i < nbw.automata.size(); ++i)
        {
          const auto& a = nbw.automata[i];
          const auto& d = nbw_dpw[i];
          const std::size_t n = a.state_count;
          BigCount bound = compact_buchi_bound(n);
          worst_states = std::max(worst_states, d.state_count);
          worst_ratio =
            std::max(worst_ratio, static_cast<double>(d.state_count) / bound.convert_to<double>());
          if (BigCount(d.state_count) > bound || max_priority(d) > 2 * n - 1)
            failures.push_back(describe(a, nbw.seeds[i]) + ": " + std::to_string(d.state_count)
                               + " states vs bound " + bound.str() + ", max priority "
                               + std::to_string(max_priority(d)));
        }
      std::ostringstream os;
      os << buchi_count << " automata, largest DPW " << worst_states
         << " states, worst states/bound " << worst_ratio;
      if (!failures.empty())
        os << "; " << failures.size() << " over bound, first " << failures.front();
      return {failures.empty(), os.str()};
    }

    Outcome buchi_language()
    {
      return over_buchi_suite([](const Automaton& a, const Automaton& d, const Lasso& l) {
        return run_deterministic(d, l).accepted == nbw_member(a, l);
      });
    }

    Outcome reference_agreement()
    {
      const Automaton* last = nullptr;
      Automaton drw;
      return over_buchi_suite([&](const Automaton& a, const Automaton& d, const Lasso& l) {
        if (last != &a)
          {
            last = &a;
            drw = safra_determinize(a);
          }
        return run_deterministic(drw, l).accepted == run_deterministic(d, l).accepted;
      });
    }

    Outcome complementation()
    {
      const Automaton* last = nullptr;
      Automaton comp;
      return over_buchi_suite([&](const Automaton& a, const Automaton& d, const Lasso& l) {
        if (last != &a)
          {
            last = &a;
            comp = dualize_parity(d);
          }
        return run_deterministic(comp, l).accepted != nbw_member(a, l);
      });
    }

    Outcome streett_state_bound()
    {
      std::vector<std::string> failures;
      std::size_t worst = 0;
      for (std::size_t i = 0; i < nsw.automata.size(); ++i)
        {
          const auto& a = nsw.automata[i];
          const std::size_t n = a.state_count;
          const std::size_t k = std::get<StreettAcceptance>(a.acceptance).pairs.size();
          Automaton d = nsw_to_dpw(a);
          worst = std::max(worst, d.state_count);
          BigCount bound = compact_streett_bound(n, k);
          if (BigCount(d.state_count) > bound || max_priority(d) > 2 * n * (k + 1) - 1)
            failures.push_back(describe(a, nsw.seeds[i]) + " k=" + std::to_string(k) + ": "
                               + std::to_string(d.state_count) + " states vs bound "
                               + bound.str());
        }
      std::ostringstream os;
      os << streett_count << " automata, largest DPW " << worst << " states";
      if (!failures.empty())
        os << "; " << failures.size() << " over bound, first " << failures.front();
      return {failures.empty(), os.str()};
    }

    Outcome streett_three_way()
    {
      std::size_t lassos = 0;
      std::size_t largest_union_dpw = 0;
      for (std::size_t i = 0; i < nsw.automata.size(); ++i)
        {
          const auto& a = nsw.automata[i];
          Automaton direct = nsw_to_dpw(a);
          Automaton via_union = nbw_to_dpw(nsw_witness_union_nbw(a));
          largest_union_dpw = std::max(largest_union_dpw, via_union.state_count);
          for (const auto& l : enumerate_lassos(a.alphabet, 2, 4))
            {
              ++lassos;
              bool oracle = nsw_member(a, l);
              bool x = run_deterministic(direct, l).accepted;
              bool y = run_deterministic(via_union, l).accepted;
              if (x != oracle || y != oracle)
                return {false, "disagreement: " + describe(a, nsw.seeds[i]) + " on "
                                 + to_string(l, a.alphabet) + " (direct " + std::to_string(x)
                                 + ", union " + std::to_string(y) + ", oracle "
                                 + std::to_string(oracle) + ")"};
            }
        }
      return {true, std::to_string(lassos) + " lasso checks, 0 disagreements, largest union DPW "
                      + std::to_string(largest_union_dpw) + " states"};
    }

    // One random step from a tree reached by a random walk of up to
    // eight letters.
    template<class Init, class Step, class Check>
    std::string random_step_failures(const test::Corpus& corpus, std::mt19937_64& rng,
                                     Init init, Step step, Check check)
    {
      for (std::size_t i = 0; i < random_steps; ++i)
        {
          const Automaton& a = corpus.automata[rng() % corpus.automata.size()];
          CompactTree t = init(a);
          std::size_t walk = rng() % 9;
          bool sunk = false;
          for (std::size_t w = 0; w < walk && !sunk; ++w)
            {
              CompactStep s = step(t, static_cast<SymbolId>(rng() % a.alphabet.size()), a);
              if (s.tree)
                t = *s.tree;
              else
                sunk = true;
            }
          if (sunk)
            {
              --i;
              continue;
            }
          CompactStep s = step(t, static_cast<SymbolId>(rng() % a.alphabet.size()), a);
          if (!s.tree)
            {
              if (s.e != 1 || s.priority != sink_priority)
                return "sink step with e=" + std::to_string(s.e);
              continue;
            }
          std::vector<std::string> issues = check(*s.tree, a);
          if (s.priority % 2 == 0 && !(s.f < s.e))
            issues.push_back("even priority without f < e");
          if (s.priority != priority_of(s.e, s.f))
            issues.push_back("priority does not match e and f");
          if (!issues.empty())
            return issues.front() + " after " + to_string(t);
        }
      return "";
    }

    Outcome tree_invariants()
    {
      std::mt19937_64 rng(4711);
      std::string buchi = random_step_failures(
        nbw, rng, [](const Automaton& a) { return initial_compact_tree(a); },
        [](const CompactTree& t, SymbolId x, const Automaton& a) { return compact_step(t, x, a); },
        [](const CompactTree& t, const Automaton& a) {
          auto out = check_compact_tree(t, a.state_count);
          if (!t.annotation.empty())
            out.push_back("Buchi tree carries annotations");
          return out;
        });
      if (!buchi.empty())
        return {false, "Buchi variant: " + buchi};
      std::string streett = random_step_failures(
        nsw, rng, [](const Automaton& a) { return initial_compact_streett_tree(a); },
        [](const CompactTree& t, SymbolId x, const Automaton& a) {
          return compact_streett_step(t, x, a);
        },
        [](const CompactTree& t, const Automaton& a) {
          return check_compact_streett_tree(
            t, a.state_count, std::get<StreettAcceptance>(a.acceptance).pairs.size());
        });
      if (!streett.empty())
        return {false, "Streett variant: " + streett};
      return {true, std::to_string(random_steps) + " steps per variant, all invariants hold"};
    }

    Outcome hoa_round_trip()
    {
      std::vector<Automaton> all;
      for (std::size_t i = 0; i < nbw.automata.size(); ++i)
        {
          all.push_back(nbw.automata[i]);
          all.push_back(nbw_dpw[i]);
        }
      for (const auto& a : nsw.automata)
        {
          all.push_back(a);
          all.push_back(nsw_to_dpw(a));
        }
      for (const auto& a : all)
        {
          std::string first = emit_hoa(a);
          std::string second = emit_hoa(a);
          if (first != second)
            return {false, "emit is not byte-deterministic"};
          if (!isomorphic(parse_hoa(first), a))
            return {false, "round trip changed an automaton:\n" + first};
        }
      return {true, std::to_string(all.size()) + " automata round-tripped"};
    }

    Outcome lk_semantics()
    {
      std::size_t lassos = 0;
      for (unsigned k : {2u, 3u})
        {
          Automaton d = nbw_to_dpw(build_lk_fixture(k));
          for (const auto& l : enumerate_lassos(d.alphabet, 2, 3))
            {
              ++lassos;
              if (run_deterministic(d, l).accepted != test::in_lk(l))
                return {false, "L_" + std::to_string(k) + " misclassifies "
                                 + to_string(l, d.alphabet)};
            }
        }
      return {true, std::to_string(lassos) + " lassos classified by min(inf) parity"};
    }
  };
}

int
main()
{
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  Suite s;
  std::printf("corpus: %zu NBWs (seed %llu), %zu NSWs (seed %llu), built in %.1f s\n",
              buchi_count, static_cast<unsigned long long>(buchi_seed), streett_count,
              static_cast<unsigned long long>(streett_seed),
              std::chrono::duration<double>(clock::now() - t0).count());

  struct Criterion
  {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
    {1, "Buchi state and priority bound", [&] { return s.buchi_state_bound(); }},
    {2, "Buchi language equality", [&] { return s.buchi_language(); }},
    {3, "reference Safra DRW agrees with DPW", [&] { return s.reference_agreement(); }},
    {4, "complementation by dualization", [&] { return s.complementation(); }},
    {5, "Streett state and priority bound", [&] { return s.streett_state_bound(); }},
    {6, "Streett three-way equality", [&] { return s.streett_three_way(); }},
    {7, "tree invariants on random steps", [&] { return s.tree_invariants(); }},
    {8, "HOA round trip", [&] { return s.hoa_round_trip(); }},
    {9, "L_k fixture semantics", [&] { return s.lk_semantics(); }},
  };

  int failed = 0;
  for (const auto& c : criteria)
    {
      auto start = clock::now();
      Outcome o;
      try
        {
          o = c.run();
        }
      catch (const std::exception& e)
        {
          o = {false, std::string("exception: ") + e.what()};
        }
      double secs = std::chrono::duration<double>(clock::now() - start).count();
      std::printf("[%s] criterion %d: %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                  o.detail.c_str(), secs);
      std::fflush(stdout);
      failed += !o.pass;
    }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed ? 1 : 0;
}
