#include <deque>
#include <map>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include "omegadet/lasso.hpp"

namespace omegadet
{
  namespace
  {
    void
    check_word(const Automaton& a, const Lasso& l)
    {
      if (l.period.empty())
        throw std::invalid_argument("lasso period must be nonempty");
      for (const auto* w : {&l.prefix, &l.period})
        for (SymbolId x : *w)
          if (x >= a.alphabet.size())
            throw std::invalid_argument("lasso symbol outside the alphabet");
    }

    // Product of an automaton with the lasso's position graph: positions
    // 0..|u|+|v|-1, the last one wrapping back to |u|. Only the part
    // reachable from (initial, 0) is materialized.
    struct Product
    {
      std::vector<StateId> state;                     // node -> automaton state
      std::vector<std::vector<std::size_t>> edges;    // node -> successors

      Product(const Automaton& a, const Lasso& l)
      {
        const std::size_t u = l.prefix.size();
        const std::size_t len = u + l.period.size();
        auto letter = [&](std::size_t pos) {
          return pos < u ? l.prefix[pos] : l.period[pos - u];
        };
        auto next = [&](std::size_t pos) { return pos + 1 < len ? pos + 1 : u; };

        std::map<std::pair<StateId, std::size_t>, std::size_t> index;
        std::vector<std::size_t> position;
        std::deque<std::size_t> queue;
        auto intern = [&](StateId q, std::size_t pos) {
          auto [it, fresh] = index.emplace(std::make_pair(q, pos), state.size());
          if (fresh)
            {
              state.push_back(q);
              position.push_back(pos);
              edges.emplace_back();
              queue.push_back(it->second);
            }
          return it->second;
        };
        intern(a.initial, 0);
        while (!queue.empty())
          {
            std::size_t node = queue.front();
            queue.pop_front();
            std::size_t pos = position[node];
            for (StateId t : a.succ(state[node], letter(pos)))
              {
                std::size_t succ = intern(t, next(pos));
                edges[node].push_back(succ);
              }
          }
      }
    };

    // Strongly connected components of the subgraph induced by `nodes`,
    // keeping only components that contain a cycle.
    std::vector<std::vector<std::size_t>>
    cyclic_components(const Product& p, const std::vector<std::size_t>& nodes)
    {
      using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
      std::vector<std::ptrdiff_t> local(p.state.size(), -1);
      for (std::size_t i = 0; i < nodes.size(); ++i)
        local[nodes[i]] = static_cast<std::ptrdiff_t>(i);
      Graph g(nodes.size());
      std::vector<bool> self_loop(nodes.size(), false);
      for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t t : p.edges[nodes[i]])
          if (local[t] >= 0)
            {
              boost::add_edge(i, static_cast<std::size_t>(local[t]), g);
              if (t == nodes[i])
                self_loop[i] = true;
            }
      std::vector<int> comp(nodes.size());
      int count = nodes.empty() ? 0 : boost::strong_components(g, comp.data());
      std::vector<std::vector<std::size_t>> groups(static_cast<std::size_t>(count));
      for (std::size_t i = 0; i < nodes.size(); ++i)
        groups[static_cast<std::size_t>(comp[i])].push_back(i);
      std::vector<std::vector<std::size_t>> out;
      for (auto& grp : groups)
        if (grp.size() > 1 || self_loop[grp.front()])
          {
            std::vector<std::size_t> global;
            for (std::size_t i : grp)
              global.push_back(nodes[i]);
            out.push_back(std::move(global));
          }
      return out;
    }

    std::vector<std::size_t>
    all_nodes(const Product& p)
    {
      std::vector<std::size_t> v(p.state.size());
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = i;
      return v;
    }

    bool
    streett_nonempty(const Product& p, const StreettAcceptance& acc,
                     const std::vector<std::size_t>& nodes, std::size_t n)
    {
      for (const auto& comp : cyclic_components(p, nodes))
        {
          StateSet states(n);
          for (std::size_t v : comp)
            states.set(p.state[v]);
          StateSet drop(n);
          for (const auto& pair : acc.pairs)
            if (pair.guard.intersects(states) && !pair.request.intersects(states))
              drop |= pair.guard;
          if (drop.none())
            return true;
          std::vector<std::size_t> rest;
          for (std::size_t v : comp)
            if (!drop.test(p.state[v]))
              rest.push_back(v);
          if (!rest.empty() && streett_nonempty(p, acc, rest, n))
            return true;
        }
      return false;
    }
  }

  CycleVerdict
  run_deterministic(const Automaton& d, const Lasso& l)
  {
    if (!d.deterministic)
      throw std::invalid_argument("run_deterministic: deterministic automaton required");
    check_word(d, l);
    auto step = [&](StateId q, SymbolId x) {
      const auto& dst = d.succ(q, x);
      if (dst.size() != 1)
        throw std::invalid_argument("run_deterministic: automaton is not complete");
      return dst.front();
    };

    StateId q = d.initial;
    std::size_t steps = 0;
    for (SymbolId x : l.prefix)
      {
        q = step(q, x);
        ++steps;
      }
    const std::size_t period = l.period.size();
    // first visit step of (state, position in period)
    std::vector<std::size_t> seen(d.state_count * period, ~std::size_t{0});
    std::vector<StateId> trace;
    std::size_t pos = 0;
    while (seen[q * period + pos] == ~std::size_t{0})
      {
        seen[q * period + pos] = trace.size();
        trace.push_back(q);
        q = step(q, l.period[pos]);
        pos = (pos + 1) % period;
        ++steps;
      }
    CycleVerdict out;
    out.cycle.assign(trace.begin() + static_cast<std::ptrdiff_t>(seen[q * period + pos]),
                     trace.end());
    out.cycle_states = StateSet(d.state_count);
    for (StateId s : out.cycle)
      out.cycle_states.set(s);
    out.entry_steps = steps;
    out.accepted = accepts_inf_set(d.acceptance, out.cycle_states);
    return out;
  }

  bool
  nbw_member(const Automaton& a, const Lasso& l)
  {
    const auto* acc = std::get_if<BuchiAcceptance>(&a.acceptance);
    if (!acc)
      throw std::invalid_argument("nbw_member: Buchi acceptance required");
    check_word(a, l);
    Product p(a, l);
    for (const auto& comp : cyclic_components(p, all_nodes(p)))
      for (std::size_t v : comp)
        if (acc->accepting.test(p.state[v]))
          return true;
    return false;
  }

  bool
  nsw_member(const Automaton& a, const Lasso& l)
  {
    const auto* acc = std::get_if<StreettAcceptance>(&a.acceptance);
    if (!acc)
      throw std::invalid_argument("nsw_member: Streett acceptance required");
    check_word(a, l);
    Product p(a, l);
    return streett_nonempty(p, *acc, all_nodes(p), a.state_count);
  }

  bool
  member(const Automaton& a, const Lasso& l)
  {
    if (a.deterministic)
      return run_deterministic(a, l).accepted;
    if (has_acceptance<BuchiAcceptance>(a))
      return nbw_member(a, l);
    if (has_acceptance<StreettAcceptance>(a))
      return nsw_member(a, l);
    throw std::invalid_argument("member: nondeterministic " + acceptance_name(a.acceptance)
                                + " automata are not supported");
  }

  DiffReport
  differential_check(const Automaton& left, const Automaton& right,
                     std::span<const Lasso> lassos)
  {
    if (left.alphabet.symbols != right.alphabet.symbols)
      throw std::invalid_argument("differential_check: alphabets differ");
    DiffReport report;
    for (const auto& l : lassos)
      {
        bool lv = member(left, l);
        bool rv = member(right, l);
        if (lv == rv)
          ++report.agreed;
        else
          report.disagreements.push_back({l, lv, rv});
      }
    return report;
  }
}
