#pragma once

// Mutable tree used while computing one compact transition. Nodes are
// addressed by their pre-renaming name (index 0 unused); fresh nodes take
// the least name above every name used so far.

#include <algorithm>
#include <stdexcept>

#include "explore.hpp"
#include "omegadet/parity.hpp"

namespace omegadet::detail
{
  struct WorkTree
  {
    std::vector<unsigned> parent{0};
    std::vector<std::vector<unsigned>> children{{}};
    std::vector<StateSet> label{StateSet{}};
    std::vector<IndexMask> annotation{0};
    std::vector<bool> alive{false};
    unsigned e;
    unsigned f;

    WorkTree(const CompactTree& t, unsigned bound) : e(bound), f(bound)
    {
      for (std::size_t i = 0; i < t.size(); ++i)
        {
          unsigned p = t.parent[i];
          add(p, t.label[i], t.annotation.empty() ? 0 : t.annotation[i]);
        }
    }

    unsigned names_used() const { return static_cast<unsigned>(label.size() - 1); }

    unsigned add(unsigned p, StateSet l, IndexMask h)
    {
      unsigned v = static_cast<unsigned>(label.size());
      parent.push_back(p);
      children.emplace_back();
      label.push_back(std::move(l));
      annotation.push_back(h);
      alive.push_back(true);
      if (p)
        children[p].push_back(v);
      return v;
    }

    std::vector<unsigned> live_children(unsigned v) const
    {
      std::vector<unsigned> out;
      for (unsigned c : children[v])
        if (alive[c])
          out.push_back(c);
      return out;
    }

    void remove_states(unsigned v, const StateSet& s)
    {
      label[v] -= s;
      for (unsigned c : children[v])
        if (alive[c])
          remove_states(c, s);
    }

    void drop(unsigned v)
    {
      alive[v] = false;
      e = std::min(e, v);
      drop_descendants(v);
    }

    void drop_descendants(unsigned v)
    {
      for (unsigned c : children[v])
        if (alive[c])
          drop(c);
    }

    StateSet children_union(unsigned v, std::size_t n) const
    {
      StateSet u(n);
      for (unsigned c : children[v])
        if (alive[c])
          u |= label[c];
      return u;
    }

    // Surviving nodes renamed to M(v) - rem(v), rem(v) counting the
    // removed names below M(v).
    CompactStep finish(bool annotated)
    {
      CompactStep out;
      out.e = e;
      out.f = f;
      if (!alive[1])
        {
          out.e = 1;
          out.priority = sink_priority;
          return out;
        }
      std::vector<unsigned> renamed(label.size(), 0);
      unsigned removed_below = 0;
      for (unsigned v = 1; v < label.size(); ++v)
        {
          if (!alive[v])
            {
              ++removed_below;
              continue;
            }
          renamed[v] = v - removed_below;
        }
      CompactTree t;
      for (unsigned v = 1; v < label.size(); ++v)
        {
          if (!alive[v])
            continue;
          if (renamed[v] != t.size() + 1)
            throw std::logic_error("renaming produced non-consecutive names");
          t.parent.push_back(parent[v] ? renamed[parent[v]] : 0);
          t.label.push_back(std::move(label[v]));
          if (annotated)
            t.annotation.push_back(annotation[v]);
        }
      out.tree = std::move(t);
      out.priority = priority_of(e, f);
      return out;
    }
  };

  struct DpwState
  {
    std::optional<CompactTree> tree;
    unsigned priority = 0;
  };

  inline Key
  dpw_key(const DpwState& s)
  {
    if (!s.tree)
      return Key{~std::uint64_t{0}};
    Key k = encode(*s.tree);
    k.push_back(s.priority);
    return k;
  }

  template<class StepFn>
  ParityConstruction
  build_dpw(const Automaton& src, CompactTree initial, unsigned index, StepFn step)
  {
    auto ex = explore(
      DpwState{std::move(initial), priority_of(2, 1)}, src.alphabet.size(),
      [&](const DpwState& s, SymbolId a) {
        if (!s.tree)
          return DpwState{std::nullopt, sink_priority};
        CompactStep r = step(*s.tree, a);
        return DpwState{std::move(r.tree), r.priority};
      },
      dpw_key);

    const std::size_t count = ex.states.size();
    ParityAcceptance acc;
    acc.index = index;
    for (const auto& s : ex.states)
      acc.priority.push_back(s.priority);
    ParityConstruction out;
    out.dpw = Automaton(src.alphabet, count, std::move(acc), true);
    out.dpw.initial = 0;
    const std::size_t sigma = src.alphabet.size();
    for (std::size_t d = 0; d < count; ++d)
      for (SymbolId a = 0; a < sigma; ++a)
        out.dpw.add_edge(static_cast<StateId>(d), a, ex.table[d * sigma + a]);
    for (auto& s : ex.states)
      out.trees.push_back(std::move(s.tree));
    return out;
  }
}
