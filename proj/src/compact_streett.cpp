#include <bit>

#include "compact_common.hpp"

namespace omegadet
{
  namespace
  {
    const StreettAcceptance&
    streett_pairs(const Automaton& nsw)
    {
      const auto* acc = std::get_if<StreettAcceptance>(&nsw.acceptance);
      if (!acc)
        throw std::invalid_argument("compact Streett construction requires Streett acceptance");
      if (acc->pairs.size() > 31)
        throw std::invalid_argument("too many Streett pairs");
      return *acc;
    }

    unsigned
    top(IndexMask h)
    {
      return static_cast<unsigned>(std::bit_width(h));
    }

    IndexMask
    drop_index(IndexMask h, unsigned j)
    {
      return j ? h & ~(IndexMask{1} << (j - 1)) : h;
    }

    // j_i = max((h(v) ∪ {0}) - h(v_i))
    unsigned
    edge_index(IndexMask parent, IndexMask child)
    {
      return top(parent & ~child);
    }

    struct Recursion
    {
      detail::WorkTree& w;
      const StreettAcceptance& acc;
      std::size_t n;

      void process(unsigned v)
      {
        if (w.live_children(v).empty())
          {
            const IndexMask h = w.annotation[v];
            if (h == 0)
              {
                // nothing left to wait for: the node cycles trivially
                w.f = std::min(w.f, v);
                return;
              }
            w.add(v, w.label[v], drop_index(h, top(h)));
          }

        for (unsigned c : w.live_children(v))
          process(c);

        const IndexMask hv = w.annotation[v];
        for (unsigned c : w.live_children(v))
          {
            unsigned j = edge_index(hv, w.annotation[c]);
            if (j == 0)
              continue;
            const auto& pair = acc.pairs[j - 1];
            for (StateId s : members(w.label[c]))
              {
                IndexMask h;
                if (pair.request.test(s))
                  h = drop_index(hv, top(hv & ((IndexMask{1} << (j - 1)) - 1)));
                else if (pair.guard.test(s))
                  h = drop_index(hv, j);
                else
                  continue;
                StateSet single = make_state_set(n, {s});
                w.remove_states(c, single);
                w.add(v, std::move(single), h);
              }
          }

        // a state stays with the child of least index, then least name
        {
          auto children = w.live_children(v);
          std::stable_sort(children.begin(), children.end(), [&](unsigned x, unsigned y) {
            return edge_index(hv, w.annotation[x]) < edge_index(hv, w.annotation[y]);
          });
          StateSet claimed(n);
          for (unsigned c : children)
            {
              StateSet dup = w.label[c] & claimed;
              claimed |= w.label[c];
              if (dup.any())
                w.remove_states(c, dup);
            }
        }

        drop_empty_below(v);

        auto children = w.live_children(v);
        if (w.label[v].any() && !children.empty()
            && std::all_of(children.begin(), children.end(),
                           [&](unsigned c) { return w.annotation[c] == hv; }))
          {
            w.drop_descendants(v);
            w.f = std::min(w.f, v);
          }
      }

      void drop_empty_below(unsigned v)
      {
        for (unsigned c : w.live_children(v))
          {
            if (w.label[c].none())
              w.drop(c);
            else
              drop_empty_below(c);
          }
      }
    };
  }

  CompactTree
  initial_compact_streett_tree(const Automaton& nsw)
  {
    const auto& acc = streett_pairs(nsw);
    CompactTree t;
    t.parent.push_back(0);
    t.label.push_back(make_state_set(nsw.state_count, {nsw.initial}));
    t.annotation.push_back(full_mask(acc.pairs.size()));
    return t;
  }

  CompactStep
  compact_streett_step(const CompactTree& t, SymbolId a, const Automaton& nsw)
  {
    const auto& acc = streett_pairs(nsw);
    const std::size_t n = nsw.state_count;
    const unsigned m = static_cast<unsigned>(n * (acc.pairs.size() + 1));
    detail::WorkTree w(t, m + 1);
    for (unsigned v = 1; v <= w.names_used(); ++v)
      w.label[v] = nsw.post(w.label[v], a);

    Recursion{w, acc, n}.process(1);
    for (unsigned v = 1; v <= w.names_used(); ++v)
      if (w.alive[v] && w.label[v].none())
        w.drop(v);
    CompactStep out = w.finish(true);
    if (out.tree && out.tree->size() > m)
      throw std::logic_error("compact Streett tree exceeds n(k+1) nodes");
    return out;
  }

  std::vector<std::string>
  check_compact_streett_tree(const CompactTree& t, std::size_t n, std::size_t k)
  {
    std::vector<std::string> out;
    const std::size_t m = n * (k + 1);
    if (t.size() == 0)
      return {"tree has no root"};
    if (t.annotation.size() != t.size())
      return {"annotation table has wrong size"};
    if (t.size() > m)
      out.push_back("more than n(k+1) nodes");
    if (t.parent[0] != 0)
      out.push_back("root has a parent");
    if (t.annotation[0] != full_mask(k))
      out.push_back("root is not annotated with every index");

    std::vector<StateSet> below(t.size(), StateSet(n));
    std::vector<bool> internal(t.size(), false);
    for (std::size_t i = 1; i < t.size(); ++i)
      {
        unsigned p = t.parent[i];
        if (p < 1 || p > i)
          {
            out.push_back("parent of " + std::to_string(i + 1) + " is not named below it");
            continue;
          }
        IndexMask hp = t.annotation[p - 1];
        IndexMask hc = t.annotation[i];
        if ((hc & ~hp) != 0 || std::popcount(hp & ~hc) > 1)
          out.push_back("annotation of " + std::to_string(i + 1)
                        + " is not its parent's minus at most one index");
        internal[p - 1] = true;
        if (below[p - 1].intersects(t.label[i]))
          out.push_back("siblings under " + std::to_string(p) + " overlap");
        below[p - 1] |= t.label[i];
      }
    for (std::size_t i = 0; i < t.size(); ++i)
      {
        if (t.label[i].none())
          out.push_back("node " + std::to_string(i + 1) + " has an empty label");
        if (!internal[i])
          continue;
        if (below[i] != t.label[i])
          out.push_back("label of " + std::to_string(i + 1)
                        + " differs from its children's union");
      }
    return out;
  }

  ParityConstruction
  explore_nsw_to_dpw(const Automaton& nsw)
  {
    const auto& acc = streett_pairs(nsw);
    const unsigned index = 2 * static_cast<unsigned>(nsw.state_count * (acc.pairs.size() + 1));
    return detail::build_dpw(nsw, initial_compact_streett_tree(nsw), index,
                             [&](const CompactTree& t, SymbolId a) {
                               return compact_streett_step(t, a, nsw);
                             });
  }

  Automaton
  nsw_to_dpw(const Automaton& nsw)
  {
    return explore_nsw_to_dpw(nsw).dpw;
  }
}
