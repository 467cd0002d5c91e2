#include <bit>
#include <stdexcept>

#include "explore.hpp"
#include "omegadet/safra.hpp"
#include "safra_common.hpp"

namespace omegadet
{
  using detail::Nodes;

  namespace
  {
    const StreettAcceptance&
    streett_pairs(const Automaton& nsw)
    {
      const auto* acc = std::get_if<StreettAcceptance>(&nsw.acceptance);
      if (!acc)
        throw std::invalid_argument("Streett Safra construction requires Streett acceptance");
      if (acc->pairs.size() > 31)
        throw std::invalid_argument("too many Streett pairs");
      return *acc;
    }

    std::size_t
    capacity(const Automaton& nsw)
    {
      return nsw.state_count * (streett_pairs(nsw).pairs.size() + 1);
    }

    // Largest index in the mask (1-based), 0 for the empty mask.
    unsigned
    max_index(IndexMask h)
    {
      return h ? static_cast<unsigned>(std::bit_width(h)) : 0;
    }

    IndexMask
    without(IndexMask h, unsigned j)
    {
      return j ? h & ~(IndexMask{1} << (j - 1)) : h;
    }

    // Index on the edge to a child: the element missing from its
    // annotation, 0 if none.
    unsigned
    edge_index(IndexMask parent, IndexMask child)
    {
      return max_index(parent & ~child);
    }

    struct StreettStep
    {
      const Automaton& nsw;
      const StreettAcceptance& acc;
      std::size_t n;
      Nodes nodes;
      NameSet greens;
      unsigned next_temp;

      unsigned add_child(unsigned v, StateSet label, IndexMask h)
      {
        unsigned c = next_temp++;
        if (greens.size() <= c)
          greens.resize(c + 1);
        nodes[c] = {v, {}, std::move(label), h};
        nodes.at(v).children.push_back(c);
        return c;
      }

      void process(unsigned v)
      {
        if (nodes.at(v).children.empty())
          {
            const IndexMask h = nodes.at(v).annotation;
            if (h == 0)
              {
                // an ∅-annotated leaf has nothing left to wait for
                greens.set(v);
                return;
              }
            add_child(v, nodes.at(v).label, without(h, max_index(h)));
          }

        for (unsigned c : std::vector<unsigned>(nodes.at(v).children))
          process(c);

        const IndexMask hv = nodes.at(v).annotation;
        for (unsigned c : std::vector<unsigned>(nodes.at(v).children))
          {
            unsigned j = edge_index(hv, nodes.at(c).annotation);
            if (j == 0)
              continue;
            const auto& pair = acc.pairs[j - 1];
            for (StateId s : members(nodes.at(c).label))
              {
                IndexMask h;
                if (pair.request.test(s))
                  h = without(hv, max_index(hv & ((IndexMask{1} << (j - 1)) - 1)));
                else if (pair.guard.test(s))
                  h = without(hv, j);
                else
                  continue;
                StateSet single = make_state_set(n, {s});
                detail::remove_states(nodes, c, single);
                add_child(v, std::move(single), h);
              }
          }

        // a state stays with the child of least edge index, oldest first
        {
          const auto& children = nodes.at(v).children;
          StateSet claimed(n);
          std::vector<std::pair<unsigned, unsigned>> ranked;  // (index, position)
          for (unsigned pos = 0; pos < children.size(); ++pos)
            ranked.emplace_back(edge_index(hv, nodes.at(children[pos]).annotation), pos);
          std::stable_sort(ranked.begin(), ranked.end(),
                           [](auto x, auto y) { return x.first < y.first; });
          for (auto [j, pos] : ranked)
            {
              unsigned c = children[pos];
              StateSet dup = nodes.at(c).label & claimed;
              claimed |= nodes.at(c).label;
              if (dup.any())
                detail::remove_states(nodes, c, dup);
            }
        }

        erase_empty_below(v);

        const auto& node = nodes.at(v);
        if (node.label.any() && !node.children.empty()
            && std::all_of(node.children.begin(), node.children.end(),
                           [&](unsigned c) { return nodes.at(c).annotation == hv; }))
          {
            detail::erase_descendants(nodes, v);
            greens.set(v);
          }
      }

      void erase_empty_below(unsigned v)
      {
        for (unsigned c : std::vector<unsigned>(nodes.at(v).children))
          {
            if (nodes.at(c).label.none())
              {
                detail::erase_descendants(nodes, c);
                auto& siblings = nodes.at(v).children;
                siblings.erase(std::find(siblings.begin(), siblings.end(), c));
                nodes.erase(c);
              }
            else
              erase_empty_below(c);
          }
      }
    };
  }

  SafraTree
  initial_streett_safra_tree(const Automaton& nsw)
  {
    const auto& acc = streett_pairs(nsw);
    const std::size_t m = capacity(nsw);
    SafraTree t;
    t.nodes[SafraTree::root] = {0, {}, make_state_set(nsw.state_count, {nsw.initial}),
                                full_mask(acc.pairs.size())};
    t.e_marks = NameSet(m + 1);
    for (unsigned i = 2; i <= m; ++i)
      t.e_marks.set(i);
    t.f_marks = NameSet(m + 1);
    return t;
  }

  SafraTree
  streett_safra_step(const SafraTree& t, SymbolId a, const Automaton& nsw)
  {
    const auto& acc = streett_pairs(nsw);
    const std::size_t m = capacity(nsw);
    if (t.empty())
      return detail::empty_reference_tree(m);

    StreettStep run{nsw, acc, nsw.state_count, t.nodes, NameSet(2 * m + 2),
                    static_cast<unsigned>(m) + 1};
    for (auto& [name, node] : run.nodes)
      node.label = nsw.post(node.label, a);
    run.process(SafraTree::root);
    detail::erase_empty(run.nodes);
    if (run.nodes.empty())
      return detail::empty_reference_tree(m);
    return detail::finish_reference_step(std::move(run.nodes), run.greens, m);
  }

  std::vector<std::string>
  check_streett_safra_tree(const SafraTree& t, std::size_t n, std::size_t k)
  {
    std::vector<std::string> out;
    const std::size_t m = n * (k + 1);
    if ((t.e_marks & t.f_marks).any())
      out.push_back("E and F intersect");
    if (t.empty())
      return out;
    if (!t.nodes.count(SafraTree::root))
      out.push_back("root is not node 1");
    else if (t.nodes.at(SafraTree::root).annotation != full_mask(k))
      out.push_back("root is not annotated with every index");
    for (const auto& [name, node] : t.nodes)
      {
        if (name < 1 || name > m)
          out.push_back("name " + std::to_string(name) + " outside [1..m]");
        if (node.label.none())
          out.push_back("node " + std::to_string(name) + " has an empty label");
        if (node.children.empty())
          continue;
        StateSet u(n);
        for (unsigned c : node.children)
          {
            const auto& child = t.nodes.at(c);
            if (u.intersects(child.label))
              out.push_back("siblings under " + std::to_string(name) + " overlap");
            u |= child.label;
            if ((child.annotation & ~node.annotation) != 0
                || std::popcount(node.annotation & ~child.annotation) > 1)
              out.push_back("annotation of " + std::to_string(c) + " not contained in parent's");
          }
        if (u != node.label)
          out.push_back("label of " + std::to_string(name) + " differs from its children's union");
      }
    return out;
  }

  Automaton
  streett_safra_determinize(const Automaton& nsw)
  {
    const std::size_t m = capacity(nsw);
    auto ex = detail::explore(
      initial_streett_safra_tree(nsw), nsw.alphabet.size(),
      [&](const SafraTree& t, SymbolId a) { return streett_safra_step(t, a, nsw); },
      [](const SafraTree& t) { return encode(t); });
    return detail::rabin_from_trees(nsw, ex.states, ex.table, m);
  }
}
