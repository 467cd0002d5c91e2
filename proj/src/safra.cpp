#include "omegadet/safra.hpp"

#include <stdexcept>

#include "explore.hpp"
#include "safra_common.hpp"

namespace omegadet
{
  using detail::Nodes;

  std::vector<std::uint64_t>
  encode(const SafraTree& t)
  {
    std::vector<std::uint64_t> key;
    key.push_back(t.nodes.size());
    for (const auto& [name, node] : t.nodes)
      {
        key.push_back(name);
        key.push_back(node.parent);
        key.push_back(node.annotation);
        key.push_back(node.children.size());
        key.insert(key.end(), node.children.begin(), node.children.end());
        boost::to_block_range(node.label, std::back_inserter(key));
      }
    boost::to_block_range(t.e_marks, std::back_inserter(key));
    boost::to_block_range(t.f_marks, std::back_inserter(key));
    return key;
  }

  namespace
  {
    const StateSet&
    buchi_set(const Automaton& nbw)
    {
      const auto* acc = std::get_if<BuchiAcceptance>(&nbw.acceptance);
      if (!acc)
        throw std::invalid_argument("Safra construction requires Buchi acceptance");
      return acc->accepting;
    }
  }

  SafraTree
  initial_safra_tree(const Automaton& nbw)
  {
    buchi_set(nbw);
    const std::size_t n = nbw.state_count;
    SafraTree t;
    t.nodes[SafraTree::root] = {0, {}, make_state_set(n, {nbw.initial}), 0};
    t.e_marks = NameSet(n + 1);
    for (unsigned i = 2; i <= n; ++i)
      t.e_marks.set(i);
    t.f_marks = NameSet(n + 1);
    return t;
  }

  SafraTree
  safra_step(const SafraTree& t, SymbolId a, const Automaton& nbw)
  {
    const StateSet& alpha = buchi_set(nbw);
    const std::size_t n = nbw.state_count;
    if (t.empty())
      return detail::empty_reference_tree(n);

    Nodes nodes = t.nodes;

    // successor labels
    for (auto& [name, node] : nodes)
      node.label = nbw.post(node.label, a);

    // youngest child for the accepting part of every label
    unsigned next_temp = static_cast<unsigned>(n) + 1;
    for (unsigned v : detail::preorder(nodes))
      {
        StateSet acc = nodes.at(v).label & alpha;
        if (acc.none())
          continue;
        unsigned child = next_temp++;
        nodes[child] = {v, {}, std::move(acc), 0};
        nodes.at(v).children.push_back(child);
      }

    // a state stays only with the oldest sibling holding it
    for (unsigned v : detail::preorder(nodes))
      {
        StateSet older(n);
        for (unsigned c : nodes.at(v).children)
          {
            StateSet dup = nodes.at(c).label & older;
            older |= nodes.at(c).label;
            if (dup.any())
              detail::remove_states(nodes, c, dup);
          }
      }

    // empty nodes
    detail::erase_empty(nodes);
    if (nodes.empty())
      return detail::empty_reference_tree(n);

    // collapse nodes covered by their children
    NameSet greens(2 * n + 2);
    for (unsigned v : detail::preorder(nodes))
      {
        if (!nodes.count(v) || nodes.at(v).children.empty())
          continue;
        if (nodes.at(v).label == detail::children_union(nodes, v, n))
          {
            detail::erase_descendants(nodes, v);
            greens.set(v);
          }
      }

    // E and F marks, then the temporaries take the free names
    return detail::finish_reference_step(std::move(nodes), greens, n);
  }

  std::vector<std::string>
  check_safra_tree(const SafraTree& t, std::size_t n)
  {
    std::vector<std::string> out;
    if ((t.e_marks & t.f_marks).any())
      out.push_back("E and F intersect");
    if (t.empty())
      return out;
    if (!t.nodes.count(SafraTree::root) || t.nodes.at(SafraTree::root).parent != 0)
      out.push_back("root is not node 1");
    for (const auto& [name, node] : t.nodes)
      {
        if (name < 1 || name > n)
          out.push_back("name " + std::to_string(name) + " outside [1..n]");
        if (name != SafraTree::root)
          {
            auto p = t.nodes.find(node.parent);
            if (p == t.nodes.end()
                || std::find(p->second.children.begin(), p->second.children.end(), name)
                     == p->second.children.end())
              out.push_back("node " + std::to_string(name) + " is detached");
          }
        StateSet u(n);
        for (unsigned c : node.children)
          {
            const auto& lc = t.nodes.at(c).label;
            if (u.intersects(lc))
              out.push_back("siblings under " + std::to_string(name) + " overlap");
            u |= lc;
          }
        if (!u.is_proper_subset_of(node.label))
          out.push_back("label of " + std::to_string(name)
                        + " is not a proper superset of its children");
      }
    return out;
  }

  Automaton
  safra_determinize(const Automaton& nbw)
  {
    const std::size_t n = nbw.state_count;
    auto ex = detail::explore(
      initial_safra_tree(nbw), nbw.alphabet.size(),
      [&](const SafraTree& t, SymbolId a) { return safra_step(t, a, nbw); },
      [](const SafraTree& t) { return encode(t); });
    return detail::rabin_from_trees(nbw, ex.states, ex.table, n);
  }
}
