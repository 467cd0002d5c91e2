#pragma once

// Tree surgery shared by the two reference Safra constructions.

#include <algorithm>

#include "omegadet/safra.hpp"

namespace omegadet::detail
{
  using Nodes = std::map<unsigned, SafraTree::Node>;

  inline void
  preorder(const Nodes& nodes, unsigned v, std::vector<unsigned>& out)
  {
    out.push_back(v);
    for (unsigned c : nodes.at(v).children)
      preorder(nodes, c, out);
  }

  inline std::vector<unsigned>
  preorder(const Nodes& nodes)
  {
    std::vector<unsigned> out;
    if (!nodes.empty())
      preorder(nodes, SafraTree::root, out);
    return out;
  }

  inline void
  remove_states(Nodes& nodes, unsigned v, const StateSet& states)
  {
    auto& node = nodes.at(v);
    node.label -= states;
    for (unsigned c : node.children)
      remove_states(nodes, c, states);
  }

  inline void
  erase_descendants(Nodes& nodes, unsigned v)
  {
    auto children = std::move(nodes.at(v).children);
    nodes.at(v).children.clear();
    for (unsigned c : children)
      {
        erase_descendants(nodes, c);
        nodes.erase(c);
      }
  }

  /// Removes every node with an empty label (with its subtree).
  inline void
  erase_empty(Nodes& nodes)
  {
    for (unsigned v : preorder(nodes))
      {
        auto it = nodes.find(v);
        if (it == nodes.end() || it->second.label.any())
          continue;
        erase_descendants(nodes, v);
        if (it->second.parent)
          {
            auto& siblings = nodes.at(it->second.parent).children;
            siblings.erase(std::find(siblings.begin(), siblings.end(), v));
          }
        nodes.erase(it);
      }
  }

  inline StateSet
  children_union(const Nodes& nodes, unsigned v, std::size_t n)
  {
    StateSet u(n);
    for (unsigned c : nodes.at(v).children)
      u |= nodes.at(c).label;
    return u;
  }

  /// Finishes a reference step: E = names of [1..capacity] not held by a
  /// surviving original node, F = green names that survive, temporaries
  /// (names > capacity) mapped in creation order onto the free names in
  /// ascending order.
  inline SafraTree
  finish_reference_step(Nodes nodes, const NameSet& greens, std::size_t capacity)
  {
    SafraTree out;
    out.e_marks = NameSet(capacity + 1);
    out.f_marks = NameSet(capacity + 1);
    std::vector<unsigned> free_names;
    for (unsigned i = 1; i <= capacity; ++i)
      {
        if (nodes.count(i))
          {
            if (i < greens.size() && greens.test(i))
              out.f_marks.set(i);
          }
        else
          {
            out.e_marks.set(i);
            free_names.push_back(i);
          }
      }

    std::map<unsigned, unsigned> rename;
    std::size_t next_free = 0;
    for (const auto& [name, node] : nodes)
      if (name > capacity)
        {
          if (next_free == free_names.size())
            throw std::logic_error("Safra step ran out of node names");
          rename[name] = free_names[next_free++];
        }
    auto mapped = [&](unsigned v) {
      auto it = rename.find(v);
      return it == rename.end() ? v : it->second;
    };
    for (auto& [name, node] : nodes)
      {
        node.parent = node.parent ? mapped(node.parent) : 0;
        for (auto& c : node.children)
          c = mapped(c);
        out.nodes.emplace(mapped(name), std::move(node));
      }
    return out;
  }

  inline SafraTree
  empty_reference_tree(std::size_t capacity)
  {
    SafraTree out;
    out.e_marks = NameSet(capacity + 1);
    for (unsigned i = 1; i <= capacity; ++i)
      out.e_marks.set(i);
    out.f_marks = NameSet(capacity + 1);
    return out;
  }

  inline Automaton
  rabin_from_trees(const Automaton& src, const std::vector<SafraTree>& trees,
                   const std::vector<StateId>& table, std::size_t capacity)
  {
    const std::size_t count = trees.size();
    RabinAcceptance acc;
    for (unsigned i = 1; i <= capacity; ++i)
      {
        RabinPair pair{StateSet(count), StateSet(count)};
        for (std::size_t d = 0; d < count; ++d)
          {
            if (trees[d].e_marks.test(i))
              pair.fin.set(d);
            if (trees[d].f_marks.test(i))
              pair.inf.set(d);
          }
        acc.pairs.push_back(std::move(pair));
      }
    Automaton out(src.alphabet, count, std::move(acc), true);
    out.initial = 0;
    const std::size_t sigma = src.alphabet.size();
    for (std::size_t d = 0; d < count; ++d)
      for (SymbolId a = 0; a < sigma; ++a)
        out.add_edge(static_cast<StateId>(d), a, table[d * sigma + a]);
    return out;
  }
}
