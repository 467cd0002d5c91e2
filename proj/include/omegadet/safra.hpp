#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "omegadet/automaton.hpp"

namespace omegadet
{
  /// Node names are drawn from [1..capacity]; bit i of a NameSet stands for
  /// name i (bit 0 unused).
  using NameSet = boost::dynamic_bitset<std::uint64_t>;

  /// Streett annotations: bit j-1 stands for pair index j ∈ [1..k].
  using IndexMask = std::uint32_t;

  /// Safra tree with static names and an explicit age order on siblings.
  /// An empty `nodes` map is the tree whose root label emptied.
  struct SafraTree
  {
    struct Node
    {
      unsigned parent = 0;            // 0 for the root
      std::vector<unsigned> children; // oldest first
      StateSet label;
      IndexMask annotation = 0;       // Streett trees only
      bool operator==(const Node&) const = default;
    };

    std::map<unsigned, Node> nodes;
    NameSet e_marks;
    NameSet f_marks;

    static constexpr unsigned root = 1;

    bool empty() const { return nodes.empty(); }
    bool operator==(const SafraTree&) const = default;
  };

  /// Identity key over names, structure, age order, labels, annotations and
  /// E/F marks.
  std::vector<std::uint64_t> encode(const SafraTree& t);

  // Büchi -> Rabin

  SafraTree initial_safra_tree(const Automaton& nbw);
  SafraTree safra_step(const SafraTree& t, SymbolId a, const Automaton& nbw);

  /// Structural invariants of a Büchi Safra tree over n names; empty result
  /// means valid.
  std::vector<std::string> check_safra_tree(const SafraTree& t, std::size_t n);

  /// Deterministic Rabin automaton with one pair per name in [1..n].
  Automaton safra_determinize(const Automaton& nbw);

  // Streett -> Rabin

  SafraTree initial_streett_safra_tree(const Automaton& nsw);
  SafraTree streett_safra_step(const SafraTree& t, SymbolId a, const Automaton& nsw);
  std::vector<std::string> check_streett_safra_tree(const SafraTree& t, std::size_t n,
                                                    std::size_t k);

  /// Deterministic Rabin automaton with one pair per name in [1..n(k+1)].
  Automaton streett_safra_determinize(const Automaton& nsw);

  /// Full index set [k] as a mask.
  inline IndexMask full_mask(std::size_t k)
  {
    return k >= 32 ? ~IndexMask{0} : static_cast<IndexMask>((std::uint64_t{1} << k) - 1);
  }
}
