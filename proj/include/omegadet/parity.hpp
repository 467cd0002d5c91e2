#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omegadet/automaton.hpp"
#include "omegadet/safra.hpp"

namespace omegadet
{
  /// Priority of a step whose least removed name is `e` and least green
  /// name is `f`: 2f-2 when f < e, otherwise 2e-3. Requires e >= 2; e = 1
  /// means the root emptied and the caller routes to the sink.
  unsigned priority_of(unsigned e, unsigned f);

  /// Priority carried by the rejecting sink.
  inline constexpr unsigned sink_priority = 1;

  /// Safra tree with dynamic names. Names are the consecutive range
  /// [1..size()], index i holding name i+1; a smaller name means an older
  /// node, and every parent is named below its children. Annotations are
  /// used by the Streett variant only (bit j-1 for index j).
  struct CompactTree
  {
    std::vector<unsigned> parent;  // parent[0] == 0 for the root
    std::vector<StateSet> label;
    std::vector<IndexMask> annotation;

    std::size_t size() const { return label.size(); }
    bool operator==(const CompactTree&) const = default;
  };

  std::vector<std::uint64_t> encode(const CompactTree& t);
  std::string to_string(const CompactTree& t);

  /// Outcome of one transition. `tree` is empty when the root label
  /// emptied (e = 1), in which case the target is the sink.
  struct CompactStep
  {
    std::optional<CompactTree> tree;
    unsigned e = 0;
    unsigned f = 0;
    unsigned priority = sink_priority;
  };

  // Büchi -> parity

  CompactTree initial_compact_tree(const Automaton& nbw);
  CompactStep compact_step(const CompactTree& t, SymbolId a, const Automaton& nbw);
  std::vector<std::string> check_compact_tree(const CompactTree& t, std::size_t n);
  Automaton nbw_to_dpw(const Automaton& nbw);

  // Streett -> parity

  CompactTree initial_compact_streett_tree(const Automaton& nsw);
  CompactStep compact_streett_step(const CompactTree& t, SymbolId a, const Automaton& nsw);
  /// Equal-union labels, disjoint siblings, annotation containment and at
  /// most n(k+1) nodes. A son with strictly smaller annotation is not
  /// required: moves at an ancestor may empty it after the node's own
  /// collapse test has run.
  std::vector<std::string> check_compact_streett_tree(const CompactTree& t, std::size_t n,
                                                      std::size_t k);
  Automaton nsw_to_dpw(const Automaton& nsw);

  /// Reachable states of a parity construction alongside the automaton;
  /// `trees[d]` is empty for the sink.
  struct ParityConstruction
  {
    Automaton dpw;
    std::vector<std::optional<CompactTree>> trees;
  };

  ParityConstruction explore_nbw_to_dpw(const Automaton& nbw);
  ParityConstruction explore_nsw_to_dpw(const Automaton& nsw);
}
