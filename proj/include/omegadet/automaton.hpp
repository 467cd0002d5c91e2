#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace omegadet
{
  using StateId = std::uint32_t;
  using SymbolId = std::uint32_t;

  /// Set of automaton states; always sized to the owning automaton's
  /// state count.
  using StateSet = boost::dynamic_bitset<std::uint64_t>;

  StateSet make_state_set(std::size_t n, std::initializer_list<StateId> members = {});
  std::vector<StateId> members(const StateSet& set);
  std::string to_string(const StateSet& set);

  /// Explicit, ordered alphabet. When `aps` is nonempty the symbols are the
  /// 2^|aps| valuations, symbol i assigning AP j to bit j of i.
  struct Alphabet
  {
    std::vector<std::string> symbols;
    std::vector<std::string> aps;

    std::size_t size() const { return symbols.size(); }
    std::optional<SymbolId> find(const std::string& name) const;

    static Alphabet from_symbols(std::vector<std::string> names);
    static Alphabet from_aps(std::vector<std::string> aps);

    bool operator==(const Alphabet&) const = default;
  };

  /// Label text of a valuation, e.g. "a&!b"; "t" when there are no APs.
  std::string valuation_name(const std::vector<std::string>& aps, SymbolId valuation);

  struct BuchiAcceptance
  {
    StateSet accepting;
    bool operator==(const BuchiAcceptance&) const = default;
  };

  // A run satisfies the pair iff inf ∩ fin = ∅ and inf ∩ inf_set ≠ ∅.
  struct RabinPair
  {
    StateSet fin;
    StateSet inf;
    bool operator==(const RabinPair&) const = default;
  };

  struct RabinAcceptance
  {
    std::vector<RabinPair> pairs;
    bool operator==(const RabinAcceptance&) const = default;
  };

  // A run satisfies the pair iff inf ∩ guard = ∅ or inf ∩ request ≠ ∅,
  // i.e. the usual ⟨R, G⟩ with R = request, G = guard.
  struct StreettPair
  {
    StateSet request;
    StateSet guard;
    bool operator==(const StreettPair&) const = default;
  };

  struct StreettAcceptance
  {
    std::vector<StreettPair> pairs;
    bool operator==(const StreettAcceptance&) const = default;
  };

  /// Min-even parity: priorities in [0, index).
  struct ParityAcceptance
  {
    std::vector<unsigned> priority;
    unsigned index = 0;
    bool operator==(const ParityAcceptance&) const = default;
  };

  using Acceptance =
    std::variant<BuchiAcceptance, RabinAcceptance, StreettAcceptance, ParityAcceptance>;

  std::string acceptance_name(const Acceptance& acc);

  /// Evaluates the acceptance condition on the set of infinitely
  /// recurring states of a run.
  bool accepts_inf_set(const Acceptance& acc, const StateSet& inf);

  struct Automaton
  {
    Alphabet alphabet;
    std::size_t state_count = 0;
    StateId initial = 0;
    // successors[s * |Σ| + a], sorted and duplicate free
    std::vector<std::vector<StateId>> successors;
    Acceptance acceptance;
    bool deterministic = false;

    Automaton() = default;
    Automaton(Alphabet sigma, std::size_t n, Acceptance acc, bool det = false);

    const std::vector<StateId>& succ(StateId s, SymbolId a) const
    {
      return successors[s * alphabet.size() + a];
    }
    void add_edge(StateId from, SymbolId a, StateId to);

    /// δ(S', a)
    StateSet post(const StateSet& from, SymbolId a) const;
    bool is_complete() const;
    std::size_t edge_count() const;

    bool operator==(const Automaton&) const = default;
  };

  template<class A>
  bool has_acceptance(const Automaton& a)
  {
    return std::holds_alternative<A>(a.acceptance);
  }

  struct Diagnostic
  {
    std::string message;
    std::optional<StateId> state;
    std::optional<SymbolId> symbol;
  };

  std::string to_string(const Diagnostic& d);

  /// Empty iff every structural invariant holds.
  std::vector<Diagnostic> validate_automaton(const Automaton& a);

  /// Complement of a deterministic complete parity automaton: every
  /// priority p becomes p + 1 and the index grows by one.
  Automaton dualize_parity(const Automaton& d);

  /// Subtracts 2 from every priority while the minimum is at least 2.
  Automaton normalize_parity(const Automaton& d);

  /// Renumbers states in breadth-first order from the initial state
  /// (symbols in order, successors ascending); unreachable states keep
  /// their relative order after the reachable ones.
  Automaton canonical_numbering(const Automaton& a);

  /// Structural identity up to canonical state numbering. AP metadata is
  /// ignored; symbol names, edges, and acceptance must coincide.
  bool isomorphic(const Automaton& a, const Automaton& b);
}
