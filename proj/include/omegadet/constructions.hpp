#pragma once

#include "omegadet/automaton.hpp"

namespace omegadet
{
  /// Largest Streett index accepted by nsw_witness_union_nbw.
  inline constexpr std::size_t max_witness_pairs = 12;

  /// Büchi automaton for the union, over every witness set J ⊆ [k], of the
  /// two-part automaton that first follows the Streett automaton freely,
  /// then jumps to a phase forbidding G_j (j ∉ J) and cycling through the
  /// requests R_j (j ∈ J) in descending index order.
  ///
  /// State layout: [0, n) is the free phase; each J owns a block of
  /// n·(|J|+1) states (s, i) where i < |J| waits for the i-th index of J and
  /// i = |J| marks a completed cycle (the only accepting states).
  /// Exponential in k; intended as a test oracle.
  Automaton nsw_witness_union_nbw(const Automaton& nsw);

  /// k-state Büchi automaton over {"1", ..., "k"} for
  /// L_k = { w | min(inf(w)) is even }.
  Automaton build_lk_fixture(unsigned k);
}
