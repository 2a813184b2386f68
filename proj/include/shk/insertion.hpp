// SPDX-License-Identifier: Apache-2.0
//
// Shifted Hecke insertion, its recording tableaux and inverse, classical
// (unshifted) Hecke insertion, and descent sets.

#pragma once

#include <set>
#include <span>
#include <vector>

#include "shk/core.hpp"

namespace shk {

struct InsertionOutcome {
  IncreasingShiftedTableau tableau;
  Cell terminal_cell;
  /// The insertion finished in column mode, or failed to start a new row.
  bool column_mode_at_end = false;
  bool added_box = false;
};

/// Inserts one letter. The rules are applied in priority order: append when
/// x is weakly larger than the whole row (column), otherwise bump the
/// smallest entry larger than x, replacing it only if the result stays
/// increasing. Bumping a diagonal entry switches to column insertion.
InsertionOutcome insert_one(const IncreasingShiftedTableau& t, int x);

struct InsertionResult {
  IncreasingShiftedTableau insertion;  // P
  SetValuedTableau recording;          // Q, standard
};

InsertionResult insert_word(std::span<const int> w);
/// Insertion tableau only; cheaper than insert_word.
IncreasingShiftedTableau insertion_tableau(std::span<const int> w);
/// P after each prefix, starting with the empty tableau.
std::vector<IncreasingShiftedTableau> insertion_sequence(std::span<const int> w);

/// The unique word whose insertion gives (p, q). Throws std::invalid_argument
/// when the shapes differ or q is not standard, std::domain_error when no
/// word maps to the pair.
Word reverse_insert(const IncreasingShiftedTableau& p, const SetValuedTableau& q);

/// Classical Hecke insertion tableau P_K(w).
UnshiftedTableau hecke_insert_classic(std::span<const int> w);

/// Positions i (1-indexed) with w_i > w_{i+1}.
std::set<int> descent_set(std::span<const int> w);
/// Descents of a standard set-valued tableau.
std::set<int> descent_set_recording(const SetValuedTableau& q);

}  // namespace shk
