// SPDX-License-Identifier: Apache-2.0
//
// K-theoretic jeu de taquin on shifted boards: switch operators, forward and
// reverse slides, rectification under an explicit order.

#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "shk/core.hpp"

namespace shk {

struct Value {
  int v = 1;
  friend auto operator<=>(const Value&, const Value&) = default;
};
/// Underlined label; marker m is the hole set of the m-th slide from the end.
struct Marker {
  int m = 1;
  friend auto operator<=>(const Marker&, const Marker&) = default;
};
struct Hole {
  friend auto operator<=>(const Hole&, const Hole&) = default;
};

using Label = std::variant<Value, Marker, Hole>;
using Board = std::map<Cell, Label>;

std::string to_string(const Label& l);

/// Simultaneous swap of labels a and b between edge-adjacent boxes.
Board kswitch(const Board& board, const Label& a, const Label& b);

enum class SlideDirection { Forward, Reverse };

/// Marks the cells of `holes` with a hole and switches every value through
/// them, smallest first for forward slides and largest first for reverse.
/// Holes left behind stay on the board. Throws std::invalid_argument when a
/// cell of `holes` holds a value.
Board slide(const Board& board, const std::set<Cell>& holes, SlideDirection dir);

/// Values only; empty cells and non-values dropped.
SkewTableau values_of(const Board& board);
Board board_from(const SkewTableau& t);

/// Cells (i, 2n - i) holding w_{n-i+1}, inside the staircase (2n-1, 2n-3, ..., 1).
SkewTableau antidiagonal_tableau(const Word& w);

/// (marker, value) pairs applied left to right.
using SwitchSequence = std::vector<std::pair<int, int>>;

/// (p,1) ... (p,q), (p-1,1) ... (1,q).
SwitchSequence standard_switch_sequence(int p, int q);
/// Empty string when viable, otherwise the violated clause.
std::string viability_violation(const SwitchSequence& seq, int p, int q);
/// Every viable sequence, in lexicographic order of the underlying choices.
std::vector<SwitchSequence> enumerate_viable_sequences(int p, int q);

/// Superstandard marking of the inner shape: markers 1..p in row-reading order.
Board mark_superstandard(const SkewTableau& t, const StrictPartition& inner);

/// Applies the sequence to a marked board and returns the straightened values.
/// Throws std::invalid_argument for a non-viable sequence and
/// std::domain_error when a slide leaves a non-increasing filling or the
/// result is not of straight shape.
IncreasingShiftedTableau rectify_marked(const Board& marked, const SwitchSequence& seq);

/// Superstandard K-rectification; the inner shape defaults to the implied one.
IncreasingShiftedTableau rectify_superstandard(const SkewTableau& t);
IncreasingShiftedTableau rectify_superstandard(const SkewTableau& t, const StrictPartition& inner);

/// Rectification by explicit forward slides. Every set must consist of
/// maximal boxes of the current inner shape.
IncreasingShiftedTableau rectify_by_slides(const SkewTableau& t,
                                           const std::vector<std::set<Cell>>& slides);

}  // namespace shk
