// SPDX-License-Identifier: Apache-2.0
//
// Shifted shapes, cells, primed entries and the tableau flavours shared by
// every other module. Coordinates are 1-indexed (row, col); row i of a
// shifted shape occupies columns i .. i + lambda_i - 1.

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace shk {

/// Raised when text or JSON input cannot be decoded.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Cell {
  int row = 1;
  int col = 1;

  bool on_diagonal() const { return row == col; }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// True when the two cells share an edge.
bool adjacent(Cell a, Cell b);

/// A strictly decreasing sequence of positive row lengths.
class StrictPartition {
 public:
  StrictPartition() = default;
  /// Throws std::invalid_argument unless parts are positive and strictly decreasing.
  explicit StrictPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int row) const;  // 1-indexed, 0 past the last row
  int size() const;
  bool empty() const { return parts_.empty(); }

  bool contains(Cell c) const;
  bool contains(const StrictPartition& inner) const;
  /// Cells in row-reading order (top row first, left to right).
  std::vector<Cell> cells() const;

  std::string to_string() const;  // "4,2,1"; "" for the empty shape

  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// A skew shifted shape outer/inner.
class SkewShape {
 public:
  SkewShape(StrictPartition outer, StrictPartition inner);

  const StrictPartition& outer() const { return outer_; }
  const StrictPartition& inner() const { return inner_; }
  bool contains(Cell c) const { return outer_.contains(c) && !inner_.contains(c); }
  std::vector<Cell> cells() const;
  int size() const { return outer_.size() - inner_.size(); }

  /// No adjacent skew boxes to the east or south.
  bool is_maximal(Cell c) const;
  /// No adjacent skew boxes to the west or north.
  bool is_minimal(Cell c) const;

 private:
  StrictPartition outer_;
  StrictPartition inner_;
};

/// A positive integer with an optional prime; ordered 1' < 1 < 2' < 2 < ...
struct Entry {
  int value = 1;
  bool primed = false;

  int rank() const { return 2 * value - (primed ? 1 : 0); }
  friend bool operator==(const Entry&, const Entry&) = default;
  friend std::strong_ordering operator<=>(const Entry& a, const Entry& b) {
    return a.rank() <=> b.rank();
  }
};

std::string to_string(Entry e);

using Word = std::vector<int>;

/// Throws std::invalid_argument when a letter is not positive.
void validate_word(std::span<const int> w);
/// The letters are exactly {1, ..., k} for some k.
bool is_initial(std::span<const int> w);
/// Subsequence of letters in [lo, hi].
Word restrict_word(std::span<const int> w, int lo, int hi);
Word shift_word(std::span<const int> w, int by);
/// Digit string when every letter is at most 9, comma separated otherwise.
std::string word_to_string(std::span<const int> w);
/// Accepts "451132" or "4,5,11,3"; throws ParseError.
Word parse_word(const std::string& s);
/// All words over [alphabet] with length in [min_len, max_len], shortlex order.
std::vector<Word> all_words(int alphabet, int min_len, int max_len);

class SkewTableau;

/// Increasing filling of a straight shifted shape.
class IncreasingShiftedTableau {
 public:
  IncreasingShiftedTableau() = default;
  /// rows[i] holds row i+1 left to right. Throws std::invalid_argument on a
  /// non-shifted shape or a non-increasing filling.
  explicit IncreasingShiftedTableau(std::vector<std::vector<int>> rows);

  StrictPartition shape() const;
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int size() const;
  bool empty() const { return rows_.empty(); }
  std::optional<int> at(Cell c) const;
  int max_entry() const;  // 0 when empty
  std::set<int> entry_set() const;

  Word reading_word() const;
  /// Entries in [1, k]; always a straight shifted tableau.
  IncreasingShiftedTableau restrict_prefix(int k) const;
  /// Entries in [lo, hi]; in general a skew filling.
  SkewTableau restrict_interval(int lo, int hi) const;
  IncreasingShiftedTableau shifted(int by) const;

  friend auto operator<=>(const IncreasingShiftedTableau&,
                          const IncreasingShiftedTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// An increasing filling of an arbitrary set of cells, usually a skew
/// shifted shape. Reading order is bottom row first, left to right.
class SkewTableau {
 public:
  SkewTableau() = default;
  /// Throws std::invalid_argument on a non-increasing filling.
  explicit SkewTableau(std::map<Cell, int> cells);

  const std::map<Cell, int>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }
  std::optional<int> at(Cell c) const;
  Word reading_word() const;
  int max_entry() const;

  /// The smallest shifted shape holding every cell NW of a filled cell
  /// that is not itself filled.
  StrictPartition implied_inner() const;
  /// Shape of the outer hull when the cells form a skew shifted shape.
  std::optional<SkewShape> skew_shape() const;
  /// The straight tableau when the cells form a straight shifted shape.
  std::optional<IncreasingShiftedTableau> as_straight() const;

  friend auto operator<=>(const SkewTableau&, const SkewTableau&) = default;

 private:
  std::map<Cell, int> cells_;
};

/// Cells of a shifted shape holding sorted sequences of entries. Covers
/// set-valued, standard set-valued and weak (multiset) set-valued tableaux;
/// the predicates below decide which flavour a value is.
class SetValuedTableau {
 public:
  using Box = std::vector<Entry>;

  SetValuedTableau() = default;
  /// rows[i][k] is the box at (i+1, i+1+k); boxes are sorted on construction.
  /// Throws std::invalid_argument on an empty box or a non-shifted shape.
  explicit SetValuedTableau(std::vector<std::vector<Box>> rows);

  StrictPartition shape() const;
  const std::vector<std::vector<Box>>& rows() const { return rows_; }
  const Box* at(Cell c) const;
  int num_entries() const;
  std::vector<std::pair<Cell, Entry>> entries() const;

  /// Boxes weakly increase along rows and columns (min of a box against the
  /// max of its west and north neighbours), no primes on the diagonal, each
  /// unprimed value in at most one box per column and each primed value in at
  /// most one box per row. Boxes are sets.
  bool is_set_valued() const;
  /// Same conditions with boxes allowed to repeat entries.
  bool is_weak_set_valued() const;
  /// Set-valued and the labels are 1..n, each once, primed or not.
  bool is_standard() const;

  /// Location of label k (primed or not) in a standard tableau.
  std::optional<std::pair<Cell, bool>> find_label(int k) const;

  /// Box-level append used while building recording tableaux.
  void add_to_box(Cell c, Entry e);
  void add_box(Cell c, Entry e);

  friend auto operator<=>(const SetValuedTableau&, const SetValuedTableau&) = default;

 private:
  bool satisfies_conditions(bool allow_repeats) const;
  std::vector<std::vector<Box>> rows_;
};

/// Increasing filling of an ordinary (left-justified) partition shape.
class UnshiftedTableau {
 public:
  UnshiftedTableau() = default;
  explicit UnshiftedTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<int> shape() const;

  friend auto operator<=>(const UnshiftedTableau&, const UnshiftedTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Every strict partition whose rows and columns are at most max_len long
/// (row count at most max_len as well), in lexicographic order.
std::vector<StrictPartition> strict_partitions_in_box(int max_len);
/// Strict partitions of exactly n boxes.
std::vector<StrictPartition> strict_partitions_of(int n);

/// All increasing fillings of outer/inner with entries in [lo, hi], in
/// row-reading order. The callback returns false to stop early.
void for_each_skew_filling(const SkewShape& shape, int lo, int hi,
                           const std::function<bool(const std::map<Cell, int>&)>& fn);

/// Every increasing shifted tableau with entries in [n], ordered by shape
/// then filling.
std::vector<IncreasingShiftedTableau> enumerate_increasing_shifted_tableaux(int n);

/// Every standard set-valued shifted tableau of the given shape with labels 1..n.
std::vector<SetValuedTableau> enumerate_standard_set_valued(const StrictPartition& shape,
                                                            int n);

}  // namespace shk
