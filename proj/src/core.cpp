// SPDX-License-Identifier: Apache-2.0

#include "shk/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace shk {

bool adjacent(Cell a, Cell b) {
  return (a.row == b.row && std::abs(a.col - b.col) == 1) ||
         (a.col == b.col && std::abs(a.row - b.row) == 1);
}

// ---------------------------------------------------------------------------
// StrictPartition / SkewShape

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("strict partition parts must be positive");
    if (i > 0 && parts_[i] >= parts_[i - 1])
      throw std::invalid_argument("strict partition parts must strictly decrease: " +
                                  to_string());
  }
}

int StrictPartition::part(int row) const {
  if (row < 1 || row > rows()) return 0;
  return parts_[row - 1];
}

int StrictPartition::size() const {
  int n = 0;
  for (int p : parts_) n += p;
  return n;
}

bool StrictPartition::contains(Cell c) const {
  if (c.row < 1 || c.row > rows()) return false;
  return c.col >= c.row && c.col <= c.row + parts_[c.row - 1] - 1;
}

bool StrictPartition::contains(const StrictPartition& inner) const {
  if (inner.rows() > rows()) return false;
  for (int r = 1; r <= inner.rows(); ++r)
    if (inner.part(r) > part(r)) return false;
  return true;
}

std::vector<Cell> StrictPartition::cells() const {
  std::vector<Cell> out;
  for (int r = 1; r <= rows(); ++r)
    for (int c = r; c < r + parts_[r - 1]; ++c) out.push_back({r, c});
  return out;
}

std::string StrictPartition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

SkewShape::SkewShape(StrictPartition outer, StrictPartition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("inner shape " + inner_.to_string() +
                                " is not contained in " + outer_.to_string());
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (Cell c : outer_.cells())
    if (!inner_.contains(c)) out.push_back(c);
  return out;
}

bool SkewShape::is_maximal(Cell c) const {
  return contains(c) && !contains({c.row, c.col + 1}) && !contains({c.row + 1, c.col});
}

bool SkewShape::is_minimal(Cell c) const {
  return contains(c) && !contains({c.row, c.col - 1}) && !contains({c.row - 1, c.col});
}

std::string to_string(Entry e) {
  return std::to_string(e.value) + (e.primed ? "'" : "");
}

// ---------------------------------------------------------------------------
// Words

void validate_word(std::span<const int> w) {
  for (int a : w)
    if (a <= 0) throw std::invalid_argument("word letters must be positive integers");
}

bool is_initial(std::span<const int> w) {
  if (w.empty()) return true;
  std::set<int> s(w.begin(), w.end());
  return *s.begin() == 1 && *s.rbegin() == static_cast<int>(s.size());
}

Word restrict_word(std::span<const int> w, int lo, int hi) {
  Word out;
  for (int a : w)
    if (a >= lo && a <= hi) out.push_back(a);
  return out;
}

Word shift_word(std::span<const int> w, int by) {
  Word out(w.begin(), w.end());
  for (int& a : out) a += by;
  return out;
}

std::string word_to_string(std::span<const int> w) {
  const bool small = std::all_of(w.begin(), w.end(), [](int a) { return a <= 9; });
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!small && i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

Word parse_word(const std::string& s) {
  Word w;
  if (s.find(',') == std::string::npos) {
    for (char ch : s) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (ch < '1' || ch > '9') throw ParseError("bad letter '" + std::string(1, ch) + "' in word");
      w.push_back(ch - '0');
    }
    return w;
  }
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int a = std::stoi(tok, &used);
      if (a <= 0) throw ParseError("word letters must be positive: " + tok);
      w.push_back(a);
    } catch (const std::logic_error&) {
      throw ParseError("bad letter '" + tok + "' in word");
    }
  }
  return w;
}

std::vector<Word> all_words(int alphabet, int min_len, int max_len) {
  std::vector<Word> out;
  for (int len = std::max(min_len, 0); len <= max_len; ++len) {
    if (alphabet <= 0 && len > 0) break;
    Word w(len, 1);
    while (true) {
      out.push_back(w);
      int i = len - 1;
      while (i >= 0 && w[i] == alphabet) w[i--] = 1;
      if (i < 0) break;
      ++w[i];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// IncreasingShiftedTableau

IncreasingShiftedTableau::IncreasingShiftedTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  StrictPartition shape(parts);  // validates the shape
  for (int i = 0; i < num_rows(); ++i) {
    for (std::size_t k = 0; k < rows_[i].size(); ++k) {
      if (rows_[i][k] <= 0) throw std::invalid_argument("tableau entries must be positive");
      if (k > 0 && rows_[i][k] <= rows_[i][k - 1])
        throw std::invalid_argument("tableau rows must strictly increase");
      // cell (i+1, i+1+k); above is row i at offset k+1
      if (i > 0 && rows_[i][k] <= rows_[i - 1][k + 1])
        throw std::invalid_argument("tableau columns must strictly increase");
    }
  }
}

StrictPartition IncreasingShiftedTableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return StrictPartition(std::move(parts));
}

int IncreasingShiftedTableau::size() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

std::optional<int> IncreasingShiftedTableau::at(Cell c) const {
  if (c.row < 1 || c.row > num_rows()) return std::nullopt;
  const auto& r = rows_[c.row - 1];
  const int k = c.col - c.row;
  if (k < 0 || k >= static_cast<int>(r.size())) return std::nullopt;
  return r[k];
}

int IncreasingShiftedTableau::max_entry() const {
  int m = 0;
  for (const auto& r : rows_)
    if (!r.empty()) m = std::max(m, r.back());
  return m;
}

std::set<int> IncreasingShiftedTableau::entry_set() const {
  std::set<int> s;
  for (const auto& r : rows_) s.insert(r.begin(), r.end());
  return s;
}

Word IncreasingShiftedTableau::reading_word() const {
  Word w;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

IncreasingShiftedTableau IncreasingShiftedTableau::restrict_prefix(int k) const {
  std::vector<std::vector<int>> out;
  for (const auto& r : rows_) {
    std::vector<int> kept;
    for (int v : r)
      if (v <= k) kept.push_back(v);
    if (kept.empty()) break;
    out.push_back(std::move(kept));
  }
  return IncreasingShiftedTableau(std::move(out));
}

SkewTableau IncreasingShiftedTableau::restrict_interval(int lo, int hi) const {
  if (lo > hi) throw std::invalid_argument("restriction interval is empty");
  std::map<Cell, int> cells;
  for (int i = 0; i < num_rows(); ++i)
    for (std::size_t k = 0; k < rows_[i].size(); ++k)
      if (rows_[i][k] >= lo && rows_[i][k] <= hi)
        cells[{i + 1, i + 1 + static_cast<int>(k)}] = rows_[i][k];
  return SkewTableau(std::move(cells));
}

IncreasingShiftedTableau IncreasingShiftedTableau::shifted(int by) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (int& v : r) v += by;
  return IncreasingShiftedTableau(std::move(rows));
}

// ---------------------------------------------------------------------------
// SkewTableau

SkewTableau::SkewTableau(std::map<Cell, int> cells) : cells_(std::move(cells)) {
  for (const auto& [c, v] : cells_) {
    if (c.row < 1 || c.col < 1) throw std::invalid_argument("cells are 1-indexed");
    if (v <= 0) throw std::invalid_argument("tableau entries must be positive");
    if (auto l = at({c.row, c.col - 1}); l && *l >= v)
      throw std::invalid_argument("skew filling rows must strictly increase");
    if (auto u = at({c.row - 1, c.col}); u && *u >= v)
      throw std::invalid_argument("skew filling columns must strictly increase");
  }
}

std::optional<int> SkewTableau::at(Cell c) const {
  auto it = cells_.find(c);
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

Word SkewTableau::reading_word() const {
  Word w;
  if (cells_.empty()) return w;
  const int last_row = cells_.rbegin()->first.row;
  for (int r = last_row; r >= 1; --r)
    for (auto it = cells_.lower_bound({r, 0}); it != cells_.end() && it->first.row == r; ++it)
      w.push_back(it->second);
  return w;
}

int SkewTableau::max_entry() const {
  int m = 0;
  for (const auto& [c, v] : cells_) m = std::max(m, v);
  return m;
}

StrictPartition SkewTableau::implied_inner() const {
  if (cells_.empty()) return {};
  const int last_row = cells_.rbegin()->first.row;
  std::vector<int> reach(last_row + 2, 0);  // max filled column in rows >= r
  std::vector<int> first(last_row + 2, 0);  // first filled column in row r
  for (const auto& [c, v] : cells_) {
    if (!first[c.row]) first[c.row] = c.col;
  }
  for (int r = last_row; r >= 1; --r) {
    reach[r] = reach[r + 1];
    for (auto it = cells_.lower_bound({r, 0}); it != cells_.end() && it->first.row == r; ++it)
      reach[r] = std::max(reach[r], it->first.col);
  }
  std::vector<int> parts;
  for (int r = 1; r <= last_row; ++r) {
    int end = first[r] ? first[r] - 1 : reach[r];
    parts.push_back(std::max(end - r + 1, 0));
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  try {
    return StrictPartition(parts);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("filled cells do not sit on a shifted skew shape");
  }
}

std::optional<SkewShape> SkewTableau::skew_shape() const {
  StrictPartition inner;
  try {
    inner = implied_inner();
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (cells_.empty()) return SkewShape({}, {});
  const int last_row = cells_.rbegin()->first.row;
  std::vector<int> parts;
  for (int r = 1; r <= last_row; ++r) {
    int last = 0;
    for (auto it = cells_.lower_bound({r, 0}); it != cells_.end() && it->first.row == r; ++it)
      last = it->first.col;
    int len = last ? last - r + 1 : inner.part(r);
    if (len <= 0) return std::nullopt;
    parts.push_back(len);
  }
  try {
    SkewShape shape(StrictPartition(parts), inner);
    auto expected = shape.cells();
    if (expected.size() != cells_.size()) return std::nullopt;
    for (Cell c : expected)
      if (!cells_.count(c)) return std::nullopt;
    return shape;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::optional<IncreasingShiftedTableau> SkewTableau::as_straight() const {
  auto shape = skew_shape();
  if (!shape || !shape->inner().empty()) return std::nullopt;
  std::vector<std::vector<int>> rows(shape->outer().rows());
  for (const auto& [c, v] : cells_) rows[c.row - 1].push_back(v);
  return IncreasingShiftedTableau(std::move(rows));
}

// ---------------------------------------------------------------------------
// SetValuedTableau

SetValuedTableau::SetValuedTableau(std::vector<std::vector<Box>> rows) : rows_(std::move(rows)) {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  StrictPartition shape(parts);
  for (auto& r : rows_)
    for (auto& box : r) {
      if (box.empty()) throw std::invalid_argument("set-valued boxes must be nonempty");
      for (const Entry& e : box)
        if (e.value <= 0) throw std::invalid_argument("entries must be positive");
      std::sort(box.begin(), box.end());
    }
}

StrictPartition SetValuedTableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return StrictPartition(std::move(parts));
}

const SetValuedTableau::Box* SetValuedTableau::at(Cell c) const {
  if (c.row < 1 || c.row > static_cast<int>(rows_.size())) return nullptr;
  const auto& r = rows_[c.row - 1];
  const int k = c.col - c.row;
  if (k < 0 || k >= static_cast<int>(r.size())) return nullptr;
  return &r[k];
}

int SetValuedTableau::num_entries() const {
  int n = 0;
  for (const auto& r : rows_)
    for (const auto& b : r) n += static_cast<int>(b.size());
  return n;
}

std::vector<std::pair<Cell, Entry>> SetValuedTableau::entries() const {
  std::vector<std::pair<Cell, Entry>> out;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t k = 0; k < rows_[i].size(); ++k)
      for (const Entry& e : rows_[i][k])
        out.push_back({{static_cast<int>(i) + 1, static_cast<int>(i + k) + 1}, e});
  return out;
}

bool SetValuedTableau::satisfies_conditions(bool allow_repeats) const {
  std::map<int, std::set<int>> unprimed_in_col;  // value -> columns seen
  std::map<int, std::set<int>> primed_in_row;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t k = 0; k < rows_[i].size(); ++k) {
      const Cell c{static_cast<int>(i) + 1, static_cast<int>(i + k) + 1};
      const Box& box = rows_[i][k];
      if (!allow_repeats)
        for (std::size_t t = 1; t < box.size(); ++t)
          if (box[t] == box[t - 1]) return false;
      if (const Box* left = at({c.row, c.col - 1}); left && box.front() < left->back()) return false;
      if (const Box* up = at({c.row - 1, c.col}); up && box.front() < up->back()) return false;
      std::set<int> seen_unprimed, seen_primed;
      for (const Entry& e : box) {
        if (e.primed && c.on_diagonal()) return false;
        if (e.primed)
          seen_primed.insert(e.value);
        else
          seen_unprimed.insert(e.value);
      }
      for (int v : seen_unprimed)
        if (!unprimed_in_col[v].insert(c.col).second) return false;
      for (int v : seen_primed)
        if (!primed_in_row[v].insert(c.row).second) return false;
    }
  }
  return true;
}

bool SetValuedTableau::is_set_valued() const { return satisfies_conditions(false); }
bool SetValuedTableau::is_weak_set_valued() const { return satisfies_conditions(true); }

bool SetValuedTableau::is_standard() const {
  if (!is_set_valued()) return false;
  std::vector<int> labels;
  for (const auto& [c, e] : entries()) labels.push_back(e.value);
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::optional<std::pair<Cell, bool>> SetValuedTableau::find_label(int k) const {
  for (const auto& [c, e] : entries())
    if (e.value == k) return std::make_pair(c, e.primed);
  return std::nullopt;
}

void SetValuedTableau::add_to_box(Cell c, Entry e) {
  if (!at(c)) throw std::invalid_argument("no such box");
  auto& box = rows_[c.row - 1][c.col - c.row];
  box.insert(std::upper_bound(box.begin(), box.end(), e), e);
}

void SetValuedTableau::add_box(Cell c, Entry e) {
  const int nrows = static_cast<int>(rows_.size());
  if (c.row == nrows + 1 && c.col == c.row) {
    rows_.push_back({{e}});
  } else if (c.row >= 1 && c.row <= nrows &&
             c.col == c.row + static_cast<int>(rows_[c.row - 1].size())) {
    rows_[c.row - 1].push_back({e});
  } else {
    throw std::invalid_argument("box is not addable to the shape");
  }
  shape();  // validates strictness
}

// ---------------------------------------------------------------------------
// UnshiftedTableau

UnshiftedTableau::UnshiftedTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw std::invalid_argument("rows must be nonempty");
    if (i && rows_[i].size() > rows_[i - 1].size())
      throw std::invalid_argument("row lengths must weakly decrease");
    for (std::size_t k = 0; k < rows_[i].size(); ++k) {
      if (k && rows_[i][k] <= rows_[i][k - 1]) throw std::invalid_argument("rows must increase");
      if (i && rows_[i][k] <= rows_[i - 1][k]) throw std::invalid_argument("columns must increase");
    }
  }
}

std::vector<int> UnshiftedTableau::shape() const {
  std::vector<int> s;
  for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
  return s;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void strict_parts_rec(int max_part, std::vector<int>& cur, std::vector<StrictPartition>& out) {
  out.emplace_back(cur);
  for (int p = 1; p <= max_part; ++p) {
    cur.push_back(p);
    strict_parts_rec(p - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<StrictPartition> strict_partitions_in_box(int max_len) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  strict_parts_rec(std::max(max_len, 0), cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StrictPartition> strict_partitions_of(int n) {
  std::vector<StrictPartition> out;
  for (auto& p : strict_partitions_in_box(n))
    if (p.size() == n) out.push_back(p);
  return out;
}

void for_each_skew_filling(const SkewShape& shape, int lo, int hi,
                           const std::function<bool(const std::map<Cell, int>&)>& fn) {
  const auto cells = shape.cells();
  std::map<Cell, int> filling;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (stop) return;
    if (idx == cells.size()) {
      if (!fn(filling)) stop = true;
      return;
    }
    const Cell c = cells[idx];
    int min_v = lo;
    if (auto it = filling.find({c.row, c.col - 1}); it != filling.end())
      min_v = std::max(min_v, it->second + 1);
    if (auto it = filling.find({c.row - 1, c.col}); it != filling.end())
      min_v = std::max(min_v, it->second + 1);
    for (int v = min_v; v <= hi && !stop; ++v) {
      filling[c] = v;
      rec(idx + 1);
    }
    filling.erase(c);
  };
  rec(0);
}

std::vector<IncreasingShiftedTableau> enumerate_increasing_shifted_tableaux(int n) {
  std::vector<IncreasingShiftedTableau> out;
  for (const auto& lambda : strict_partitions_in_box(n)) {
    for_each_skew_filling(SkewShape(lambda, {}), 1, n, [&](const std::map<Cell, int>& f) {
      std::vector<std::vector<int>> rows(lambda.rows());
      for (const auto& [c, v] : f) rows[c.row - 1].push_back(v);
      out.emplace_back(std::move(rows));
      return true;
    });
  }
  return out;
}

std::vector<SetValuedTableau> enumerate_standard_set_valued(const StrictPartition& shape, int n) {
  std::vector<SetValuedTableau> out;
  const auto cells = shape.cells();
  if (n < static_cast<int>(cells.size())) return out;
  std::map<Cell, SetValuedTableau::Box> boxes;
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      if (boxes.size() != cells.size()) return;
      std::vector<std::vector<SetValuedTableau::Box>> rows(shape.rows());
      for (const auto& [c, b] : boxes) rows[c.row - 1].push_back(b);
      out.emplace_back(std::move(rows));
      return;
    }
    // labels still to place must cover the empty boxes
    if (static_cast<int>(cells.size() - boxes.size()) > n - k + 1) return;
    for (Cell c : cells) {
      // k is the largest label so far: west/north neighbours must already be
      // filled and east/south neighbours must still be empty.
      Cell w{c.row, c.col - 1}, no{c.row - 1, c.col}, e{c.row, c.col + 1}, s{c.row + 1, c.col};
      if (shape.contains(w) && !boxes.count(w)) continue;
      if (shape.contains(no) && !boxes.count(no)) continue;
      if (boxes.count(e) || boxes.count(s)) continue;
      for (bool primed : {true, false}) {
        if (primed && c.on_diagonal()) continue;
        boxes[c].push_back({k, primed});
        rec(k + 1);
        boxes[c].pop_back();
        if (boxes[c].empty()) boxes.erase(c);
      }
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace shk
