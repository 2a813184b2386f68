// SPDX-License-Identifier: Apache-2.0

#include "shk/insertion.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace shk {

namespace {

// Mutable working copy of a shifted tableau with 1-indexed accessors.
struct Grid {
  std::vector<std::vector<int>> rows;

  int row_len(int r) const {
    return r >= 1 && r <= static_cast<int>(rows.size()) ? static_cast<int>(rows[r - 1].size()) : 0;
  }
  std::optional<int> get(Cell c) const {
    const int len = row_len(c.row);
    const int k = c.col - c.row;
    if (k < 0 || k >= len) return std::nullopt;
    return rows[c.row - 1][k];
  }
  void set(Cell c, int v) { rows[c.row - 1][c.col - c.row] = v; }
  int col_height(int j) const {
    int h = 0;
    while (get({h + 1, j})) ++h;
    return h;
  }
  Cell rightmost(int r) const { return {r, r + row_len(r) - 1}; }
  // The result of writing x into c keeps rows and columns increasing,
  // given that everything east and south of c is already larger than x.
  bool fits(Cell c, int x) const {
    if (auto l = get({c.row, c.col - 1}); l && *l >= x) return false;
    if (auto u = get({c.row - 1, c.col}); u && *u >= x) return false;
    return true;
  }
};

}  // namespace

InsertionOutcome insert_one(const IncreasingShiftedTableau& t, int x) {
  if (x <= 0) throw std::invalid_argument("inserted letter must be positive");
  Grid g{t.rows()};  // earlier bumps persist even when the insertion fails
  bool column_mode = false;
  int idx = 1;  // current row or column
  while (true) {
    if (!column_mode) {
      const int r = idx;
      const int len = g.row_len(r);
      if (len == 0 || x >= g.rows[r - 1].back()) {
        const Cell fresh{r, r + len};
        const bool shape_ok = r == 1 || g.get({r - 1, fresh.col}).has_value();
        if (shape_ok && g.fits(fresh, x)) {
          if (r > static_cast<int>(g.rows.size())) g.rows.emplace_back();
          g.rows[r - 1].push_back(x);
          return {IncreasingShiftedTableau(std::move(g.rows)), fresh, false, true};
        }
        if (len > 0) {
          const int c = r + len - 1;
          const Cell end{g.col_height(c), c};
          return {IncreasingShiftedTableau(std::move(g.rows)), end, false, false};
        }
        // failed insertion into an empty row
        const Cell end = g.rightmost(r - 1);
        return {IncreasingShiftedTableau(std::move(g.rows)), end, true, false};
      }
      auto& row = g.rows[r - 1];
      const auto it = std::upper_bound(row.begin(), row.end(), x);
      const Cell yc{r, r + static_cast<int>(it - row.begin())};
      const int y = *it;
      if (g.fits(yc, x)) g.set(yc, x);
      if (yc.on_diagonal()) {
        column_mode = true;
        idx = yc.col + 1;
      } else {
        idx = r + 1;
      }
      x = y;
    } else {
      const int j = idx;
      const int h = g.col_height(j);
      if (h == 0 || x >= *g.get({h, j})) {
        const Cell fresh{h + 1, j};
        bool shape_ok;
        if (fresh.row == j)
          shape_ok = true;
        else
          shape_ok = fresh.row <= static_cast<int>(g.rows.size()) &&
                     g.rightmost(fresh.row).col == j - 1;
        if (shape_ok && g.fits(fresh, x)) {
          if (fresh.row > static_cast<int>(g.rows.size())) g.rows.emplace_back();
          g.rows[fresh.row - 1].push_back(x);
          return {IncreasingShiftedTableau(std::move(g.rows)), fresh, true, true};
        }
        const Cell end = g.rightmost(std::max(h, 1));
        return {IncreasingShiftedTableau(std::move(g.rows)), end, true, false};
      }
      int r = 1;
      while (*g.get({r, j}) <= x) ++r;
      const Cell yc{r, j};
      const int y = *g.get(yc);
      if (g.fits(yc, x)) g.set(yc, x);
      idx = j + 1;
      x = y;
    }
  }
}

InsertionResult insert_word(std::span<const int> w) {
  validate_word(w);
  InsertionResult res;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto out = insert_one(res.insertion, w[i]);
    const Entry label{static_cast<int>(i) + 1, out.column_mode_at_end};
    if (out.added_box)
      res.recording.add_box(out.terminal_cell, label);
    else
      res.recording.add_to_box(out.terminal_cell, label);
    res.insertion = std::move(out.tableau);
  }
  return res;
}

IncreasingShiftedTableau insertion_tableau(std::span<const int> w) {
  validate_word(w);
  IncreasingShiftedTableau t;
  for (int a : w) t = insert_one(t, a).tableau;
  return t;
}

std::vector<IncreasingShiftedTableau> insertion_sequence(std::span<const int> w) {
  validate_word(w);
  std::vector<IncreasingShiftedTableau> seq{IncreasingShiftedTableau{}};
  for (int a : w) seq.push_back(insert_one(seq.back(), a).tableau);
  return seq;
}

Word reverse_insert(const IncreasingShiftedTableau& p, const SetValuedTableau& q) {
  if (p.shape() != q.shape())
    throw std::invalid_argument("insertion and recording tableaux have different shapes");
  if (!q.is_standard()) throw std::invalid_argument("recording tableau is not standard");
  const int n = q.num_entries();

  // Where each label sits, and whether it opened its box.
  struct Step {
    Cell cell;
    bool primed;
    bool opens_box;
  };
  std::vector<Step> steps(n + 1);
  for (const auto& [c, e] : q.entries()) steps[e.value] = {c, e.primed, false};
  for (const auto& r : q.rows())
    for (const auto& box : r) steps[box.front().value].opens_box = true;

  const auto letters = p.entry_set();
  Word w;
  std::optional<Word> found;
  std::function<void(int, const IncreasingShiftedTableau&)> rec =
      [&](int k, const IncreasingShiftedTableau& cur) {
        if (found) return;
        if (k > n) {
          if (cur == p) found = w;
          return;
        }
        const Step& s = steps[k];
        for (int a : letters) {
          auto out = insert_one(cur, a);
          if (out.terminal_cell != s.cell || out.column_mode_at_end != s.primed ||
              out.added_box != s.opens_box)
            continue;
          w.push_back(a);
          rec(k + 1, out.tableau);
          w.pop_back();
          if (found) return;
        }
      };
  rec(1, IncreasingShiftedTableau{});
  if (!found) throw std::domain_error("no word inserts to this (P, Q) pair");
  return *found;
}

UnshiftedTableau hecke_insert_classic(std::span<const int> w) {
  validate_word(w);
  std::vector<std::vector<int>> rows;
  auto get = [&](int r, int c) -> std::optional<int> {
    if (r < 1 || r > static_cast<int>(rows.size())) return std::nullopt;
    if (c < 1 || c > static_cast<int>(rows[r - 1].size())) return std::nullopt;
    return rows[r - 1][c - 1];
  };
  for (int letter : w) {
    int x = letter;
    for (int r = 1;; ++r) {
      if (r > static_cast<int>(rows.size()) || x >= rows[r - 1].back()) {
        const int len = r > static_cast<int>(rows.size()) ? 0 : static_cast<int>(rows[r - 1].size());
        const int c = len + 1;
        auto up = get(r - 1, c);
        const bool shape_ok = r == 1 || up.has_value();
        const bool inc = (!up || *up < x) && (len == 0 || rows[r - 1].back() < x);
        if (shape_ok && inc) {
          if (len == 0) rows.emplace_back();
          rows[r - 1].push_back(x);
        }
        break;
      }
      auto& row = rows[r - 1];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      const int c = static_cast<int>(it - row.begin()) + 1;
      const int y = *it;
      auto left = get(r, c - 1);
      auto up = get(r - 1, c);
      if ((!left || *left < x) && (!up || *up < x)) *it = x;
      x = y;
    }
  }
  return UnshiftedTableau(std::move(rows));
}

std::set<int> descent_set(std::span<const int> w) {
  std::set<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.insert(static_cast<int>(i) + 1);
  return d;
}

std::set<int> descent_set_recording(const SetValuedTableau& q) {
  if (!q.is_standard()) throw std::invalid_argument("descent set needs a standard tableau");
  const int n = q.num_entries();
  std::vector<std::pair<Cell, bool>> where(n + 1);
  for (const auto& [c, e] : q.entries()) where[e.value] = {c, e.primed};
  std::set<int> d;
  for (int i = 1; i < n; ++i) {
    const auto [ci, pi] = where[i];
    const auto [cj, pj] = where[i + 1];
    const bool both_kinds = !pi && pj;
    const bool strictly_above = !pi && !pj && ci.row < cj.row;
    const bool primed_below = pi && pj && ci.row >= cj.row && ci != cj;
    if (both_kinds || strictly_above || primed_below) d.insert(i);
  }
  return d;
}

}  // namespace shk
