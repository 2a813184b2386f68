// SPDX-License-Identifier: Apache-2.0

#include "shk/kjdt.hpp"

#include <algorithm>
#include <functional>

namespace shk {

namespace {

constexpr Cell kNeighbours[] = {{0, 1}, {0, -1}, {1, 0}, {-1, 0}};

bool has_neighbour(const Board& b, Cell c, const Label& l) {
  for (Cell d : kNeighbours) {
    auto it = b.find({c.row + d.row, c.col + d.col});
    if (it != b.end() && it->second == l) return true;
  }
  return false;
}

std::pair<int, int> value_range(const Board& b) {
  int lo = 0, hi = 0;
  for (const auto& [c, l] : b)
    if (auto* v = std::get_if<Value>(&l)) {
      lo = lo ? std::min(lo, v->v) : v->v;
      hi = std::max(hi, v->v);
    }
  return {lo, hi};
}

int max_marker(const Board& b) {
  int p = 0;
  for (const auto& [c, l] : b)
    if (auto* m = std::get_if<Marker>(&l)) p = std::max(p, m->m);
  return p;
}

// Values along every row and column must increase, markers and holes aside.
void check_increasing(const Board& b, const std::string& when) {
  std::map<int, int> last_in_row, last_in_col;
  for (const auto& [c, l] : b) {  // map order is row-major
    auto* v = std::get_if<Value>(&l);
    if (!v) continue;
    auto r = last_in_row.find(c.row);
    if (r != last_in_row.end() && r->second >= v->v)
      throw std::domain_error("values stopped increasing along row " + std::to_string(c.row) +
                              " " + when);
    last_in_row[c.row] = v->v;
    auto k = last_in_col.find(c.col);
    if (k != last_in_col.end() && k->second >= v->v)
      throw std::domain_error("values stopped increasing down column " + std::to_string(c.col) +
                              " " + when);
    last_in_col[c.col] = v->v;
  }
}

IncreasingShiftedTableau straighten(const Board& b) {
  std::map<Cell, int> cells;
  for (const auto& [c, l] : b)
    if (auto* v = std::get_if<Value>(&l)) cells.emplace(c, v->v);
  auto t = SkewTableau(std::move(cells)).as_straight();
  if (!t) throw std::domain_error("rectification did not reach a straight shape");
  return *t;
}

}  // namespace

std::string to_string(const Label& l) {
  if (auto* v = std::get_if<Value>(&l)) return std::to_string(v->v);
  if (auto* m = std::get_if<Marker>(&l)) return "_" + std::to_string(m->m);
  return "o";
}

Board kswitch(const Board& board, const Label& a, const Label& b) {
  Board out = board;
  for (const auto& [c, l] : board) {
    if (l == a && has_neighbour(board, c, b))
      out[c] = b;
    else if (l == b && has_neighbour(board, c, a))
      out[c] = a;
  }
  return out;
}

Board slide(const Board& board, const std::set<Cell>& holes, SlideDirection dir) {
  Board b = board;
  for (Cell c : holes) {
    auto it = b.find(c);
    if (it != b.end() && std::holds_alternative<Value>(it->second))
      throw std::invalid_argument("slide cell holds a value");
    b[c] = Hole{};
  }
  if (holes.empty()) return b;
  const auto [lo, hi] = value_range(board);
  if (lo == 0) return b;
  if (dir == SlideDirection::Forward)
    for (int v = lo; v <= hi; ++v) b = kswitch(b, Value{v}, Hole{});
  else
    for (int v = hi; v >= lo; --v) b = kswitch(b, Value{v}, Hole{});
  return b;
}

SkewTableau values_of(const Board& board) {
  std::map<Cell, int> cells;
  for (const auto& [c, l] : board)
    if (auto* v = std::get_if<Value>(&l)) cells.emplace(c, v->v);
  return SkewTableau(std::move(cells));
}

Board board_from(const SkewTableau& t) {
  Board b;
  for (const auto& [c, v] : t.cells()) b.emplace(c, Value{v});
  return b;
}

SkewTableau antidiagonal_tableau(const Word& w) {
  validate_word(w);
  const int n = static_cast<int>(w.size());
  std::map<Cell, int> cells;
  for (int i = 1; i <= n; ++i) cells.emplace(Cell{i, 2 * n - i}, w[n - i]);
  return SkewTableau(std::move(cells));
}

SwitchSequence standard_switch_sequence(int p, int q) {
  SwitchSequence s;
  for (int i = p; i >= 1; --i)
    for (int j = 1; j <= q; ++j) s.emplace_back(i, j);
  return s;
}

std::string viability_violation(const SwitchSequence& seq, int p, int q) {
  std::map<std::pair<int, int>, std::size_t> pos;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const auto [i, j] = seq[k];
    if (i < 1 || i > p || j < 1 || j > q)
      return "switch (" + std::to_string(i) + "," + std::to_string(j) + ") is out of range";
    if (!pos.emplace(seq[k], k).second)
      return "every switch must occur exactly once; (" + std::to_string(i) + "," +
             std::to_string(j) + ") repeats";
  }
  if (static_cast<int>(pos.size()) != p * q) return "every switch must occur exactly once; some are missing";
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j < q; ++j)
      if (pos[{i, j}] > pos[{i, j + 1}])
        return "switches of marker " + std::to_string(i) + " must run through values 1.." +
               std::to_string(q) + " in order";
  for (int j = 1; j <= q; ++j)
    for (int i = p; i > 1; --i)
      if (pos[{i, j}] > pos[{i - 1, j}])
        return "switches with value " + std::to_string(j) + " must run through markers " +
               std::to_string(p) + "..1 in order";
  return {};
}

std::vector<SwitchSequence> enumerate_viable_sequences(int p, int q) {
  std::vector<SwitchSequence> out;
  std::vector<int> done(p + 2, 0);
  done[p + 1] = q;  // sentinel: the marker above p never blocks
  SwitchSequence cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == p * q) {
      out.push_back(cur);
      return;
    }
    for (int i = p; i >= 1; --i) {
      const int j = done[i] + 1;
      if (j > q || done[i + 1] < j) continue;
      ++done[i];
      cur.emplace_back(i, j);
      rec();
      cur.pop_back();
      --done[i];
    }
  };
  rec();
  return out;
}

Board mark_superstandard(const SkewTableau& t, const StrictPartition& inner) {
  Board b = board_from(t);
  int m = 0;
  for (Cell c : inner.cells()) {
    if (b.count(c)) throw std::invalid_argument("inner shape overlaps the filled cells");
    b.emplace(c, Marker{++m});
  }
  return b;
}

IncreasingShiftedTableau rectify_marked(const Board& marked, const SwitchSequence& seq) {
  const int p = max_marker(marked);
  const int q = value_range(marked).second;
  if (auto why = viability_violation(seq, p, q); !why.empty())
    throw std::invalid_argument("switch sequence is not viable: " + why);
  check_increasing(marked, "in the input");
  Board b = marked;
  std::vector<int> remaining(p + 1, q);
  for (const auto& [i, j] : seq) {
    b = kswitch(b, Marker{i}, Value{j});
    if (--remaining[i] == 0) check_increasing(b, "after the slide of marker " + std::to_string(i));
  }
  return straighten(b);
}

IncreasingShiftedTableau rectify_superstandard(const SkewTableau& t) {
  return rectify_superstandard(t, t.implied_inner());
}

IncreasingShiftedTableau rectify_superstandard(const SkewTableau& t, const StrictPartition& inner) {
  Board b = mark_superstandard(t, inner);
  return rectify_marked(b, standard_switch_sequence(inner.size(), value_range(b).second));
}

IncreasingShiftedTableau rectify_by_slides(const SkewTableau& t,
                                           const std::vector<std::set<Cell>>& slides) {
  SkewTableau cur = t;
  for (std::size_t k = 0; k < slides.size(); ++k) {
    const StrictPartition inner = cur.implied_inner();
    for (Cell c : slides[k]) {
      const bool inside = inner.contains(c);
      const bool maximal = !inner.contains(Cell{c.row, c.col + 1}) && !inner.contains(Cell{c.row + 1, c.col});
      if (!inside || !maximal)
        throw std::invalid_argument("slide " + std::to_string(k + 1) +
                                    " uses a box that is not a maximal inner box");
    }
    Board b = slide(board_from(cur), slides[k], SlideDirection::Forward);
    check_increasing(b, "after slide " + std::to_string(k + 1));
    cur = values_of(b);
  }
  return straighten(board_from(cur));
}

}  // namespace shk
