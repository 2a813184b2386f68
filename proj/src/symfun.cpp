// SPDX-License-Identifier: Apache-2.0

#include "shk/symfun.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "shk/equivalence.hpp"
#include "shk/insertion.hpp"

namespace shk {

namespace {

int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// TruncatedPolynomial

TruncatedPolynomial::TruncatedPolynomial(int nvars, int maxdeg) : nvars_(nvars), maxdeg_(maxdeg) {
  if (nvars < 0 || maxdeg < 0) throw std::invalid_argument("nvars and maxdeg must be nonnegative");
}

TruncatedPolynomial TruncatedPolynomial::constant(int nvars, int maxdeg, Integer c) {
  TruncatedPolynomial p(nvars, maxdeg);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

TruncatedPolynomial TruncatedPolynomial::variable(int nvars, int maxdeg, int i) {
  TruncatedPolynomial p(nvars, maxdeg);
  p.add_term(monomial(nvars, {i}), 1);
  return p;
}

void TruncatedPolynomial::add_term(const Exponent& exp, const Integer& c) {
  if (static_cast<int>(exp.size()) != nvars_) throw std::invalid_argument("exponent has the wrong length");
  for (int a : exp)
    if (a < 0) throw std::invalid_argument("negative exponent");
  if (degree(exp) > maxdeg_ || c == 0) return;
  auto [it, fresh] = terms_.try_emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer TruncatedPolynomial::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<std::pair<Exponent, Integer>> TruncatedPolynomial::terms() const {
  std::vector<std::pair<Exponent, Integer>> out(terms_.begin(), terms_.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int da = degree(a.first), db = degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  return out;
}

TruncatedPolynomial TruncatedPolynomial::homogeneous_component(int d) const {
  TruncatedPolynomial p(nvars_, maxdeg_);
  for (const auto& [e, c] : terms_)
    if (degree(e) == d) p.terms_.emplace(e, c);
  return p;
}

int TruncatedPolynomial::min_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    const int d = degree(e);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

TruncatedPolynomial TruncatedPolynomial::operator-() const { return scaled(-1); }

TruncatedPolynomial TruncatedPolynomial::scaled(const Integer& c) const {
  TruncatedPolynomial p(nvars_, maxdeg_);
  if (c == 0) return p;
  for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
  return p;
}

void TruncatedPolynomial::check_compatible(const TruncatedPolynomial& o) const {
  if (nvars_ != o.nvars_ || maxdeg_ != o.maxdeg_)
    throw std::invalid_argument("polynomials live in different truncated rings");
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  a.check_compatible(b);
  TruncatedPolynomial p(a.nvars_, a.maxdeg_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    const int da = degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + degree(eb) > a.maxdeg_) continue;
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

std::string to_string(const TruncatedPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    const bool is_const = degree(e) == 0;
    if (mag != 1 || is_const) os << mag;
    bool need_sep = mag != 1;
    for (int i = 0; i < static_cast<int>(e.size()); ++i) {
      if (!e[i]) continue;
      if (need_sep) os << "*";
      os << "x" << i + 1;
      if (e[i] > 1) os << "^" << e[i];
      need_sep = true;
    }
  }
  return os.str();
}

Exponent monomial(int nvars, std::initializer_list<int> vars) {
  Exponent e(nvars, 0);
  for (int v : vars) {
    if (v < 1 || v > nvars) throw std::invalid_argument("variable index out of range");
    ++e[v - 1];
  }
  return e;
}

// ---------------------------------------------------------------------------
// Generating functions

TruncatedPolynomial fqs(int n, const std::set<int>& descents, int nvars, int maxdeg) {
  TruncatedPolynomial p(nvars, maxdeg);
  if (n > maxdeg) return p;
  for (int d : descents)
    if (d < 1 || d >= n) throw std::invalid_argument("descent outside [n-1]");
  Exponent e(nvars, 0);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos > n) {
      p.add_term(e, 1);
      return;
    }
    for (int i = lo; i <= nvars; ++i) {
      ++e[i - 1];
      rec(pos + 1, descents.count(pos) ? i + 1 : i);
      --e[i - 1];
    }
  };
  rec(1, 1);
  return p;
}

namespace {

enum class Flavour { Weak, SetValued, Unshifted };

// Enumerates fillings cell by cell in row-reading order. Entries are ranks
// 2v - primed; a box is a sorted run of ranks whose minimum is at least the
// maximum of its west and north neighbours.
TruncatedPolynomial tableau_sum(const std::vector<Cell>& cells, Flavour flavour, int nvars,
                                int maxdeg, bool signed_sum) {
  TruncatedPolynomial p(nvars, maxdeg);
  const int ncells = static_cast<int>(cells.size());
  if (ncells > maxdeg) return p;
  if (ncells == 0) return TruncatedPolynomial::constant(nvars, maxdeg, 1);

  std::map<Cell, int> index;
  int max_row = 0, max_col = 0;
  for (int k = 0; k < ncells; ++k) {
    index[cells[k]] = k;
    max_row = std::max(max_row, cells[k].row);
    max_col = std::max(max_col, cells[k].col);
  }
  std::vector<int> west(ncells, -1), north(ncells, -1);
  for (int k = 0; k < ncells; ++k) {
    if (auto it = index.find({cells[k].row, cells[k].col - 1}); it != index.end()) west[k] = it->second;
    if (auto it = index.find({cells[k].row - 1, cells[k].col}); it != index.end()) north[k] = it->second;
  }

  const bool allow_primes = flavour != Flavour::Unshifted;
  const bool allow_repeats = flavour == Flavour::Weak;
  std::vector<int> box_max(ncells, 0);
  // boxes holding unprimed v in column c, primed v in row r
  std::vector<std::vector<int>> col_use(max_col + 1, std::vector<int>(nvars + 1, 0));
  std::vector<std::vector<int>> row_use(max_row + 1, std::vector<int>(nvars + 1, 0));
  Exponent e(nvars, 0);
  int used = 0;

  std::function<void(int, int, int)> rec = [&](int k, int prev, int in_box) {
    if (k == ncells) {
      p.add_term(e, signed_sum && (used - ncells) % 2 ? Integer(-1) : Integer(1));
      return;
    }
    const Cell c = cells[k];
    if (in_box > 0) {
      box_max[k] = prev;
      rec(k + 1, 0, 0);
    }
    // room for one more entry here and one in every later cell
    if (used + 1 + (ncells - k - 1) > maxdeg) return;
    int lo = std::max(prev, 1);
    if (in_box == 0) {
      if (west[k] >= 0) lo = std::max(lo, box_max[west[k]]);
      if (north[k] >= 0) lo = std::max(lo, box_max[north[k]]);
    } else if (!allow_repeats) {
      lo = prev + 1;
    }
    for (int r = lo; r <= 2 * nvars; ++r) {
      const bool primed = r % 2 == 1;
      const int v = (r + 1) / 2;
      if (primed && (!allow_primes || c.row == c.col)) continue;
      const bool repeat = in_box > 0 && r == prev;
      int& slot = primed ? row_use[c.row][v] : col_use[c.col][v];
      if (!repeat && slot > 0) continue;
      if (!repeat) ++slot;
      ++e[v - 1];
      ++used;
      rec(k, r, in_box + 1);
      --used;
      --e[v - 1];
      if (!repeat) --slot;
    }
  };
  rec(0, 0, 0);
  return p;
}

}  // namespace

TruncatedPolynomial K_poly(const StrictPartition& shape, int nvars, int maxdeg) {
  return tableau_sum(shape.cells(), Flavour::Weak, nvars, maxdeg, false);
}

TruncatedPolynomial GP_poly(const StrictPartition& shape, int nvars, int maxdeg) {
  return tableau_sum(shape.cells(), Flavour::SetValued, nvars, maxdeg, true);
}

TruncatedPolynomial G_poly(const std::vector<int>& shape, int nvars, int maxdeg) {
  for (std::size_t i = 0; i < shape.size(); ++i)
    if (shape[i] <= 0 || (i > 0 && shape[i] > shape[i - 1]))
      throw std::invalid_argument("not a partition");
  std::vector<Cell> cells;
  for (int i = 0; i < static_cast<int>(shape.size()); ++i)
    for (int j = 1; j <= shape[i]; ++j) cells.push_back({i + 1, j});
  return tableau_sum(cells, Flavour::Unshifted, nvars, maxdeg, false);
}

std::vector<Word> words_inserting_to(const IncreasingShiftedTableau& t, int max_len) {
  const auto target = t.shape();
  const auto letters = t.entry_set();
  std::vector<Word> out;
  Word w;
  std::function<void(const IncreasingShiftedTableau&)> rec = [&](const IncreasingShiftedTableau& cur) {
    if (cur == t) out.push_back(w);
    if (static_cast<int>(w.size()) == max_len) return;
    for (int a : letters) {
      auto next = insert_one(cur, a).tableau;
      // shapes only grow along a word
      if (!target.contains(next.shape())) continue;
      w.push_back(a);
      rec(next);
      w.pop_back();
    }
  };
  rec(IncreasingShiftedTableau{});
  return out;
}

TruncatedPolynomial K_poly_via_words(const IncreasingShiftedTableau& t, int nvars, int maxdeg) {
  if (!is_constructed_urt(t))
    throw std::invalid_argument("word expansion needs a minimal or superstandard tableau");
  TruncatedPolynomial p(nvars, maxdeg);
  for (const auto& w : words_inserting_to(t, maxdeg))
    p += fqs(static_cast<int>(w.size()), descent_set(w), nvars, maxdeg);
  return p;
}

TruncatedPolynomial geometric_substitute(const TruncatedPolynomial& p) {
  const int n = p.nvars(), d = p.maxdeg();
  TruncatedPolynomial out(n, d);
  Exponent k(n, 0);
  for (const auto& [a, c] : p.terms()) {
    // x^a -> prod_i (-1)^{a_i} sum_{k_i >= a_i} C(k_i - 1, a_i - 1) x_i^{k_i}
    std::function<void(int, int, Integer)> rec = [&](int i, int left, Integer coef) {
      if (i == n) {
        out.add_term(k, coef);
        return;
      }
      if (a[i] == 0) {
        k[i] = 0;
        rec(i + 1, left, coef);
        return;
      }
      const Integer sign = a[i] % 2 ? -1 : 1;
      for (int ki = a[i]; ki <= left; ++ki) {
        k[i] = ki;
        rec(i + 1, left - ki, coef * sign * binomial(ki - 1, a[i] - 1));
      }
      k[i] = 0;
    };
    rec(0, d, c);
  }
  return out;
}

bool is_symmetric(const TruncatedPolynomial& p) {
  for (int i = 0; i + 1 < p.nvars(); ++i)
    for (const auto& [e, c] : p.terms()) {
      Exponent s = e;
      std::swap(s[i], s[i + 1]);
      if (p.coefficient(s) != c) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Standardization and relabeling

SetValuedTableau standardize(const SetValuedTableau& w) {
  if (!w.is_weak_set_valued()) throw std::invalid_argument("not a weak set-valued tableau");
  const auto& rows = w.rows();
  struct Slot {
    Cell cell;
    std::size_t pos;  // index inside the box
  };
  std::map<Entry, std::vector<Slot>> by_entry;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < rows[r].size(); ++k)
      for (std::size_t i = 0; i < rows[r][k].size(); ++i) {
        const Cell c{static_cast<int>(r) + 1, static_cast<int>(r + k) + 1};
        by_entry[rows[r][k][i]].push_back({c, i});
      }
  auto out_rows = rows;
  int next = 0;
  for (auto& [entry, slots] : by_entry) {
    // primed copies top to bottom, unprimed copies left to right
    std::stable_sort(slots.begin(), slots.end(), [&](const Slot& a, const Slot& b) {
      return entry.primed ? a.cell.row < b.cell.row : a.cell.col < b.cell.col;
    });
    for (const Slot& s : slots)
      out_rows[s.cell.row - 1][s.cell.col - s.cell.row][s.pos] = Entry{++next, entry.primed};
  }
  return SetValuedTableau(std::move(out_rows));
}

bool agrees_with(const std::vector<int>& s, const std::set<int>& descents) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] > s[i + 1]) return false;
    if (descents.count(static_cast<int>(i) + 1) && s[i] == s[i + 1]) return false;
  }
  return std::all_of(s.begin(), s.end(), [](int v) { return v >= 1; });
}

SetValuedTableau relabel(const SetValuedTableau& t, const std::vector<int>& s) {
  if (!t.is_standard()) throw std::invalid_argument("relabeling needs a standard tableau");
  if (static_cast<int>(s.size()) != t.num_entries())
    throw std::invalid_argument("monomial degree differs from the number of labels");
  if (!agrees_with(s, descent_set_recording(t)))
    throw std::invalid_argument("monomial does not agree with the descent set");
  auto rows = t.rows();
  for (auto& r : rows)
    for (auto& box : r)
      for (auto& e : box) e.value = s[e.value - 1];
  SetValuedTableau out(std::move(rows));
  if (!out.is_weak_set_valued()) throw std::logic_error("relabeling produced an invalid tableau");
  return out;
}

GDecomposition g_decomposition(const IncreasingShiftedTableau& t, int nvars, int maxdeg,
                               int max_word_len) {
  GDecomposition out{{}, TruncatedPolynomial(nvars, maxdeg), false};
  for (const auto& w : words_inserting_to(t, max_word_len)) out.tableaux.insert(hecke_insert_classic(w));
  for (const auto& s : out.tableaux) out.g_sum += G_poly(s.shape(), nvars, maxdeg);
  out.matches_k = out.g_sum == K_poly(t.shape(), nvars, maxdeg);
  return out;
}

}  // namespace shk
