// SPDX-License-Identifier: Apache-2.0

#include "shk/skpr.hpp"

#include <algorithm>
#include <functional>

#include "shk/insertion.hpp"
#include "shk/parallel.hpp"

namespace shk {

namespace {

// Strict partitions nu containing `inner` with nu_i <= inner_i + extra and at
// most rows(inner) + extra rows.
std::vector<StrictPartition> bounded_outer_shapes(const StrictPartition& inner, int extra) {
  std::vector<StrictPartition> out;
  const int max_rows = inner.rows() + extra;
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int row) {
    out.emplace_back(parts);
    if (row > max_rows) return;
    const int hi = std::min(inner.part(row) + extra, parts.empty() ? 1 << 20 : parts.back() - 1);
    const int lo = std::max(inner.part(row), 1);
    for (int p = lo; p <= hi; ++p) {
      parts.push_back(p);
      rec(row + 1);
      parts.pop_back();
    }
  };
  // rows of the inner shape are mandatory
  std::function<void(int)> fixed = [&](int row) {
    if (row > inner.rows()) {
      rec(row);
      return;
    }
    const int hi = std::min(inner.part(row) + extra, parts.empty() ? 1 << 20 : parts.back() - 1);
    for (int p = inner.part(row); p <= hi; ++p) {
      parts.push_back(p);
      fixed(row + 1);
      parts.pop_back();
    }
  };
  fixed(1);
  return out;
}

int alphabet_size(const Word& w) { return w.empty() ? 0 : *std::max_element(w.begin(), w.end()); }

void require_urt(const IncreasingShiftedTableau& t, const Budget& budget) {
  if (is_constructed_urt(t)) return;
  if (std::holds_alternative<Counterexample>(is_urt_bounded(t, budget)))
    throw std::invalid_argument("tableau is not a unique rectification target");
}

}  // namespace

std::vector<Word> shuffle(const Word& u, const Word& v) {
  std::vector<Word> out;
  Word cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == u.size() && j == v.size()) {
      out.push_back(cur);
      return;
    }
    if (i < u.size()) {
      cur.push_back(u[i]);
      rec(i + 1, j);
      cur.pop_back();
    }
    if (j < v.size()) {
      cur.push_back(v[j]);
      rec(i, j + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

WordClass make_class(const Word& h, Budget budget) {
  if (!is_initial(h)) throw std::invalid_argument("class representative must be an initial word");
  WordClass c;
  c.representative = h;
  for (const auto& w : explore_class(h, budget, RewriteMode::Weak, &c.exhausted))
    c.tableaux.insert(insertion_tableau(w));
  c.verified_urt = c.tableaux.size() == 1;
  return c;
}

TableauSet extend_product(const TableauSet& left, int n, const TableauSet& right, int m) {
  TableauSet out;
  TableauSet shifted_right;
  for (const auto& t : right) shifted_right.insert(t.shifted(n));
  for (const auto& t1 : left) {
    const StrictPartition inner = t1.shape();
    for (const auto& nu : bounded_outer_shapes(inner, m)) {
      for_each_skew_filling(SkewShape(nu, inner), n + 1, n + m, [&](const std::map<Cell, int>& f) {
        std::vector<std::vector<int>> rows = t1.rows();
        rows.resize(nu.rows());
        for (const auto& [c, v] : f) rows[c.row - 1].push_back(v);
        IncreasingShiftedTableau t(std::move(rows));
        if (shifted_right.count(insertion_tableau(restrict_word(t.reading_word(), n + 1, n + m))))
          out.insert(std::move(t));
        return true;
      });
    }
  }
  return out;
}

TableauSet class_product_urt(const IncreasingShiftedTableau& t1, const IncreasingShiftedTableau& t2,
                             Budget budget) {
  require_urt(t1, budget);
  require_urt(t2, budget);
  return extend_product({t1}, t1.max_entry(), {t2}, t2.max_entry());
}

TableauSet class_product_general(const WordClass& a, const WordClass& b) {
  return extend_product(a.tableaux, alphabet_size(a.representative), b.tableaux,
                        alphabet_size(b.representative));
}

std::vector<WordClass> product_classes(const WordClass& a, const WordClass& b, Budget budget) {
  const TableauSet all = class_product_general(a, b);
  // smallest tableaux first so each class is named by its smallest member
  std::vector<IncreasingShiftedTableau> order(all.begin(), all.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.reading_word() < y.reading_word();
  });
  std::vector<WordClass> out;
  TableauSet assigned;
  for (const auto& t : order) {
    if (assigned.count(t)) continue;
    WordClass c = make_class(t.reading_word(), budget);
    for (const auto& s : c.tableaux) assigned.insert(s);
    out.push_back(std::move(c));
  }
  return out;
}

TruncatedPolynomial phi(const TableauSet& tableaux, int nvars, int maxdeg) {
  TruncatedPolynomial p(nvars, maxdeg);
  std::map<StrictPartition, long long> shapes;
  for (const auto& t : tableaux) ++shapes[t.shape()];
  for (const auto& [shape, k] : shapes) p += K_poly(shape, nvars, maxdeg).scaled(k);
  return p;
}

TruncatedPolynomial phi(const WordClass& c, int nvars, int maxdeg) {
  return phi(c.tableaux, nvars, maxdeg);
}

LRTable lr_coefficients(const StrictPartition& lambda, const StrictPartition& mu, UrtKind kind) {
  const auto target = urt_tableau(kind, mu);
  const int q = target.max_entry();
  std::vector<StrictPartition> shapes;
  for (auto& nu : bounded_outer_shapes(lambda, q))
    if (nu.size() - lambda.size() >= mu.size()) shapes.push_back(std::move(nu));
  std::vector<long long> counts(shapes.size(), 0);
  parallel_for(shapes.size(), [&](std::size_t k) {
    for_each_skew_filling(SkewShape(shapes[k], lambda), 1, q, [&](const std::map<Cell, int>& f) {
      if (insertion_tableau(SkewTableau(f).reading_word()) == target) ++counts[k];
      return true;
    });
  });
  LRTable table;
  for (std::size_t k = 0; k < shapes.size(); ++k)
    if (counts[k] > 0) table[shapes[k]] = counts[k];
  return table;
}

ProductReport verify_product_identity(const StrictPartition& lambda, const StrictPartition& mu,
                                      int nvars, int maxdeg) {
  ProductReport r{false, lr_coefficients(lambda, mu), TruncatedPolynomial(nvars, maxdeg),
                  TruncatedPolynomial(nvars, maxdeg), std::nullopt};
  r.product = K_poly(lambda, nvars, maxdeg) * K_poly(mu, nvars, maxdeg);
  for (const auto& [nu, c] : r.table) r.expansion += K_poly(nu, nvars, maxdeg).scaled(c);
  r.match = r.product == r.expansion;
  if (!r.match) {
    const auto diff = (r.product - r.expansion).terms();
    r.differing = diff.front().first;
  }
  return r;
}

}  // namespace shk
