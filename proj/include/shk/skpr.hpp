// SPDX-License-Identifier: Apache-2.0
//
// Products of weak K-Knuth classes, the map to quasisymmetric functions, and
// Littlewood-Richardson coefficients for the weak shifted Grothendieck basis.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "shk/core.hpp"
#include "shk/equivalence.hpp"
#include "shk/symfun.hpp"

namespace shk {

using TableauSet = std::set<IncreasingShiftedTableau>;

/// Every interleaving of u and v, with multiplicity.
std::vector<Word> shuffle(const Word& u, const Word& v);

/// A weak K-Knuth class, explored within a budget.
struct WordClass {
  Word representative;     // initial word
  TableauSet tableaux;     // Tab(w) over the explored members
  bool exhausted = false;  // exploration finished inside the length bound
  bool verified_urt = false;
};

/// Throws std::invalid_argument unless h is initial.
WordClass make_class(const Word& h, Budget budget = {});

/// Tableaux T with T|[n] in `left` and Tab(row(T)|[n+1,n+m]) in `right`
/// shifted by n, where n and m are the alphabet sizes of the two sides.
TableauSet extend_product(const TableauSet& left, int n, const TableauSet& right, int m);

/// Product for two unique rectification targets. Throws
/// std::invalid_argument when either input fails the URT check.
TableauSet class_product_urt(const IncreasingShiftedTableau& t1, const IncreasingShiftedTableau& t2,
                             Budget budget = {});
/// Product of two explored classes.
TableauSet class_product_general(const WordClass& a, const WordClass& b);

/// Splits the product into classes; each representative is the reading word
/// of the smallest tableau in its class.
std::vector<WordClass> product_classes(const WordClass& a, const WordClass& b, Budget budget = {});

/// Sum of K_poly over the shapes of the tableaux.
TruncatedPolynomial phi(const TableauSet& tableaux, int nvars, int maxdeg);
TruncatedPolynomial phi(const WordClass& c, int nvars, int maxdeg);

using LRTable = std::map<StrictPartition, long long>;

/// Counts skew fillings R of nu/lambda with Tab(row(R)) equal to the chosen
/// URT of shape mu.
LRTable lr_coefficients(const StrictPartition& lambda, const StrictPartition& mu,
                        UrtKind kind = UrtKind::Minimal);

struct ProductReport {
  bool match = false;
  LRTable table;
  TruncatedPolynomial product;  // K_lambda * K_mu
  TruncatedPolynomial expansion;  // sum of c * K_nu
  std::optional<Exponent> differing;
};

ProductReport verify_product_identity(const StrictPartition& lambda, const StrictPartition& mu,
                                      int nvars, int maxdeg);

}  // namespace shk
