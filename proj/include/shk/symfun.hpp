// SPDX-License-Identifier: Apache-2.0
//
// Truncated polynomials with exact integer coefficients, and the tableau
// generating functions built on them.

#pragma once

#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shk/core.hpp"

namespace shk {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::vector<int>;

/// Polynomial in x_1..x_nvars keeping only monomials of total degree <= maxdeg.
class TruncatedPolynomial {
 public:
  TruncatedPolynomial(int nvars, int maxdeg);

  static TruncatedPolynomial constant(int nvars, int maxdeg, Integer c);
  /// x_i, 1-indexed.
  static TruncatedPolynomial variable(int nvars, int maxdeg, int i);

  int nvars() const { return nvars_; }
  int maxdeg() const { return maxdeg_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  /// Adds c * x^exp; ignored past maxdeg. Throws on a malformed exponent.
  void add_term(const Exponent& exp, const Integer& c);
  Integer coefficient(const Exponent& exp) const;
  /// Terms in graded-lex order: lower degree first, then lexicographically
  /// larger exponents first (x1^2 before x1x2 before x2^2).
  std::vector<std::pair<Exponent, Integer>> terms() const;

  TruncatedPolynomial homogeneous_component(int degree) const;
  /// Smallest degree with a nonzero term, or -1 for the zero polynomial.
  int min_degree() const;

  TruncatedPolynomial operator-() const;
  TruncatedPolynomial& operator+=(const TruncatedPolynomial& o);
  TruncatedPolynomial& operator-=(const TruncatedPolynomial& o);
  friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a += b; }
  friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a -= b; }
  friend TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
  TruncatedPolynomial scaled(const Integer& c) const;

  friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;

 private:
  void check_compatible(const TruncatedPolynomial& o) const;

  int nvars_;
  int maxdeg_;
  std::map<Exponent, Integer> terms_;
};

std::string to_string(const TruncatedPolynomial& p);

/// Exponent of the monomial x_{i1} x_{i2} ... (1-indexed variables).
Exponent monomial(int nvars, std::initializer_list<int> vars);

/// Fundamental quasisymmetric function of a word length n and descent set.
TruncatedPolynomial fqs(int n, const std::set<int>& descents, int nvars, int maxdeg);

/// Sum over weak set-valued shifted tableaux of the shape.
TruncatedPolynomial K_poly(const StrictPartition& shape, int nvars, int maxdeg);
/// Signed sum over set-valued shifted tableaux.
TruncatedPolynomial GP_poly(const StrictPartition& shape, int nvars, int maxdeg);
/// Sum over set-valued tableaux of the ordinary (unshifted) shape.
TruncatedPolynomial G_poly(const std::vector<int>& shape, int nvars, int maxdeg);

/// Sum of f_{D(w)} over words w of length <= maxdeg with Tab(w) = t.
/// Throws std::invalid_argument unless t is a minimal or superstandard tableau.
TruncatedPolynomial K_poly_via_words(const IncreasingShiftedTableau& t, int nvars, int maxdeg);

/// Every word of length <= max_len over the entries of t that inserts to t.
std::vector<Word> words_inserting_to(const IncreasingShiftedTableau& t, int max_len);

/// x_i -> -(x_i + x_i^2 + ...) up to maxdeg.
TruncatedPolynomial geometric_substitute(const TruncatedPolynomial& p);

/// Invariant under every swap of adjacent variables.
bool is_symmetric(const TruncatedPolynomial& p);

/// Renumbers entries 1..n: k' occurrences top to bottom, then k occurrences
/// left to right, for k = 1, 2, ...
SetValuedTableau standardize(const SetValuedTableau& w);

/// Replaces the i-th smallest label by s[i-1], keeping primes. Throws
/// std::invalid_argument when s does not agree with the descent set of t.
SetValuedTableau relabel(const SetValuedTableau& t, const std::vector<int>& s);
bool agrees_with(const std::vector<int>& s, const std::set<int>& descents);

struct GDecomposition {
  std::set<UnshiftedTableau> tableaux;  // distinct classical insertion tableaux found
  TruncatedPolynomial g_sum;
  bool matches_k = false;
};

/// Collects P_K(w) over words with Tab(w) = t and length <= max_word_len,
/// sums G over their shapes and compares with K of the shape of t.
GDecomposition g_decomposition(const IncreasingShiftedTableau& t, int nvars, int maxdeg,
                               int max_word_len);

}  // namespace shk
