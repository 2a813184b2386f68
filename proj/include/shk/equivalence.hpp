// SPDX-License-Identifier: Apache-2.0
//
// Weak K-Knuth and K-Knuth rewriting on words. Classes are infinite, so
// everything here is a budgeted semidecision: a certificate proves
// equivalence, a URT mismatch proves inequivalence, anything else is Unknown.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shk/core.hpp"

namespace shk {

enum class RewriteMode { Weak, Plain };

/// Rule ids, with the forward direction written left to right (a < b < c):
///   1: u a a v -> u a v          2: u a b a v -> u b a b v
///   3: u b a c v -> u b c a v    4: u a c b v -> u c a b v
///   5: a b u -> b a u            (weak mode only, first two letters)
struct RewriteStep {
  int rule = 1;
  int pos = 1;  // 1-indexed start of the rewritten window
  bool forward = true;

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

/// Applies a step; throws std::invalid_argument if the window does not match.
Word apply_step(const Word& w, const RewriteStep& s);

/// Every one-step rewrite of w with length at most max_len, in canonical
/// (rule, position, direction) order, duplicates removed.
std::vector<std::pair<RewriteStep, Word>> rewrites(const Word& w, int max_len, RewriteMode mode);
std::vector<Word> neighbors(const Word& w, int max_len, RewriteMode mode);

struct EquivalenceCertificate {
  Word source;
  Word target;
  std::vector<RewriteStep> steps;

  /// Replays the steps from source and checks that target is reached.
  bool replay(RewriteMode mode = RewriteMode::Weak) const;
};

struct Budget {
  int max_len = -1;         // -1: longest input + 3
  long max_states = 1'000'000;
};

struct Inequivalent {
  std::string reason;
};
struct Unknown {
  long states_explored = 0;
};
using EquivalenceResult = std::variant<EquivalenceCertificate, Inequivalent, Unknown>;

/// Bidirectional BFS between u and v. When one side inserts to a minimal or
/// superstandard tableau (a unique rectification target) and the insertion
/// tableaux differ, the words are reported inequivalent without search.
EquivalenceResult equivalent_bounded(const Word& u, const Word& v, Budget budget = {},
                                     RewriteMode mode = RewriteMode::Weak);

/// All words reachable from w within the budget (BFS order).
std::vector<Word> explore_class(const Word& w, Budget budget, RewriteMode mode = RewriteMode::Weak,
                                bool* exhausted = nullptr);

enum class UrtKind { Minimal, Superstandard };

IncreasingShiftedTableau urt_tableau(UrtKind kind, const StrictPartition& shape);
/// The tableau equals the minimal or the superstandard filling of its shape.
bool is_constructed_urt(const IncreasingShiftedTableau& t);

struct VerifiedUpToBound {
  long states_explored = 0;
};
struct Counterexample {
  Word word;
  IncreasingShiftedTableau other;
};
using UrtCheck = std::variant<VerifiedUpToBound, Counterexample>;

/// Searches the class of reading_word(t) for a word inserting elsewhere.
UrtCheck is_urt_bounded(const IncreasingShiftedTableau& t, Budget budget = {});

}  // namespace shk
