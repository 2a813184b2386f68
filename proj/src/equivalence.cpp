// SPDX-License-Identifier: Apache-2.0

#include "shk/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "shk/insertion.hpp"

namespace shk {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int a : w) {
      h ^= static_cast<std::size_t>(a);
      h *= 1099511628211ull;
    }
    return h;
  }
};

int window_len(int rule, bool forward) {
  switch (rule) {
    case 1: return forward ? 2 : 1;
    case 5: return 2;
    default: return 3;
  }
}

// Does the window starting at index i match the left side (forward) or the
// right side (backward) of the rule?
bool matches(const Word& w, std::size_t i, int rule, bool forward) {
  const std::size_t n = static_cast<std::size_t>(window_len(rule, forward));
  if (i + n > w.size()) return false;
  const int x = w[i];
  const int y = n > 1 ? w[i + 1] : 0;
  const int z = n > 2 ? w[i + 2] : 0;
  switch (rule) {
    case 1: return forward ? x == y : true;
    case 2: return x == z && (forward ? x < y : x > y);
    case 3: return forward ? (y < x && x < z) : (z < x && x < y);
    case 4: return forward ? (x < z && z < y) : (y < z && z < x);
    case 5: return i == 0 && (forward ? x < y : x > y);
  }
  return false;
}

Word rewrite_at(const Word& w, std::size_t i, int rule, bool forward) {
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  const int x = w[i];
  std::size_t skip = static_cast<std::size_t>(window_len(rule, forward));
  switch (rule) {
    case 1:
      out.push_back(x);
      if (!forward) out.push_back(x);
      break;
    case 2:
      out.insert(out.end(), {w[i + 1], x, w[i + 1]});
      break;
    case 3:
      out.insert(out.end(), {x, w[i + 2], w[i + 1]});
      break;
    case 4:
      out.insert(out.end(), {w[i + 1], x, w[i + 2]});
      break;
    case 5:
      out.insert(out.end(), {w[i + 1], x});
      break;
  }
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i + skip), w.end());
  return out;
}

RewriteStep inverse(RewriteStep s) {
  s.forward = !s.forward;
  return s;
}

int effective_max_len(const Budget& b, std::size_t longest) {
  return b.max_len >= 0 ? b.max_len : static_cast<int>(longest) + 3;
}

}  // namespace

Word apply_step(const Word& w, const RewriteStep& s) {
  if (s.rule < 1 || s.rule > 5 || s.pos < 1)
    throw std::invalid_argument("malformed rewrite step");
  const std::size_t i = static_cast<std::size_t>(s.pos - 1);
  if (!matches(w, i, s.rule, s.forward))
    throw std::invalid_argument("rewrite step does not match word " + word_to_string(w));
  return rewrite_at(w, i, s.rule, s.forward);
}

std::vector<std::pair<RewriteStep, Word>> rewrites(const Word& w, int max_len, RewriteMode mode) {
  std::vector<std::pair<RewriteStep, Word>> out;
  const int last_rule = mode == RewriteMode::Weak ? 5 : 4;
  for (int rule = 1; rule <= last_rule; ++rule) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (bool fwd : {true, false}) {
        if (!matches(w, i, rule, fwd)) continue;
        Word next = rewrite_at(w, i, rule, fwd);
        if (static_cast<int>(next.size()) > max_len || next == w) continue;
        const bool seen = std::any_of(out.begin(), out.end(),
                                      [&](const auto& p) { return p.second == next; });
        if (!seen) out.emplace_back(RewriteStep{rule, static_cast<int>(i) + 1, fwd}, std::move(next));
      }
    }
  }
  return out;
}

std::vector<Word> neighbors(const Word& w, int max_len, RewriteMode mode) {
  std::vector<Word> out;
  for (auto& [s, v] : rewrites(w, max_len, mode)) out.push_back(std::move(v));
  return out;
}

bool EquivalenceCertificate::replay(RewriteMode mode) const {
  Word cur = source;
  try {
    for (const auto& s : steps) {
      if (mode == RewriteMode::Plain && s.rule == 5) return false;
      cur = apply_step(cur, s);
    }
  } catch (const std::invalid_argument&) {
    return false;
  }
  return cur == target;
}

EquivalenceResult equivalent_bounded(const Word& u, const Word& v, Budget budget,
                                     RewriteMode mode) {
  validate_word(u);
  validate_word(v);
  if (u == v) return EquivalenceCertificate{u, v, {}};

  if (mode == RewriteMode::Weak) {
    const auto tu = insertion_tableau(u);
    const auto tv = insertion_tableau(v);
    if (tu != tv && (is_constructed_urt(tu) || is_constructed_urt(tv)))
      return Inequivalent{"insertion tableaux differ and one of them is a unique rectification target"};
  }

  const int max_len = effective_max_len(budget, std::max(u.size(), v.size()));
  struct Link {
    Word parent;
    RewriteStep step;  // parent -> this word
  };
  std::unordered_map<Word, Link, WordHash> seen[2];
  std::deque<Word> frontier[2];
  seen[0].emplace(u, Link{});
  seen[1].emplace(v, Link{});
  frontier[0].push_back(u);
  frontier[1].push_back(v);
  long states = 2;

  auto build = [&](const Word& meet) {
    EquivalenceCertificate cert{u, v, {}};
    for (Word cur = meet; cur != u;) {
      const Link& l = seen[0].at(cur);
      cert.steps.push_back(l.step);
      cur = l.parent;
    }
    std::reverse(cert.steps.begin(), cert.steps.end());
    for (Word cur = meet; cur != v;) {
      const Link& l = seen[1].at(cur);
      cert.steps.push_back(inverse(l.step));
      cur = l.parent;
    }
    return cert;
  };

  while (!frontier[0].empty() || !frontier[1].empty()) {
    // expand the smaller nonempty side one full layer
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[side].empty()) side = 1 - side;
    std::deque<Word> next;
    for (const Word& w : frontier[side]) {
      for (auto& [step, nb] : rewrites(w, max_len, mode)) {
        if (seen[side].count(nb)) continue;
        seen[side].emplace(nb, Link{w, step});
        if (seen[1 - side].count(nb)) return build(nb);
        if (++states > budget.max_states) return Unknown{states};
        next.push_back(std::move(nb));
      }
    }
    frontier[side] = std::move(next);
  }
  return Unknown{states};
}

std::vector<Word> explore_class(const Word& w, Budget budget, RewriteMode mode, bool* exhausted) {
  validate_word(w);
  const int max_len = effective_max_len(budget, w.size());
  std::unordered_map<Word, bool, WordHash> seen{{w, true}};
  std::vector<Word> order{w};
  bool complete = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Word cur = order[head];
    for (auto& nb : neighbors(cur, max_len, mode)) {
      if (seen.count(nb)) continue;
      if (static_cast<long>(order.size()) >= budget.max_states) {
        complete = false;
        break;
      }
      seen.emplace(nb, true);
      order.push_back(std::move(nb));
    }
    if (!complete) break;
  }
  if (exhausted) *exhausted = complete;
  return order;
}

IncreasingShiftedTableau urt_tableau(UrtKind kind, const StrictPartition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int i = 1; i <= shape.rows(); ++i) {
    rows.emplace_back();
    for (int j = i; j < i + shape.part(i); ++j) {
      if (kind == UrtKind::Superstandard) {
        rows.back().push_back(next++);
        continue;
      }
      int v = 1;
      if (j > i) v = std::max(v, rows[i - 1][j - i - 1] + 1);
      if (i > 1) v = std::max(v, rows[i - 2][j - i + 1] + 1);
      rows.back().push_back(v);
    }
  }
  return IncreasingShiftedTableau(std::move(rows));
}

bool is_constructed_urt(const IncreasingShiftedTableau& t) {
  const auto shape = t.shape();
  return t == urt_tableau(UrtKind::Minimal, shape) ||
         t == urt_tableau(UrtKind::Superstandard, shape);
}

UrtCheck is_urt_bounded(const IncreasingShiftedTableau& t, Budget budget) {
  const Word start = t.reading_word();
  const int max_len = effective_max_len(budget, start.size());
  std::unordered_map<Word, bool, WordHash> seen{{start, true}};
  std::deque<Word> queue{start};
  long states = 1;
  while (!queue.empty()) {
    const Word cur = std::move(queue.front());
    queue.pop_front();
    for (auto& nb : neighbors(cur, max_len, RewriteMode::Weak)) {
      if (seen.count(nb)) continue;
      auto other = insertion_tableau(nb);
      if (other != t) return Counterexample{nb, std::move(other)};
      if (++states > budget.max_states) return VerifiedUpToBound{states};
      seen.emplace(nb, true);
      queue.push_back(std::move(nb));
    }
  }
  return VerifiedUpToBound{states};
}

}  // namespace shk
