// SPDX-License-Identifier: Apache-2.0

#include "shk/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "shk/equivalence.hpp"
#include "shk/insertion.hpp"
#include "shk/kjdt.hpp"
#include "shk/skpr.hpp"
#include "shk/symfun.hpp"

namespace shk {

namespace {

// Records the first failed expectation.
class Check {
 public:
  bool operator()(bool ok, const std::string& what) {
    if (!ok && first_.empty()) first_ = what;
    return ok;
  }
  bool passed() const { return first_.empty(); }
  const std::string& failure() const { return first_; }

 private:
  std::string first_;
};

using Body = std::function<std::string(Check&)>;

IncreasingShiftedTableau T(std::vector<std::vector<int>> rows) {
  return IncreasingShiftedTableau(std::move(rows));
}

SetValuedTableau::Box box(std::initializer_list<Entry> e) { return SetValuedTableau::Box(e); }

StrictPartition sp(std::vector<int> parts) { return StrictPartition(std::move(parts)); }

const std::vector<StrictPartition>& small_shapes() {
  static const std::vector<StrictPartition> s{sp({1}), sp({2}), sp({2, 1}), sp({3, 1})};
  return s;
}

std::string insertion_fidelity(Check& check) {
  const Word w{2, 1, 1, 5, 4, 3, 2};
  const std::vector<IncreasingShiftedTableau> want{
      T({}),          T({{2}}),             T({{1, 2}}),             T({{1, 2}}),
      T({{1, 2, 5}}), T({{1, 2, 4}, {5}}), T({{1, 2, 3}, {4, 5}}), T({{1, 2, 3, 5}, {3, 4}})};
  check(insertion_sequence(w) == want, "tableau sequence of 2115432");
  check(insertion_tableau(w) == T({{1, 2, 3, 5}, {3, 4}}), "Tab(2115432)");
  const auto r = insert_word(Word{4, 5, 1, 1, 3, 2});
  const SetValuedTableau q({{box({{1, false}}), box({{2, false}}), box({{3, true}, {4, true}}), box({{6, true}})},
                            {box({{5, false}})}});
  check(r.insertion == T({{1, 2, 4, 5}, {3}}), "P(451132)");
  check(r.recording == q, "Q(451132)");
  return "Tab(2115432) sequence and (P,Q) of 451132 match";
}

std::string bijection(Check& check) {
  std::map<std::pair<IncreasingShiftedTableau, SetValuedTableau>, Word> seen;
  int n = 0;
  for (const auto& w : all_words(3, 1, 5)) {
    ++n;
    const auto r = insert_word(w);
    auto [it, fresh] = seen.emplace(std::make_pair(r.insertion, r.recording), w);
    if (!check(fresh, "words " + word_to_string(w) + " and " + word_to_string(it->second) + " share (P,Q)"))
      break;
    if (!check(reverse_insert(r.insertion, r.recording) == w, "reverse insertion of " + word_to_string(w)))
      break;
  }
  return std::to_string(n) + " words, injective and inverted";
}

std::string descents(Check& check) {
  int n = 0;
  for (const auto& w : all_words(4, 1, 6)) {
    ++n;
    if (!check(descent_set(w) == descent_set_recording(insert_word(w).recording),
               "D(w) != D(Q(w)) for " + word_to_string(w)))
      break;
  }
  return std::to_string(n) + " words";
}

std::string rectification(Check& check) {
  int n = 0;
  for (const auto& [alphabet, len] : {std::pair{3, 5}, std::pair{4, 4}})
    for (const auto& w : all_words(alphabet, 0, len)) {
      ++n;
      if (!check(rectify_superstandard(antidiagonal_tableau(w)) == insertion_tableau(w),
                 "rectification differs from insertion for " + word_to_string(w)))
        return "";
    }
  const SkewTableau ex({{{1, 5}, 1}, {{2, 4}, 2}, {{2, 5}, 3}, {{3, 3}, 1}, {{3, 4}, 4}});
  check(rectify_superstandard(ex) == T({{1, 2, 3}, {4}}), "worked rectification example");
  Board fig;
  const std::vector<std::pair<int, std::vector<int>>> rows{
      {1, {-1, -2, -3, -4, -5, -6, 5}}, {2, {1, 2, 3, 4, 6}}, {3, {4, 5, 6, 8}}, {4, {6, 7}}};
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < rows[r].second.size(); ++k) {
      const int x = rows[r].second[k];
      const Cell c{static_cast<int>(r) + 1, rows[r].first + static_cast<int>(k)};
      if (x < 0)
        fig.emplace(c, Marker{-x});
      else
        fig.emplace(c, Value{x});
    }
  const auto inserted = insert_one(T({{1, 2, 3, 4, 6}, {4, 5, 6, 8}, {6, 7}}), 5).tableau;
  check(rectify_marked(fig, standard_switch_sequence(6, 8)) == inserted, "jdt versus insertion on the 6x8 board");
  return std::to_string(n) + " words plus two worked boards";
}

std::string viable(Check& check) {
  std::map<std::pair<int, int>, std::vector<SwitchSequence>> cache;
  int boards = 0;
  long runs = 0;
  for (const auto& inner : {sp({1}), sp({2}), sp({2, 1}), sp({3})})
    for (const auto& outer : strict_partitions_in_box(4)) {
      if (!outer.contains(inner) || outer == inner || outer.size() - inner.size() > 4) continue;
      for_each_skew_filling(SkewShape(outer, inner), 1, 4, [&](const std::map<Cell, int>& cells) {
        const Board b = mark_superstandard(SkewTableau(cells), inner);
        int q = 0;
        for (const auto& [c, v] : cells) q = std::max(q, v);
        const int p = inner.size();
        auto& seqs = cache[{p, q}];
        if (seqs.empty()) seqs = enumerate_viable_sequences(p, q);
        const auto want = rectify_marked(b, standard_switch_sequence(p, q));
        ++boards;
        for (const auto& s : seqs) {
          ++runs;
          if (!check(rectify_marked(b, s) == want, "viable sequences disagree")) return false;
        }
        // switches with distinct markers and distinct values commute
        for (int i = 1; i <= p; ++i)
          for (int j = i + 1; j <= p; ++j)
            for (int r = 1; r <= q; ++r)
              for (int s = 1; s <= q; ++s)
                if (r != s &&
                    !check(kswitch(kswitch(b, Marker{i}, Value{r}), Marker{j}, Value{s}) ==
                               kswitch(kswitch(b, Marker{j}, Value{s}), Marker{i}, Value{r}),
                           "switches fail to commute"))
                  return false;
        return true;
      });
    }
  return std::to_string(boards) + " boards, " + std::to_string(runs) + " sequence runs";
}

std::string k21(Check& check) {
  const auto lam = sp({2, 1});
  const auto direct = K_poly(lam, 3, 4);
  const auto words = K_poly_via_words(urt_tableau(UrtKind::Minimal, lam), 3, 4);
  const std::vector<std::pair<Exponent, int>> want{{monomial(3, {1, 1, 2}), 1},
                                                   {monomial(3, {1, 2, 3}), 2},
                                                   {monomial(3, {1, 1, 2, 2}), 3},
                                                   {monomial(3, {1, 1, 2, 3}), 5},
                                                   {monomial(3, {1, 2, 2, 3}), 5}};
  for (const auto& [e, c] : want) {
    check(direct.coefficient(e) == c, "K_poly coefficient");
    check(words.coefficient(e) == c, "word expansion coefficient");
  }
  check(direct == words, "tableau and word expansions differ");
  return "coefficients 1, 2, 3, 5, 5 from both expansions";
}

std::string symmetry(Check& check) {
  for (const auto& lam : small_shapes()) {
    check(is_symmetric(K_poly(lam, 3, 6)), "K_" + lam.to_string() + " not symmetric");
    check(is_symmetric(GP_poly(lam, 3, 6)), "GP_" + lam.to_string() + " not symmetric");
  }
  return "K and GP symmetric for 4 shapes";
}

std::string substitution(Check& check) {
  for (const auto& lam : small_shapes()) {
    const auto sub = geometric_substitute(GP_poly(lam, 3, 5));
    check((lam.size() % 2 ? -sub : sub) == K_poly(lam, 3, 5), "substitution fails for " + lam.to_string());
  }
  return "signed substitution of GP equals K for 4 shapes";
}

std::string witness(Check& check) {
  const auto k1 = K_poly(sp({1}), 2, 2).homogeneous_component(2);
  const auto p2 = K_poly(sp({2}), 2, 2).homogeneous_component(2);
  const auto sq = monomial(2, {1, 1}), mixed = monomial(2, {1, 2});
  // proportional iff the 2x2 cross products agree
  check(k1.coefficient(sq) * p2.coefficient(mixed) != k1.coefficient(mixed) * p2.coefficient(sq),
        "degree two part of K_(1) is proportional to P_(2)");
  std::ostringstream os;
  os << "x1^2: " << k1.coefficient(sq) << " vs " << p2.coefficient(sq) << "; x1*x2: "
     << k1.coefficient(mixed) << " vs " << p2.coefficient(mixed);
  return os.str();
}

std::string non_urt(Check& check) {
  const Word u{1, 2, 4, 5, 3}, v{1, 2, 4, 5, 3, 3};
  const auto r = equivalent_bounded(u, v);
  const auto* cert = std::get_if<EquivalenceCertificate>(&r);
  check(cert && cert->replay(), "no replayable certificate for 12453 ~ 124533");
  check(insertion_tableau(u) != insertion_tableau(v), "tableaux agree");
  const auto urt = is_urt_bounded(insertion_tableau(u));
  const auto* ce = std::get_if<Counterexample>(&urt);
  check(ce && ce->word == v && ce->other == insertion_tableau(v), "URT check did not return 124533");
  return "certificate of " + std::to_string(cert ? cert->steps.size() : 0) + " steps; counterexample 124533";
}

std::string product_classes_suite(Check& check) {
  const TableauSet want{T({{1, 2, 3, 4}}),      T({{1, 2, 3}, {4}}),    T({{1, 2, 4}, {3}}),
                        T({{1, 2, 3, 4}, {3}}), T({{1, 2, 3, 4}, {4}}), T({{1, 2, 3}, {3, 4}}),
                        T({{1, 2, 3, 4}, {3, 4}})};
  check(class_product_urt(T({{1, 2}}), T({{1, 2}})) == want, "T(12 x 12) is not the seven tableaux");
  std::set<Word> reps;
  for (const auto& c : product_classes(make_class({1, 2}), make_class({1}))) reps.insert(c.representative);
  check(reps == std::set<Word>{{1, 2, 3}, {3, 1, 2}, {3, 1, 2, 3}}, "representatives of [[12]].[[1]]");
  return "seven tableaux; classes 123, 312, 3123";
}

std::string lr(Check& check) {
  std::string out;
  for (const auto& [l, m] : std::vector<std::pair<StrictPartition, StrictPartition>>{
           {sp({1}), sp({1})}, {sp({1}), sp({2})}, {sp({2, 1}), sp({1})}, {sp({2}), sp({2, 1})}}) {
    const auto r = verify_product_identity(l, m, 3, 6);
    check(r.match, "product identity fails for (" + l.to_string() + ")x(" + m.to_string() + ")");
    check(lr_coefficients(l, m, UrtKind::Minimal) == lr_coefficients(l, m, UrtKind::Superstandard),
          "table depends on the URT for (" + l.to_string() + ")x(" + m.to_string() + ")");
    out += (out.empty() ? "" : ", ") + std::to_string(r.table.size()) + " terms";
  }
  return out;
}

std::string homomorphism(Check& check) {
  const std::vector<Word> hs{{1}, {1, 2}, {1, 2, 1}};
  int pairs = 0;
  for (const auto& h1 : hs)
    for (const auto& h2 : hs) {
      const auto a = make_class(h1), b = make_class(h2);
      TruncatedPolynomial rhs(3, 5);
      for (const auto& c : product_classes(a, b)) rhs += phi(c, 3, 5);
      check(phi(a, 3, 5) * phi(b, 3, 5) == rhs,
            "phi not multiplicative on " + word_to_string(h1) + ", " + word_to_string(h2));
      ++pairs;
    }
  return std::to_string(pairs) + " pairs";
}

struct Registered {
  SuiteInfo info;
  Body body;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> r{
      {{"insertion", "insertion sequence of 2115432 and (P,Q) of 451132"}, insertion_fidelity},
      {{"bijection", "insertion is a bijection on words over [3] of length <= 5"}, bijection},
      {{"descents", "D(w) = D(Q(w)) over [4], length <= 6"}, descents},
      {{"rectification", "superstandard rectification agrees with insertion"}, rectification},
      {{"viable", "all viable switch orders agree; switches commute"}, viable},
      {{"k21", "coefficients of K_(2,1)"}, k21},
      {{"symmetry", "K and GP are symmetric"}, symmetry},
      {{"substitution", "GP under x -> -x/(1-x) gives K"}, substitution},
      {{"witness", "K_(1) degree two part is not proportional to P_(2)"}, witness},
      {{"non-urt", "12453 is equivalent to 124533 with a different tableau"}, non_urt},
      {{"product-classes", "class products for 12 x 12 and [[12]].[[1]]"}, product_classes_suite},
      {{"lr", "Littlewood-Richardson tables against polynomial products"}, lr},
      {{"homomorphism", "phi is multiplicative on small classes"}, homomorphism},
  };
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& verification_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

SuiteResult run_suite(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    SuiteResult r{name, false, "", 0};
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      const std::string summary = e.body(check);
      r.passed = check.passed();
      r.detail = r.passed ? summary : check.failure();
    } catch (const std::exception& ex) {
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace shk
