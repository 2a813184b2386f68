#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "shk/core.hpp"

using namespace shk;

namespace {

IncreasingShiftedTableau T(std::vector<std::vector<int>> rows) {
  return IncreasingShiftedTableau(std::move(rows));
}

SetValuedTableau::Box box(std::initializer_list<std::pair<int, bool>> es) {
  SetValuedTableau::Box b;
  for (auto [v, p] : es) b.push_back({v, p});
  return b;
}

}  // namespace

TEST(StrictPartition, Validation) {
  EXPECT_NO_THROW(StrictPartition({4, 2, 1}));
  EXPECT_NO_THROW(StrictPartition(std::vector<int>{}));
  EXPECT_THROW(StrictPartition({2, 2}), std::invalid_argument);
  EXPECT_THROW(StrictPartition({3, 0}), std::invalid_argument);
  StrictPartition p({4, 2, 1});
  EXPECT_EQ(p.size(), 7);
  EXPECT_TRUE(p.contains(Cell{2, 3}));
  EXPECT_FALSE(p.contains(Cell{2, 1}));
  EXPECT_FALSE(p.contains(Cell{2, 4}));
  EXPECT_TRUE(p.contains(Cell{3, 3}));
  EXPECT_EQ(p.to_string(), "4,2,1");
}

TEST(SkewShape, MaximalAndMinimal) {
  SkewShape s(StrictPartition({3, 2}), StrictPartition({1}));
  EXPECT_EQ(s.size(), 4);
  EXPECT_TRUE(s.is_minimal({1, 2}));
  EXPECT_FALSE(s.is_minimal({2, 2}));
  EXPECT_FALSE(s.is_minimal({2, 3}));
  EXPECT_TRUE(s.is_maximal({2, 3}));
  EXPECT_FALSE(s.is_maximal({1, 3}));
}

TEST(Entry, TotalOrder) {
  std::vector<Entry> es{{2, false}, {1, false}, {2, true}, {1, true}, {3, true}};
  std::sort(es.begin(), es.end());
  std::vector<Entry> want{{1, true}, {1, false}, {2, true}, {2, false}, {3, true}};
  EXPECT_EQ(es, want);
  for (int k = 1; k < 6; ++k) {
    EXPECT_LT((Entry{k, true}), (Entry{k, false}));
    EXPECT_LT((Entry{k, false}), (Entry{k + 1, true}));
  }
  EXPECT_EQ(to_string(Entry{3, true}), "3'");
}

TEST(ReadingWord, KnownExamples) {
  EXPECT_EQ(T({{1, 2, 4}, {3, 5}, {6}}).reading_word(), (Word{6, 3, 5, 1, 2, 4}));
  EXPECT_EQ(T({{1, 3, 6, 7}, {4, 7}, {8}}).reading_word(), (Word{8, 4, 7, 1, 3, 6, 7}));
  EXPECT_TRUE(T({}).reading_word().empty());
}

TEST(Tableau, RejectsNonIncreasing) {
  EXPECT_THROW(T({{1, 1}}), std::invalid_argument);
  EXPECT_THROW(T({{1, 2}, {2}}), std::invalid_argument);
  EXPECT_THROW(T({{1}, {2}}), std::invalid_argument);  // not a strict shape
}

TEST(Words, Restrict) {
  EXPECT_EQ(restrict_word(Word{4, 5, 1, 1, 3, 2}, 1, 3), (Word{1, 1, 3, 2}));
  const Word w{2, 1, 1, 5, 4, 3, 2};
  EXPECT_EQ(restrict_word(w, 1, 5), w);
  EXPECT_TRUE(is_initial(Word{2, 1, 3}));
  EXPECT_FALSE(is_initial(Word{2, 3}));
  EXPECT_EQ(shift_word(Word{1, 2}, 3), (Word{4, 5}));
}

TEST(Words, ParseAndPrint) {
  EXPECT_EQ(parse_word("451132"), (Word{4, 5, 1, 1, 3, 2}));
  EXPECT_EQ(parse_word("4,5,11,3"), (Word{4, 5, 11, 3}));
  EXPECT_EQ(parse_word(""), Word{});
  EXPECT_THROW(parse_word("4a"), ParseError);
  EXPECT_THROW(parse_word("0"), ParseError);
  EXPECT_EQ(word_to_string(Word{4, 5, 1}), "451");
  EXPECT_EQ(word_to_string(Word{4, 12}), "4,12");
}

TEST(Words, AllWordsCount) {
  EXPECT_EQ(all_words(3, 1, 5).size(), 363u);
  EXPECT_EQ(all_words(4, 1, 6).size(), 5460u);
  EXPECT_EQ(all_words(2, 0, 0).size(), 1u);
}

TEST(Restriction, IntervalGivesSkewFilling) {
  // Tab(2115432) restricted to [3,5]
  auto t = T({{1, 2, 3, 5}, {3, 4}});
  EXPECT_EQ(t.restrict_prefix(3), T({{1, 2, 3}, {3}}));
  auto s = t.restrict_interval(3, 5);
  EXPECT_EQ(s.size(), 4);
  EXPECT_EQ(s.reading_word(), (Word{3, 4, 3, 5}));
  EXPECT_EQ(s.implied_inner(), StrictPartition({2}));
  auto shape = s.skew_shape();
  ASSERT_TRUE(shape.has_value());
  EXPECT_EQ(shape->outer(), StrictPartition({4, 2}));
}

TEST(Enumerate, SmallAlphabets) {
  EXPECT_EQ(enumerate_increasing_shifted_tableaux(0).size(), 1u);
  EXPECT_EQ(enumerate_increasing_shifted_tableaux(1).size(), 2u);
  const auto two = enumerate_increasing_shifted_tableaux(2);
  ASSERT_EQ(two.size(), 4u);
  EXPECT_TRUE(std::find(two.begin(), two.end(), T({{1, 2}})) != two.end());
}

TEST(Enumerate, MatchesBruteForce) {
  std::size_t prev = 0;
  for (int n = 0; n <= 4; ++n) {
    const auto all = enumerate_increasing_shifted_tableaux(n);
    EXPECT_EQ(static_cast<long>(all.size()), oracle::count_increasing_shifted(n)) << n;
    EXPECT_GE(all.size(), prev);
    prev = all.size();
    std::set<IncreasingShiftedTableau> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size());
  }
}

TEST(Enumerate, StrictPartitions) {
  EXPECT_EQ(strict_partitions_of(6).size(), 4u);  // 6, 51, 42, 321
  EXPECT_EQ(strict_partitions_in_box(3).size(), 8u);
}

TEST(SetValued, KnownExamples) {
  // 1 | 2 3' | 6' 6  /  4 | 8' 9
  SetValuedTableau a({{box({{1, false}}), box({{2, false}, {3, true}}), box({{6, true}, {6, false}})},
                      {box({{4, false}}), box({{8, true}, {9, false}})}});
  EXPECT_TRUE(a.is_set_valued());
  EXPECT_FALSE(a.is_standard());
  // 1 | 2 | 3'4' | 6'  /  5
  SetValuedTableau b({{box({{1, false}}), box({{2, false}}), box({{3, true}, {4, true}}),
                       box({{6, true}})},
                      {box({{5, false}})}});
  EXPECT_TRUE(b.is_standard());
  ASSERT_TRUE(b.find_label(4).has_value());
  EXPECT_EQ(b.find_label(4)->first, (Cell{1, 3}));
  EXPECT_TRUE(b.find_label(4)->second);
}

TEST(SetValued, WeakAllowsRepeatsInsideABox) {
  // W1 = 1122 | 3'3 | 445'  /  444
  SetValuedTableau w1(
      {{box({{1, false}, {1, false}, {2, false}, {2, false}}), box({{3, true}, {3, false}}),
        box({{4, false}, {4, false}, {5, true}})},
       {box({{4, false}, {4, false}, {4, false}})}});
  EXPECT_TRUE(w1.is_weak_set_valued());
  EXPECT_FALSE(w1.is_set_valued());
  // a primed diagonal entry breaks both
  SetValuedTableau bad({{box({{1, true}})}});
  EXPECT_FALSE(bad.is_weak_set_valued());
  // an unprimed value twice in one column
  SetValuedTableau col({{box({{1, false}}), box({{2, false}})}, {box({{2, false}, {3, false}})}});
  EXPECT_FALSE(col.is_set_valued());
}

TEST(SetValued, StandardEnumerationMatchesBruteForce) {
  for (const auto& parts : std::vector<std::vector<int>>{{1}, {2}, {2, 1}, {3}, {3, 1}}) {
    for (int n = 0; n <= 5; ++n) {
      const auto got = enumerate_standard_set_valued(StrictPartition(parts), n);
      EXPECT_EQ(static_cast<long>(got.size()), oracle::count_standard_set_valued(parts, n))
          << StrictPartition(parts).to_string() << " n=" << n;
      for (const auto& q : got) EXPECT_TRUE(q.is_standard());
    }
  }
}
