#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracle.hpp"
#include "shk/insertion.hpp"

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

SetValuedTableau example_recording() {
  return SetValuedTableau({{box({{1, false}}), box({{2, false}}), box({{3, true}, {4, true}}),
                            box({{6, true}})},
                           {box({{5, false}})}});
}

}  // namespace

TEST(InsertOne, AppendAtEndOfRow) {
  auto out = insert_one(T({{1, 2, 4}, {3, 5}, {6}}), 5);
  EXPECT_EQ(out.tableau, T({{1, 2, 4, 5}, {3, 5}, {6}}));
  EXPECT_EQ(out.terminal_cell, (Cell{1, 4}));
  EXPECT_TRUE(out.added_box);
}

TEST(InsertOne, BumpWithoutChange) {
  auto out = insert_one(T({{1, 3, 5}, {4, 6}}), 3);
  EXPECT_EQ(out.tableau, T({{1, 3, 5}, {4, 6}}));
  EXPECT_EQ(out.terminal_cell, (Cell{2, 3}));
  EXPECT_FALSE(out.added_box);
}

TEST(InsertOne, FailedAppendInNonemptyRow) {
  auto out = insert_one(T({{1, 2, 3, 4, 6}, {4, 5, 6, 8}, {6, 7}}), 5);
  EXPECT_EQ(out.tableau, T({{1, 2, 3, 4, 5}, {4, 5, 6, 8}, {6, 7}}));
  EXPECT_EQ(out.terminal_cell, (Cell{3, 4}));
  EXPECT_FALSE(out.column_mode_at_end);
}

TEST(InsertWord, SequenceFor2115432) {
  const Word w{2, 1, 1, 5, 4, 3, 2};
  const auto seq = insertion_sequence(w);
  const std::vector<IncreasingShiftedTableau> want{
      T({}),           T({{2}}),          T({{1, 2}}),           T({{1, 2}}),
      T({{1, 2, 5}}),  T({{1, 2, 4}, {5}}), T({{1, 2, 3}, {4, 5}}), T({{1, 2, 3, 5}, {3, 4}})};
  EXPECT_EQ(seq, want);
  EXPECT_EQ(insertion_tableau(w), T({{1, 2, 3, 5}, {3, 4}}));
}

TEST(InsertWord, Example451132) {
  const Word w{4, 5, 1, 1, 3, 2};
  const auto res = insert_word(w);
  EXPECT_EQ(res.insertion, T({{1, 2, 4, 5}, {3}}));
  EXPECT_EQ(res.recording, example_recording());
  EXPECT_EQ(reverse_insert(res.insertion, res.recording), w);
}

TEST(InsertWord, Empty) {
  const auto res = insert_word(Word{});
  EXPECT_TRUE(res.insertion.empty());
  EXPECT_EQ(res.recording.num_entries(), 0);
  EXPECT_EQ(reverse_insert(res.insertion, res.recording), Word{});
}

TEST(InsertWord, RejectsNonPositiveLetters) {
  EXPECT_THROW(insert_word(Word{1, 0}), std::invalid_argument);
}

TEST(ReverseInsert, RejectsBadPairs) {
  EXPECT_THROW(reverse_insert(T({{1, 2}}), example_recording()), std::invalid_argument);
  SetValuedTableau not_standard({{box({{1, false}}), box({{3, false}})}});
  EXPECT_THROW(reverse_insert(T({{1, 2}}), not_standard), std::invalid_argument);
}

// Insertion is injective on words over [3] of length <= 5, reverse insertion
// inverts it, and the image fills every (P, Q) pair of matching shape.
TEST(Bijection, ExhaustiveSmallWords) {
  std::map<StrictPartition, int> tableaux_by_shape;
  for (const auto& t : enumerate_increasing_shifted_tableaux(3)) ++tableaux_by_shape[t.shape()];
  for (int len = 0; len <= 5; ++len) {
    std::set<std::pair<IncreasingShiftedTableau, SetValuedTableau>> seen;
    for (const auto& w : all_words(3, len, len)) {
      auto res = insert_word(w);
      EXPECT_EQ(res.insertion.shape(), res.recording.shape());
      EXPECT_TRUE(res.recording.is_standard());
      EXPECT_EQ(reverse_insert(res.insertion, res.recording), w);
      EXPECT_TRUE(seen.emplace(res.insertion, res.recording).second) << word_to_string(w);
    }
    long pairs = 0;
    for (const auto& [shape, count] : tableaux_by_shape)
      pairs += count * oracle::count_standard_set_valued(shape.parts(), len);
    EXPECT_EQ(static_cast<long>(seen.size()), pairs) << "len=" << len;
  }
}

TEST(Insertion, RestrictionAndSupport) {
  for (const auto& w : all_words(3, 0, 6)) {
    const auto t = insertion_tableau(w);
    std::set<int> letters(w.begin(), w.end());
    EXPECT_EQ(t.entry_set(), letters);
    for (int k = 0; k <= 3; ++k)
      EXPECT_EQ(t.restrict_prefix(k), insertion_tableau(restrict_word(w, 1, k)));
  }
}

TEST(Descents, Examples) {
  EXPECT_EQ(descent_set(Word{3, 5, 4, 2, 1, 1}), (std::set<int>{2, 3, 4}));
  EXPECT_TRUE(descent_set(Word{1, 1, 2, 3}).empty());
  EXPECT_EQ(descent_set(Word{4, 3, 2, 1}), (std::set<int>{1, 2, 3}));
  // Q(354211) = 1 | 2 | 4' | 5'6'  /  3
  const auto q = insert_word(Word{3, 5, 4, 2, 1, 1}).recording;
  SetValuedTableau want({{box({{1, false}}), box({{2, false}}), box({{4, true}}),
                          box({{5, true}, {6, true}})},
                         {box({{3, false}})}});
  EXPECT_EQ(q, want);
  EXPECT_EQ(descent_set_recording(q), (std::set<int>{2, 3, 4}));
  EXPECT_TRUE(descent_set_recording(SetValuedTableau({{box({{1, false}})}})).empty());
}

TEST(Descents, RecordingPreservesDescents) {
  for (const auto& w : all_words(4, 1, 6))
    ASSERT_EQ(descent_set(w), descent_set_recording(insert_word(w).recording)) << word_to_string(w);
}

TEST(ClassicHecke, SmallWords) {
  EXPECT_EQ(hecke_insert_classic(Word{1}).rows(), (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(hecke_insert_classic(Word{1, 2, 1}).rows(), (std::vector<std::vector<int>>{{1, 2}, {2}}));
  EXPECT_EQ(hecke_insert_classic(Word{2, 1, 2}).rows(), (std::vector<std::vector<int>>{{1, 2}, {2}}));
  EXPECT_EQ(hecke_insert_classic(Word{1, 2, 3}).rows(), (std::vector<std::vector<int>>{{1, 2, 3}}));
  EXPECT_EQ(hecke_insert_classic(Word{1, 1}).rows(), (std::vector<std::vector<int>>{{1}}));
}
