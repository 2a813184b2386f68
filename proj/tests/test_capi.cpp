// Exercises libshk through its C header only.

#include <gtest/gtest.h>

#include <string>

#include "shk/shk.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  shk_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, Basics) {
  EXPECT_STREQ(shk_version(), "1.0.0");
  EXPECT_STREQ(shk_status_name(SHK_PARSE), "parse error");
  shk_string_free(nullptr);
  shk_tableau_free(nullptr);
  shk_poly_free(nullptr);
}

TEST(CApi, InsertAndReverse) {
  shk_tableau* p = nullptr;
  shk_recording* q = nullptr;
  ASSERT_EQ(shk_insert("451132", &p, &q), SHK_OK);
  char* s = nullptr;
  ASSERT_EQ(shk_tableau_format(p, SHK_FORMAT_TEXT, &s), SHK_OK);
  EXPECT_EQ(take(s), "1\t2\t4\t5\n\t3\n");
  ASSERT_EQ(shk_recording_format(q, SHK_FORMAT_TEXT, &s), SHK_OK);
  EXPECT_EQ(take(s), "1\t2\t{3',4'}\t6'\n\t5\n");
  ASSERT_EQ(shk_recording_descents(q, &s), SHK_OK);
  EXPECT_EQ(take(s), "{2,5}");
  ASSERT_EQ(shk_descents("451132", &s), SHK_OK);
  EXPECT_EQ(take(s), "{2,5}");
  ASSERT_EQ(shk_reverse_insert(p, q, &s), SHK_OK);
  EXPECT_EQ(take(s), "4,5,1,1,3,2");

  // JSON round trip through parse
  ASSERT_EQ(shk_tableau_format(p, SHK_FORMAT_JSON, &s), SHK_OK);
  const std::string json = take(s);
  shk_tableau* back = nullptr;
  ASSERT_EQ(shk_tableau_parse(json.c_str(), &back), SHK_OK);
  EXPECT_EQ(shk_tableau_equal(p, back), 1);
  shk_tableau_free(back);
  ASSERT_EQ(shk_recording_format(q, SHK_FORMAT_JSON, &s), SHK_OK);
  shk_recording* qback = nullptr;
  ASSERT_EQ(shk_recording_parse(take(s).c_str(), &qback), SHK_OK);
  shk_recording_free(qback);

  shk_tableau_free(p);
  shk_recording_free(q);
}

TEST(CApi, ErrorCodes) {
  shk_tableau* p = nullptr;
  shk_recording* q = nullptr;
  EXPECT_EQ(shk_insert("4a5", &p, &q), SHK_PARSE);
  EXPECT_NE(std::string(shk_last_error()), "");
  EXPECT_EQ(p, nullptr);
  EXPECT_EQ(shk_insert(nullptr, &p, &q), SHK_INVALID_ARGUMENT);
  EXPECT_EQ(shk_tableau_parse("1 1", &p), SHK_PARSE);
  char* s = nullptr;
  EXPECT_EQ(shk_word_normalize("1,,2", &s), SHK_PARSE);
  shk_poly* poly = nullptr;
  EXPECT_EQ(shk_poly_compute(SHK_POLY_K, "2,2", 3, 4, &poly), SHK_PARSE);
  EXPECT_EQ(poly, nullptr);
  int passed = 0;
  EXPECT_EQ(shk_run_suite("no-such-suite", SHK_FORMAT_TEXT, &passed, nullptr, &s), SHK_INVALID_ARGUMENT);
  EXPECT_NE(std::string(shk_last_error()).find("no-such-suite"), std::string::npos);
}

TEST(CApi, ReverseRejectsMismatchedPair) {
  shk_tableau* p = nullptr;
  shk_recording* q = nullptr;
  ASSERT_EQ(shk_insert("12", &p, &q), SHK_OK);
  shk_tableau* other = nullptr;
  ASSERT_EQ(shk_tableau_parse("1 2 3", &other), SHK_OK);
  char* s = nullptr;
  EXPECT_NE(shk_reverse_insert(other, q, &s), SHK_OK);
  shk_tableau_free(p);
  shk_tableau_free(other);
  shk_recording_free(q);
}

TEST(CApi, Polynomials) {
  shk_poly* k = nullptr;
  ASSERT_EQ(shk_poly_compute(SHK_POLY_K, "2,1", 3, 4, &k), SHK_OK);
  const int exps[][3] = {{2, 1, 0}, {1, 1, 1}, {3, 1, 0}, {2, 2, 0}, {2, 1, 1}};
  const char* expected[] = {"1", "2", "2", "3", "5"};
  for (int i = 0; i < 5; ++i) {
    char* c = nullptr;
    ASSERT_EQ(shk_poly_coefficient(k, exps[i], 3, &c), SHK_OK);
    EXPECT_EQ(take(c), expected[i]) << i;
  }
  int sym = 0;
  ASSERT_EQ(shk_poly_is_symmetric(k, &sym), SHK_OK);
  EXPECT_EQ(sym, 1);
  char* json = nullptr;
  ASSERT_EQ(shk_poly_format(k, SHK_FORMAT_JSON, &json), SHK_OK);
  shk_poly* back = nullptr;
  ASSERT_EQ(shk_poly_parse(take(json).c_str(), &back), SHK_OK);
  EXPECT_EQ(shk_poly_equal(k, back), 1);
  char* c = nullptr;
  EXPECT_EQ(shk_poly_coefficient(k, exps[0], 2, &c), SHK_INVALID_ARGUMENT);
  shk_poly_free(back);
  shk_poly_free(k);
}

TEST(CApi, Equivalence) {
  int verdict = 0;
  char* report = nullptr;
  ASSERT_EQ(shk_equivalent("12453", "124533", -1, 0, SHK_FORMAT_JSON, &verdict, &report), SHK_OK);
  EXPECT_EQ(verdict, 1);
  EXPECT_NE(take(report).find("shk.equivalence/1"), std::string::npos);
  ASSERT_EQ(shk_equivalent("12", "21", 4, 0, SHK_FORMAT_TEXT, &verdict, &report), SHK_OK);
  EXPECT_EQ(verdict, 1);  // first-position swap
  take(report);
  ASSERT_EQ(shk_equivalent("1", "2", 4, 0, SHK_FORMAT_TEXT, &verdict, &report), SHK_OK);
  EXPECT_EQ(verdict, 0);
  take(report);

  shk_tableau* t = nullptr;
  shk_recording* q = nullptr;
  ASSERT_EQ(shk_insert("12453", &t, &q), SHK_OK);
  int is_urt = 1;
  ASSERT_EQ(shk_urt_check(t, 6, 0, SHK_FORMAT_TEXT, &is_urt, &report), SHK_OK);
  EXPECT_EQ(is_urt, 0);
  take(report);
  shk_tableau_free(t);
  shk_recording_free(q);
}

TEST(CApi, Rectify) {
  const char* board =
      R"({"schema":"shk.board/1","cells":[{"row":1,"col":2,"label":{"v":1}},)"
      R"({"row":1,"col":3,"label":{"v":3}},{"row":2,"col":2,"label":{"v":2}}]})";
  shk_tableau* t = nullptr;
  ASSERT_EQ(shk_rectify(board, nullptr, &t), SHK_OK);
  char* s = nullptr;
  ASSERT_EQ(shk_tableau_format(t, SHK_FORMAT_TEXT, &s), SHK_OK);
  EXPECT_EQ(take(s), "1\t2\t3\n");
  shk_tableau_free(t);
  EXPECT_EQ(shk_rectify("{}", nullptr, &t), SHK_PARSE);
}

TEST(CApi, LR) {
  shk_lr_table* t = nullptr;
  ASSERT_EQ(shk_lr_compute("2", "2,1", SHK_URT_MINIMAL, &t), SHK_OK);
  char* s = nullptr;
  ASSERT_EQ(shk_lr_format(t, SHK_FORMAT_TEXT, &s), SHK_OK);
  EXPECT_EQ(take(s), "(4,1)\t1\n(3,2)\t1\n(4,2)\t1\n");
  shk_lr_free(t);
  int match = 0;
  ASSERT_EQ(shk_lr_verify("1", "1", 3, 6, SHK_FORMAT_JSON, &match, &s), SHK_OK);
  EXPECT_EQ(match, 1);
  EXPECT_NE(take(s).find("\"differing\":null"), std::string::npos);
}

TEST(CApi, Suites) {
  ASSERT_EQ(shk_suite_count(), 13u);
  EXPECT_STREQ(shk_suite_name(0), "insertion");
  EXPECT_EQ(shk_suite_name(99), nullptr);
  int passed = 0;
  double seconds = -1;
  char* s = nullptr;
  ASSERT_EQ(shk_run_suite("witness", SHK_FORMAT_TEXT, &passed, &seconds, &s), SHK_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_GE(seconds, 0);
  EXPECT_EQ(take(s).rfind("PASS witness", 0), 0u);
}

TEST(CApi, Threads) {
  EXPECT_EQ(shk_set_threads(2), SHK_OK);
  EXPECT_EQ(shk_get_threads(), 2);
  EXPECT_EQ(shk_set_threads(-1), SHK_INVALID_ARGUMENT);
  EXPECT_EQ(shk_set_threads(0), SHK_OK);
  EXPECT_GE(shk_get_threads(), 1);
}
