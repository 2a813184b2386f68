// SPDX-License-Identifier: Apache-2.0
//
// shk: command-line front end over the C API.
//
// Exit status: 0 success, 1 a check failed, 2 unreadable input, 3 any other
// error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "shk/shk.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0, kCheckFailed = 1, kBadInput = 2, kError = 3;

struct Failure {
  int code;
  std::string message;
};

// Turns a non-OK status into a Failure carrying the library's message.
void ok(shk_status s) {
  if (s == SHK_OK) return;
  const int code = (s == SHK_PARSE || s == SHK_INVALID_ARGUMENT) ? kBadInput : kError;
  throw Failure{code, std::string(shk_status_name(s)) + ": " + shk_last_error()};
}

struct StringFree {
  void operator()(char* s) const { shk_string_free(s); }
};
using Str = std::unique_ptr<char, StringFree>;

template <typename T, void (*F)(T*)>
struct Deleter {
  void operator()(T* p) const { F(p); }
};
using Tableau = std::unique_ptr<shk_tableau, Deleter<shk_tableau, shk_tableau_free>>;
using Recording = std::unique_ptr<shk_recording, Deleter<shk_recording, shk_recording_free>>;
using Poly = std::unique_ptr<shk_poly, Deleter<shk_poly, shk_poly_free>>;
using LR = std::unique_ptr<shk_lr_table, Deleter<shk_lr_table, shk_lr_free>>;

// Calls fn(char**) and returns the string it produced.
template <typename Fn>
std::string take(Fn&& fn) {
  char* raw = nullptr;
  const shk_status s = fn(&raw);
  Str holder(raw);
  ok(s);
  return raw ? std::string(raw) : std::string();
}

// A file's contents when the argument names a file, else the argument.
std::string read_arg(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  if (!in) throw Failure{kBadInput, "cannot read " + arg};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json json_of(const std::string& s) { return Json::parse(s); }

// "{2,3}" -> [2,3]
Json set_json(const std::string& s) {
  Json a = Json::array();
  std::string body = s.substr(1, s.size() - 2);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) a.push_back(std::stoi(tok));
  return a;
}

Json word_json(const std::string& csv) {
  Json a = Json::array();
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) a.push_back(std::stoi(tok));
  return a;
}

Tableau parse_tableau(const std::string& s) {
  shk_tableau* t = nullptr;
  ok(shk_tableau_parse(s.c_str(), &t));
  return Tableau(t);
}

Recording parse_recording(const std::string& s) {
  shk_recording* q = nullptr;
  ok(shk_recording_parse(s.c_str(), &q));
  return Recording(q);
}

std::string indent(const std::string& text) {
  std::string out, line;
  std::istringstream in(text);
  while (std::getline(in, line)) out += "  " + line + "\n";
  return out;
}

struct Options {
  std::string format = "text";
  int threads = 0;
  bool json() const { return format == "json"; }
  shk_format fmt() const { return json() ? SHK_FORMAT_JSON : SHK_FORMAT_TEXT; }
};

int cmd_insert(const Options& o, const std::string& word) {
  shk_tableau* p = nullptr;
  shk_recording* q = nullptr;
  ok(shk_insert(word.c_str(), &p, &q));
  Tableau P(p);
  Recording Q(q);
  const std::string d = take([&](char** s) { return shk_descents(word.c_str(), s); });
  const std::string dq = take([&](char** s) { return shk_recording_descents(Q.get(), s); });
  const std::string w = take([&](char** s) { return shk_word_normalize(word.c_str(), s); });
  if (o.json()) {
    Json j{{"schema", "shk.insertion/1"},
           {"word", word_json(w)},
           {"P", json_of(take([&](char** s) { return shk_tableau_format(P.get(), SHK_FORMAT_JSON, s); }))},
           {"Q", json_of(take([&](char** s) { return shk_recording_format(Q.get(), SHK_FORMAT_JSON, s); }))},
           {"descents", set_json(d)},
           {"recording_descents", set_json(dq)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "P:\n" << indent(take([&](char** s) { return shk_tableau_format(P.get(), SHK_FORMAT_TEXT, s); }))
              << "Q:\n" << indent(take([&](char** s) { return shk_recording_format(Q.get(), SHK_FORMAT_TEXT, s); }))
              << "D(w) = " << d << "\nD(Q) = " << dq << "\n";
  }
  return kOk;
}

int cmd_reverse(const Options& o, const std::string& p_arg, const std::string& q_arg) {
  const Tableau P = parse_tableau(read_arg(p_arg));
  const Recording Q = parse_recording(read_arg(q_arg));
  const std::string w = take([&](char** s) { return shk_reverse_insert(P.get(), Q.get(), s); });
  if (o.json())
    std::cout << Json{{"schema", "shk.word/1"}, {"word", word_json(w)}}.dump(2) << "\n";
  else
    std::cout << w << "\n";
  return kOk;
}

int cmd_rectify(const Options& o, const std::string& board, const std::string& order) {
  const std::string b = read_arg(board);
  std::string ord;
  if (order != "superstandard") ord = read_arg(order);
  shk_tableau* t = nullptr;
  ok(shk_rectify(b.c_str(), order == "superstandard" ? nullptr : ord.c_str(), &t));
  Tableau T(t);
  const std::string out = take([&](char** s) { return shk_tableau_format(T.get(), o.fmt(), s); });
  std::cout << (o.json() ? json_of(out).dump(2) + "\n" : out);
  return kOk;
}

int cmd_classes(const Options& o, const std::string& word, int max_len, long max_states) {
  const std::string out = take([&](char** s) { return shk_classes(word.c_str(), max_len, max_states, o.fmt(), s); });
  std::cout << (o.json() ? json_of(out).dump(2) + "\n" : out);
  return kOk;
}

int cmd_urt_check(const Options& o, const std::string& tableau, bool from_word, int max_len, long max_states) {
  Tableau T;
  if (from_word) {
    shk_tableau* p = nullptr;
    shk_recording* q = nullptr;
    ok(shk_insert(tableau.c_str(), &p, &q));
    T.reset(p);
    shk_recording_free(q);
  } else {
    T = parse_tableau(read_arg(tableau));
  }
  int is_urt = 0;
  const std::string out =
      take([&](char** s) { return shk_urt_check(T.get(), max_len, max_states, o.fmt(), &is_urt, s); });
  std::cout << (o.json() ? json_of(out).dump(2) + "\n" : out);
  return is_urt ? kOk : kCheckFailed;
}

int cmd_equiv(const Options& o, const std::string& u, const std::string& v, int max_len, long max_states) {
  int verdict = 0;
  char* raw = nullptr;
  const shk_status s = shk_equivalent(u.c_str(), v.c_str(), max_len, max_states, o.fmt(), &verdict, &raw);
  Str holder(raw);
  if (s != SHK_BUDGET) ok(s);
  std::cout << (o.json() ? json_of(raw).dump(2) + "\n" : std::string(raw));
  return verdict == 1 ? kOk : kCheckFailed;
}

int cmd_poly(const Options& o, const std::string& kind, const std::string& shape, int vars, int deg) {
  const shk_poly_kind k = kind == "K" ? SHK_POLY_K : kind == "GP" ? SHK_POLY_GP : SHK_POLY_G;
  shk_poly* p = nullptr;
  ok(shk_poly_compute(k, shape.c_str(), vars, deg, &p));
  Poly P(p);
  const std::string out = take([&](char** s) { return shk_poly_format(P.get(), o.fmt(), s); });
  std::cout << (o.json() ? json_of(out).dump(2) + "\n" : out);
  return kOk;
}

int cmd_lr(const Options& o, const std::string& lambda, const std::string& mu, bool verify, int vars, int deg,
           const std::string& urt) {
  if (verify) {
    int match = 0;
    const std::string out = take(
        [&](char** s) { return shk_lr_verify(lambda.c_str(), mu.c_str(), vars, deg, o.fmt(), &match, s); });
    std::cout << (o.json() ? json_of(out).dump(2) + "\n" : out);
    return match ? kOk : kCheckFailed;
  }
  shk_lr_table* t = nullptr;
  ok(shk_lr_compute(lambda.c_str(), mu.c_str(), urt == "superstandard" ? SHK_URT_SUPERSTANDARD : SHK_URT_MINIMAL,
                    &t));
  LR table(t);
  const std::string out = take([&](char** s) { return shk_lr_format(table.get(), o.fmt(), s); });
  std::cout << (o.json() ? json_of(out).dump(2) + "\n" : out);
  return kOk;
}

int cmd_verify(const Options& o, const std::string& suite, bool list) {
  const std::size_t n = shk_suite_count();
  if (list) {
    if (o.json()) {
      Json a = Json::array();
      for (std::size_t i = 0; i < n; ++i) a.push_back({{"name", shk_suite_name(i)}, {"summary", shk_suite_summary(i)}});
      std::cout << Json{{"schema", "shk.suites/1"}, {"suites", a}}.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < n; ++i) std::cout << shk_suite_name(i) << "\t" << shk_suite_summary(i) << "\n";
    }
    return kOk;
  }
  std::vector<std::string> names;
  if (suite == "all")
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(shk_suite_name(i));
  else
    names.push_back(suite);
  bool all_passed = true;
  Json results = Json::array();
  for (const auto& name : names) {
    int passed = 0;
    const std::string out =
        take([&](char** s) { return shk_run_suite(name.c_str(), o.fmt(), &passed, nullptr, s); });
    all_passed = all_passed && passed;
    if (o.json())
      results.push_back(json_of(out));
    else
      std::cout << out;
  }
  if (o.json()) std::cout << (results.size() == 1 ? results[0] : results).dump(2) << "\n";
  return all_passed ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shifted Hecke insertion, K-theoretic jeu de taquin and weak shifted Grothendieck polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  if (const char* env = std::getenv("SHK_THREADS")) {
    try {
      o.threads = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "shk: ignoring SHK_THREADS=" << env << "\n";
    }
  }
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", o.threads, "Worker threads (default: $SHK_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  std::string word, word2, p_arg, q_arg, board, order = "superstandard", tableau, kind, shape, lambda, mu,
                                                  suite = "all", urt = "minimal";
  int max_len = -1, vars = 3, deg = 4;
  long max_states = 1'000'000;
  bool verify = false, list = false, from_word = false;

  auto* insert = app.add_subcommand("insert", "Insertion and recording tableaux of a word");
  insert->add_option("word", word, "Word, e.g. 451132 or 10,2,3")->required();

  auto* reverse = app.add_subcommand("reverse", "Recover the word from (P, Q)");
  reverse->add_option("P", p_arg, "Insertion tableau (file or inline, text or JSON)")->required();
  reverse->add_option("Q", q_arg, "Recording tableau (file or inline, text or JSON)")->required();

  auto* rectify = app.add_subcommand("rectify", "K-rectify a board");
  rectify->add_option("board", board, "Board JSON (file or inline)")->required();
  rectify->add_option("--order", order, "superstandard, or a switches JSON file");

  auto* classes = app.add_subcommand("classes", "Explore the weak K-Knuth class of a word");
  classes->add_option("word", word)->required();
  classes->add_option("--max-len", max_len, "Longest word explored (default: length + 3)");
  classes->add_option("--max-states", max_states, "State budget");

  auto* urt_check = app.add_subcommand("urt-check", "Search for a word in the class inserting elsewhere");
  urt_check->add_option("tableau", tableau, "Tableau (file or inline, rows separated by '/')")->required();
  urt_check->add_flag("--word", from_word, "Treat the argument as a word and check its insertion tableau");
  urt_check->add_option("--budget,--max-len", max_len, "Longest word explored");
  urt_check->add_option("--max-states", max_states, "State budget");

  auto* equiv = app.add_subcommand("equiv", "Search for a rewriting chain between two words");
  equiv->add_option("u", word)->required();
  equiv->add_option("v", word2)->required();
  equiv->add_option("--max-len", max_len, "Longest intermediate word");
  equiv->add_option("--max-states", max_states, "State budget");

  auto* poly = app.add_subcommand("poly", "Truncated K, GP or G polynomial");
  poly->add_option("kind", kind)->required()->check(CLI::IsMember({"K", "GP", "G"}));
  poly->add_option("--shape", shape, "Shape, e.g. 2,1")->required();
  poly->add_option("--vars", vars, "Number of variables")->check(CLI::NonNegativeNumber);
  poly->add_option("--deg", deg, "Degree bound")->check(CLI::NonNegativeNumber);

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
  lr->add_option("--lambda", lambda, "First shape")->required();
  lr->add_option("--mu", mu, "Second shape")->required();
  lr->add_flag("--verify", verify, "Check the table against the polynomial product");
  lr->add_option("--vars", vars, "Variables for --verify")->check(CLI::NonNegativeNumber);
  lr->add_option("--deg", deg, "Degree bound for --verify")->check(CLI::NonNegativeNumber);
  lr->add_option("--urt", urt, "Target tableau")->check(CLI::IsMember({"minimal", "superstandard"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run a named verification suite");
  verify_cmd->add_option("suite", suite, "Suite name or 'all'");
  verify_cmd->add_flag("--list", list, "List the suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    ok(shk_set_threads(o.threads));
    if (*insert) return cmd_insert(o, word);
    if (*reverse) return cmd_reverse(o, p_arg, q_arg);
    if (*rectify) return cmd_rectify(o, board, order);
    if (*classes) return cmd_classes(o, word, max_len, max_states);
    if (*urt_check) return cmd_urt_check(o, tableau, from_word, max_len, max_states);
    if (*equiv) return cmd_equiv(o, word, word2, max_len, max_states);
    if (*poly) return cmd_poly(o, kind, shape, vars, deg);
    if (*lr) return cmd_lr(o, lambda, mu, verify, vars, deg, urt);
    if (*verify_cmd) return cmd_verify(o, suite, list);
  } catch (const Failure& f) {
    std::cerr << "shk: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "shk: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
