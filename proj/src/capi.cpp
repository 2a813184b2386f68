// SPDX-License-Identifier: Apache-2.0

#include "shk/shk.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "shk/equivalence.hpp"
#include "shk/insertion.hpp"
#include "shk/io.hpp"
#include "shk/kjdt.hpp"
#include "shk/parallel.hpp"
#include "shk/skpr.hpp"
#include "shk/symfun.hpp"
#include "shk/verify.hpp"

struct shk_tableau {
  shk::IncreasingShiftedTableau t;
};
struct shk_recording {
  shk::SetValuedTableau q;
};
struct shk_poly {
  shk::TruncatedPolynomial p;
};
struct shk_lr_table {
  shk::StrictPartition lambda, mu;
  shk::LRTable table;
};

namespace {

using shk::io::Json;

thread_local std::string g_error;

shk_status fail(shk_status s, const std::string& msg) {
  g_error = msg;
  return s;
}

// Runs f, mapping exceptions onto status codes.
template <typename F>
shk_status guard(F&& f) {
  try {
    return f();
  } catch (const shk::ParseError& e) {
    return fail(SHK_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SHK_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(SHK_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SHK_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SHK_INTERNAL, e.what());
  } catch (...) {
    return fail(SHK_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " is NULL");
}

shk::Word word_arg(const char* s) {
  need(s, "word");
  auto w = shk::parse_word(s);
  shk::validate_word(w);
  return w;
}

std::string word_csv(const shk::Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

std::string set_text(const std::set<int>& d) {
  std::string s = "{";
  bool first = true;
  for (int x : d) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + "}";
}

shk::Budget budget_arg(int max_len, long max_states) {
  shk::Budget b;
  b.max_len = max_len < 0 ? -1 : max_len;
  if (max_states > 0) b.max_states = max_states;
  return b;
}

std::string indent(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out += "  " + line + "\n";
  return out;
}

}  // namespace

extern "C" {

const char* shk_version(void) { return "1.0.0"; }

const char* shk_last_error(void) { return g_error.c_str(); }

void shk_string_free(char* s) { std::free(s); }

const char* shk_status_name(shk_status s) {
  switch (s) {
    case SHK_OK: return "ok";
    case SHK_INVALID_ARGUMENT: return "invalid argument";
    case SHK_PARSE: return "parse error";
    case SHK_DOMAIN: return "domain error";
    case SHK_BUDGET: return "budget exhausted";
    case SHK_INTERNAL: return "internal error";
  }
  return "unknown status";
}

shk_status shk_set_threads(int n) {
  return guard([&] {
    shk::set_worker_threads(n);
    return SHK_OK;
  });
}

int shk_get_threads(void) { return shk::worker_threads(); }

void shk_tableau_free(shk_tableau* t) { delete t; }
void shk_recording_free(shk_recording* q) { delete q; }

shk_status shk_tableau_parse(const char* s, shk_tableau** out) {
  return guard([&] {
    need(s, "input");
    need(out, "out");
    *out = new shk_tableau{shk::io::parse_tableau_arg(s)};
    return SHK_OK;
  });
}

shk_status shk_recording_parse(const char* s, shk_recording** out) {
  return guard([&] {
    need(s, "input");
    need(out, "out");
    std::string in(s);
    const auto b = in.find_first_not_of(" \t\r\n");
    auto q = (b != std::string::npos && in[b] == '{')
                 ? shk::io::set_valued_from_json(shk::io::parse_json(in))
                 : shk::io::set_valued_from_text(in);
    *out = new shk_recording{std::move(q)};
    return SHK_OK;
  });
}

shk_status shk_tableau_format(const shk_tableau* t, shk_format f, char** out) {
  return guard([&] {
    need(t, "tableau");
    need(out, "out");
    *out = dup(f == SHK_FORMAT_JSON ? shk::io::to_json(t->t).dump() : shk::io::to_text(t->t));
    return SHK_OK;
  });
}

shk_status shk_recording_format(const shk_recording* q, shk_format f, char** out) {
  return guard([&] {
    need(q, "recording tableau");
    need(out, "out");
    *out = dup(f == SHK_FORMAT_JSON ? shk::io::to_json(q->q).dump() : shk::io::to_text(q->q));
    return SHK_OK;
  });
}

int shk_tableau_equal(const shk_tableau* a, const shk_tableau* b) {
  return a && b && a->t == b->t;
}

shk_status shk_tableau_reading_word(const shk_tableau* t, char** out) {
  return guard([&] {
    need(t, "tableau");
    need(out, "out");
    *out = dup(word_csv(t->t.reading_word()));
    return SHK_OK;
  });
}

shk_status shk_urt_tableau(shk_urt_kind kind, const char* shape, shk_tableau** out) {
  return guard([&] {
    need(shape, "shape");
    need(out, "out");
    const auto k = kind == SHK_URT_SUPERSTANDARD ? shk::UrtKind::Superstandard : shk::UrtKind::Minimal;
    *out = new shk_tableau{shk::urt_tableau(k, shk::io::parse_shape(shape))};
    return SHK_OK;
  });
}

shk_status shk_word_normalize(const char* word, char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup(word_csv(word_arg(word)));
    return SHK_OK;
  });
}

shk_status shk_insert(const char* word, shk_tableau** p, shk_recording** q) {
  return guard([&] {
    need(p, "p");
    need(q, "q");
    auto r = shk::insert_word(word_arg(word));
    *p = new shk_tableau{std::move(r.insertion)};
    *q = new shk_recording{std::move(r.recording)};
    return SHK_OK;
  });
}

shk_status shk_descents(const char* word, char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup(set_text(shk::descent_set(word_arg(word))));
    return SHK_OK;
  });
}

shk_status shk_recording_descents(const shk_recording* q, char** out) {
  return guard([&] {
    need(q, "recording tableau");
    need(out, "out");
    *out = dup(set_text(shk::descent_set_recording(q->q)));
    return SHK_OK;
  });
}

shk_status shk_reverse_insert(const shk_tableau* p, const shk_recording* q, char** word) {
  return guard([&] {
    need(p, "p");
    need(q, "q");
    need(word, "out");
    *word = dup(word_csv(shk::reverse_insert(p->t, q->q)));
    return SHK_OK;
  });
}

shk_status shk_equivalent(const char* u, const char* v, int max_len, long max_states, shk_format f,
                          int* verdict, char** report) {
  return guard([&] {
    need(verdict, "verdict");
    need(report, "report");
    const auto r = shk::equivalent_bounded(word_arg(u), word_arg(v), budget_arg(max_len, max_states));
    Json j;
    std::string text;
    shk_status status = SHK_OK;
    if (auto* c = std::get_if<shk::EquivalenceCertificate>(&r)) {
      *verdict = 1;
      j = {{"schema", "shk.equivalence/1"}, {"verdict", "equivalent"}, {"certificate", shk::io::to_json(*c)}};
      text = "equivalent in " + std::to_string(c->steps.size()) + (c->steps.size() == 1 ? " step\n" : " steps\n");
      shk::Word cur = c->source;
      text += word_csv(cur) + "\n";
      for (const auto& s : c->steps) {
        cur = shk::apply_step(cur, s);
        text += "  rule " + std::to_string(s.rule) + (s.forward ? " forward" : " backward") + " at " +
                std::to_string(s.pos) + " -> " + word_csv(cur) + "\n";
      }
    } else if (auto* n = std::get_if<shk::Inequivalent>(&r)) {
      *verdict = 0;
      j = {{"schema", "shk.equivalence/1"}, {"verdict", "inequivalent"}, {"reason", n->reason}};
      text = "inequivalent: " + n->reason + "\n";
    } else {
      const auto& k = std::get<shk::Unknown>(r);
      *verdict = -1;
      j = {{"schema", "shk.equivalence/1"}, {"verdict", "unknown"}, {"states_explored", k.states_explored}};
      text = "unknown after " + std::to_string(k.states_explored) + " states\n";
      g_error = "search budget exhausted";
      status = SHK_BUDGET;
    }
    *report = dup(f == SHK_FORMAT_JSON ? j.dump() : text);
    return status;
  });
}

shk_status shk_classes(const char* word, int max_len, long max_states, shk_format f, char** report) {
  return guard([&] {
    need(report, "report");
    const auto w = word_arg(word);
    const auto budget = budget_arg(max_len, max_states);
    bool exhausted = false;
    const auto words = shk::explore_class(w, budget, shk::RewriteMode::Weak, &exhausted);
    std::set<shk::IncreasingShiftedTableau> tableaux;
    for (const auto& x : words) tableaux.insert(shk::insertion_tableau(x));
    std::vector<shk::Word> sorted(words);
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    const int len = budget.max_len < 0 ? static_cast<int>(w.size()) + 3 : budget.max_len;
    if (f == SHK_FORMAT_JSON) {
      Json ts = Json::array();
      for (const auto& t : tableaux) ts.push_back(shk::io::to_json(t));
      Json j{{"schema", "shk.classes/1"}, {"word", w},       {"max_len", len},
             {"exhausted", exhausted},    {"words", sorted}, {"tableaux", ts}};
      *report = dup(j.dump());
    } else {
      std::string s = "class of " + word_csv(w) + " up to length " + std::to_string(len) +
                      (exhausted ? "" : " (state budget hit)") + "\n";
      s += "words (" + std::to_string(sorted.size()) + "):\n";
      for (const auto& x : sorted) s += "  " + word_csv(x) + "\n";
      s += "tableaux (" + std::to_string(tableaux.size()) + "):\n";
      for (const auto& t : tableaux) s += indent(shk::io::to_text(t)) + "\n";
      *report = dup(s);
    }
    return SHK_OK;
  });
}

shk_status shk_urt_check(const shk_tableau* t, int max_len, long max_states, shk_format f, int* is_urt,
                         char** report) {
  return guard([&] {
    need(t, "tableau");
    need(is_urt, "is_urt");
    need(report, "report");
    const auto r = shk::is_urt_bounded(t->t, budget_arg(max_len, max_states));
    Json j{{"schema", "shk.urt-check/1"}, {"tableau", shk::io::to_json(t->t)}};
    std::string text;
    if (auto* ok = std::get_if<shk::VerifiedUpToBound>(&r)) {
      *is_urt = 1;
      j["result"] = "verified";
      j["states_explored"] = ok->states_explored;
      text = "no counterexample among " + std::to_string(ok->states_explored) + " words\n";
    } else {
      const auto& ce = std::get<shk::Counterexample>(r);
      *is_urt = 0;
      j["result"] = "counterexample";
      j["word"] = ce.word;
      j["other"] = shk::io::to_json(ce.other);
      text = "not a URT: " + word_csv(ce.word) + " inserts to\n" + indent(shk::io::to_text(ce.other));
    }
    *report = dup(f == SHK_FORMAT_JSON ? j.dump() : text);
    return SHK_OK;
  });
}

shk_status shk_rectify(const char* board_json, const char* order_json, shk_tableau** out) {
  return guard([&] {
    need(board_json, "board");
    need(out, "out");
    shk::Board b = shk::io::board_from_json(shk::io::parse_json(board_json));
    int markers = 0, q = 0;
    for (const auto& [c, l] : b) {
      if (std::holds_alternative<shk::Marker>(l)) ++markers;
      if (auto* v = std::get_if<shk::Value>(&l)) q = std::max(q, v->v);
    }
    if (markers == 0) {
      const auto values = shk::values_of(b);
      b = shk::mark_superstandard(values, values.implied_inner());
      markers = values.implied_inner().size();
    }
    const auto seq = order_json ? shk::io::switches_from_json(shk::io::parse_json(order_json))
                                : shk::standard_switch_sequence(markers, q);
    *out = new shk_tableau{shk::rectify_marked(b, seq)};
    return SHK_OK;
  });
}

void shk_poly_free(shk_poly* p) { delete p; }

shk_status shk_poly_compute(shk_poly_kind kind, const char* shape, int nvars, int maxdeg, shk_poly** out) {
  return guard([&] {
    need(shape, "shape");
    need(out, "out");
    if (nvars < 0 || maxdeg < 0) throw std::invalid_argument("variables and degree must be nonnegative");
    switch (kind) {
      case SHK_POLY_K:
        *out = new shk_poly{shk::K_poly(shk::io::parse_shape(shape), nvars, maxdeg)};
        break;
      case SHK_POLY_GP:
        *out = new shk_poly{shk::GP_poly(shk::io::parse_shape(shape), nvars, maxdeg)};
        break;
      case SHK_POLY_G:
        *out = new shk_poly{shk::G_poly(shk::io::parse_partition(shape), nvars, maxdeg)};
        break;
      default:
        throw std::invalid_argument("unknown polynomial kind");
    }
    return SHK_OK;
  });
}

shk_status shk_poly_parse(const char* json, shk_poly** out) {
  return guard([&] {
    need(json, "input");
    need(out, "out");
    *out = new shk_poly{shk::io::polynomial_from_json(shk::io::parse_json(json))};
    return SHK_OK;
  });
}

shk_status shk_poly_format(const shk_poly* p, shk_format f, char** out) {
  return guard([&] {
    need(p, "polynomial");
    need(out, "out");
    *out = dup(f == SHK_FORMAT_JSON ? shk::io::to_json(p->p).dump() : shk::to_string(p->p) + "\n");
    return SHK_OK;
  });
}

int shk_poly_equal(const shk_poly* a, const shk_poly* b) { return a && b && a->p == b->p; }

shk_status shk_poly_coefficient(const shk_poly* p, const int* exponent, size_t n, char** out) {
  return guard([&] {
    need(p, "polynomial");
    need(out, "out");
    if (n && !exponent) throw std::invalid_argument("exponent is NULL");
    if (static_cast<int>(n) != p->p.nvars()) throw std::invalid_argument("exponent has the wrong length");
    *out = dup(p->p.coefficient(shk::Exponent(exponent, exponent + n)).str());
    return SHK_OK;
  });
}

shk_status shk_poly_is_symmetric(const shk_poly* p, int* out) {
  return guard([&] {
    need(p, "polynomial");
    need(out, "out");
    *out = shk::is_symmetric(p->p);
    return SHK_OK;
  });
}

void shk_lr_free(shk_lr_table* t) { delete t; }

shk_status shk_lr_compute(const char* lambda, const char* mu, shk_urt_kind kind, shk_lr_table** out) {
  return guard([&] {
    need(lambda, "lambda");
    need(mu, "mu");
    need(out, "out");
    const auto l = shk::io::parse_shape(lambda), m = shk::io::parse_shape(mu);
    const auto k = kind == SHK_URT_SUPERSTANDARD ? shk::UrtKind::Superstandard : shk::UrtKind::Minimal;
    *out = new shk_lr_table{l, m, shk::lr_coefficients(l, m, k)};
    return SHK_OK;
  });
}

shk_status shk_lr_format(const shk_lr_table* t, shk_format f, char** out) {
  return guard([&] {
    need(t, "table");
    need(out, "out");
    const Json j = shk::io::lr_json(t->lambda, t->mu, t->table);
    if (f == SHK_FORMAT_JSON) {
      *out = dup(j.dump());
    } else {
      std::string s;
      for (const auto& row : j.at("coeffs")) {
        std::string nu;
        for (const auto& x : row.at("nu")) nu += (nu.empty() ? "" : ",") + std::to_string(x.get<int>());
        s += "(" + nu + ")\t" + std::to_string(row.at("c").get<long long>()) + "\n";
      }
      *out = dup(s);
    }
    return SHK_OK;
  });
}

shk_status shk_lr_verify(const char* lambda, const char* mu, int nvars, int maxdeg, shk_format f, int* match,
                         char** report) {
  return guard([&] {
    need(lambda, "lambda");
    need(mu, "mu");
    need(match, "match");
    need(report, "report");
    const auto l = shk::io::parse_shape(lambda), m = shk::io::parse_shape(mu);
    const auto r = shk::verify_product_identity(l, m, nvars, maxdeg);
    *match = r.match;
    Json j{{"schema", "shk.lr-verify/1"}, {"nvars", nvars},  {"maxdeg", maxdeg},
           {"match", r.match},            {"table", shk::io::lr_json(l, m, r.table)}};
    std::string text = std::string(r.match ? "match" : "MISMATCH") + " for K_(" + l.to_string() + ") * K_(" +
                       m.to_string() + ") in " + std::to_string(nvars) + " variables up to degree " +
                       std::to_string(maxdeg) + "\n";
    if (r.differing) {
      const auto a = r.product.coefficient(*r.differing), b = r.expansion.coefficient(*r.differing);
      j["differing"] = {{"exp", *r.differing}, {"product", a.str()}, {"expansion", b.str()}};
      text += "first differing exponent [" + word_csv(*r.differing) + "]: product " + a.str() + ", expansion " +
              b.str() + "\n";
    } else {
      j["differing"] = nullptr;
    }
    *report = dup(f == SHK_FORMAT_JSON ? j.dump() : text);
    return SHK_OK;
  });
}

size_t shk_suite_count(void) { return shk::verification_suites().size(); }

const char* shk_suite_name(size_t i) {
  const auto& s = shk::verification_suites();
  return i < s.size() ? s[i].name.c_str() : nullptr;
}

const char* shk_suite_summary(size_t i) {
  const auto& s = shk::verification_suites();
  return i < s.size() ? s[i].summary.c_str() : nullptr;
}

shk_status shk_run_suite(const char* name, shk_format f, int* passed, double* seconds, char** report) {
  return guard([&] {
    need(name, "suite name");
    need(passed, "passed");
    need(report, "report");
    const auto r = shk::run_suite(name);
    *passed = r.passed;
    if (seconds) *seconds = r.seconds;
    if (f == SHK_FORMAT_JSON) {
      Json j{{"schema", "shk.verify/1"}, {"suite", r.name}, {"passed", r.passed},
             {"seconds", r.seconds},     {"detail", r.detail}};
      *report = dup(j.dump());
    } else {
      std::ostringstream os;
      os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.seconds << " s): " << r.detail << "\n";
      *report = dup(os.str());
    }
    return SHK_OK;
  });
}

}  // extern "C"
