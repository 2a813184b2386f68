// SPDX-License-Identifier: Apache-2.0

#include "shk/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace shk::io {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& tok, const std::string& what) {
  const std::string t = trim(tok);
  try {
    std::size_t used = 0;
    const int v = std::stoi(t, &used);
    if (used != t.size()) throw ParseError("bad " + what + " '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad " + what + " '" + tok + "'");
  }
}

Entry parse_entry(std::string tok) {
  tok = trim(tok);
  const bool primed = !tok.empty() && tok.back() == '\'';
  if (primed) tok.pop_back();
  const int v = parse_int(tok, "entry");
  if (v <= 0) throw ParseError("entries must be positive");
  return Entry{v, primed};
}

std::string cell_text(const SetValuedTableau::Box& box) {
  if (box.size() == 1) return to_string(box.front());
  std::string s = "{";
  for (std::size_t i = 0; i < box.size(); ++i) s += (i ? "," : "") + to_string(box[i]);
  return s + "}";
}

// Rows of (column -> field) from the tab-separated text, skipping blank lines.
std::vector<std::map<int, std::string>> text_rows(const std::string& s) {
  std::string body = s;
  if (body.find('\n') == std::string::npos && body.find('/') != std::string::npos)
    std::replace(body.begin(), body.end(), '/', '\n');
  std::vector<std::map<int, std::string>> rows;
  for (const auto& line : split(body, '\n')) {
    if (trim(line).empty()) continue;
    std::map<int, std::string> row;
    const auto fields = split(line, '\t');
    for (std::size_t k = 0; k < fields.size(); ++k)
      if (!trim(fields[k]).empty()) row[static_cast<int>(k) + 1] = trim(fields[k]);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Text rows must start on the diagonal and have no gaps.
std::vector<std::vector<std::string>> shifted_fields(const std::string& s) {
  std::vector<std::vector<std::string>> out;
  const auto rows = text_rows(s);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::string> fields;
    int expect = static_cast<int>(r) + 1;
    const bool has_tabs = s.find('\t') != std::string::npos;
    for (const auto& [col, f] : rows[r]) {
      // without tabs, a row is a space separated list starting on the diagonal
      if (!has_tabs) {
        std::stringstream ss(f);
        std::string tok;
        while (ss >> tok) fields.push_back(tok);
        continue;
      }
      if (col != expect) throw ParseError("row " + std::to_string(r + 1) + " is not a shifted row");
      fields.push_back(f);
      ++expect;
    }
    out.push_back(std::move(fields));
  }
  return out;
}

SetValuedTableau::Box parse_box(const std::string& f) {
  SetValuedTableau::Box box;
  if (f.front() == '{') {
    if (f.back() != '}') throw ParseError("unterminated cell '" + f + "'");
    for (const auto& tok : split(f.substr(1, f.size() - 2), ',')) box.push_back(parse_entry(tok));
  } else {
    box.push_back(parse_entry(f));
  }
  return box;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

void check_schema(const Json& j, const char* schema) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (j.contains("schema") && j.at("schema") != schema)
    throw ParseError("expected schema " + std::string(schema) + ", got " + j.at("schema").dump());
}

int json_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> json_ints(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(json_int(x, what));
  return out;
}

Json entries_json(const SetValuedTableau::Box& box) {
  Json a = Json::array();
  for (const Entry& e : box) a.push_back({{"v", e.value}, {"primed", e.primed}});
  return a;
}

Json shape_json(const StrictPartition& p) { return Json(p.parts()); }

// Graded order for shapes: smaller size first, then lexicographically larger.
bool graded_before(const StrictPartition& a, const StrictPartition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.parts() > b.parts();
}

template <typename F>
auto wrap(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string to_text(const IncreasingShiftedTableau& t) {
  std::string out;
  for (int r = 0; r < t.num_rows(); ++r) {
    out += std::string(r, '\t');
    const auto& row = t.rows()[r];
    for (std::size_t k = 0; k < row.size(); ++k) out += (k ? "\t" : "") + std::to_string(row[k]);
    out += "\n";
  }
  return out;
}

std::string to_text(const SetValuedTableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    out += std::string(r, '\t');
    const auto& row = t.rows()[r];
    for (std::size_t k = 0; k < row.size(); ++k) out += (k ? "\t" : "") + cell_text(row[k]);
    out += "\n";
  }
  return out;
}

std::string to_text(const SkewTableau& t) {
  Board b;
  for (const auto& [c, v] : t.cells()) b.emplace(c, Value{v});
  return to_text(b);
}

std::string to_text(const Board& b) {
  std::map<int, std::map<int, std::string>> rows;
  for (const auto& [c, l] : b) rows[c.row][c.col] = to_string(l);
  if (rows.empty()) return "";
  std::string out;
  for (int r = 1; r <= rows.rbegin()->first; ++r) {
    if (auto it = rows.find(r); it != rows.end()) {
      const int last = it->second.rbegin()->first;
      for (int col = 1; col <= last; ++col) {
        if (col > 1) out += "\t";
        if (auto f = it->second.find(col); f != it->second.end()) out += f->second;
      }
    }
    out += "\n";
  }
  return out;
}

IncreasingShiftedTableau tableau_from_text(const std::string& s) {
  return wrap([&] {
    std::vector<std::vector<int>> rows;
    for (const auto& fields : shifted_fields(s)) {
      std::vector<int> row;
      for (const auto& f : fields) {
        const Entry e = parse_entry(f);
        if (e.primed) throw ParseError("increasing tableaux have no primed entries");
        row.push_back(e.value);
      }
      rows.push_back(std::move(row));
    }
    return IncreasingShiftedTableau(std::move(rows));
  });
}

SetValuedTableau set_valued_from_text(const std::string& s) {
  return wrap([&] {
    std::vector<std::vector<SetValuedTableau::Box>> rows;
    for (const auto& fields : shifted_fields(s)) {
      std::vector<SetValuedTableau::Box> row;
      for (const auto& f : fields) row.push_back(parse_box(f));
      rows.push_back(std::move(row));
    }
    return SetValuedTableau(std::move(rows));
  });
}

Json to_json(const IncreasingShiftedTableau& t) {
  Json cells = Json::array();
  for (int r = 0; r < t.num_rows(); ++r)
    for (std::size_t k = 0; k < t.rows()[r].size(); ++k)
      cells.push_back({{"row", r + 1},
                       {"col", r + 1 + static_cast<int>(k)},
                       {"entries", Json::array({{{"v", t.rows()[r][k]}, {"primed", false}}})}});
  return {{"schema", kTableauSchema}, {"shape", shape_json(t.shape())}, {"cells", cells}};
}

Json to_json(const SetValuedTableau& t) {
  Json cells = Json::array();
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (std::size_t k = 0; k < t.rows()[r].size(); ++k)
      cells.push_back({{"row", r + 1}, {"col", r + 1 + k}, {"entries", entries_json(t.rows()[r][k])}});
  return {{"schema", kTableauSchema}, {"shape", shape_json(t.shape())}, {"cells", cells}};
}

SetValuedTableau set_valued_from_json(const Json& j) {
  return wrap([&] {
    check_schema(j, kTableauSchema);
    std::map<Cell, SetValuedTableau::Box> boxes;
    for (const auto& c : field(j, "cells")) {
      const Cell cell{json_int(field(c, "row"), "row"), json_int(field(c, "col"), "col")};
      SetValuedTableau::Box box;
      for (const auto& e : field(c, "entries")) {
        const int v = json_int(field(e, "v"), "entry");
        if (v <= 0) throw ParseError("entries must be positive");
        const bool primed = e.contains("primed") ? e.at("primed").get<bool>() : false;
        box.push_back(Entry{v, primed});
      }
      if (!boxes.emplace(cell, std::move(box)).second) throw ParseError("duplicate cell");
    }
    std::vector<std::vector<SetValuedTableau::Box>> rows;
    for (const auto& [c, box] : boxes) {
      if (c.row < 1 || c.row > static_cast<int>(rows.size()) + 1) throw ParseError("rows must be consecutive");
      if (c.row > static_cast<int>(rows.size())) rows.emplace_back();
      if (c.col != c.row + static_cast<int>(rows[c.row - 1].size()))
        throw ParseError("cells do not form a shifted shape");
      rows[c.row - 1].push_back(box);
    }
    SetValuedTableau t(std::move(rows));
    if (j.contains("shape") && json_ints(j.at("shape"), "shape") != t.shape().parts())
      throw ParseError("shape does not match the cells");
    return t;
  });
}

IncreasingShiftedTableau tableau_from_json(const Json& j) {
  return wrap([&] {
    const SetValuedTableau s = set_valued_from_json(j);
    std::vector<std::vector<int>> rows;
    for (const auto& row : s.rows()) {
      rows.emplace_back();
      for (const auto& box : row) {
        if (box.size() != 1 || box.front().primed)
          throw ParseError("increasing tableaux hold one unprimed entry per cell");
        rows.back().push_back(box.front().value);
      }
    }
    return IncreasingShiftedTableau(std::move(rows));
  });
}

Json to_json(const Board& b) {
  Json cells = Json::array();
  for (const auto& [c, l] : b) {
    Json label;
    if (auto* v = std::get_if<Value>(&l))
      label = {{"v", v->v}};
    else if (auto* m = std::get_if<Marker>(&l))
      label = {{"marker", m->m}};
    else
      label = "hole";
    cells.push_back({{"row", c.row}, {"col", c.col}, {"label", label}});
  }
  return {{"schema", kBoardSchema}, {"cells", cells}};
}

Board board_from_json(const Json& j) {
  return wrap([&] {
    check_schema(j, kBoardSchema);
    Board b;
    for (const auto& c : field(j, "cells")) {
      const Cell cell{json_int(field(c, "row"), "row"), json_int(field(c, "col"), "col")};
      if (cell.row < 1 || cell.col < cell.row) throw ParseError("cell outside the shifted plane");
      const Json& l = field(c, "label");
      Label label;
      if (l == "hole")
        label = Hole{};
      else if (l.is_object() && l.contains("v"))
        label = Value{json_int(l.at("v"), "value")};
      else if (l.is_object() && l.contains("marker"))
        label = Marker{json_int(l.at("marker"), "marker")};
      else
        throw ParseError("unknown label " + l.dump());
      if (!b.emplace(cell, label).second) throw ParseError("duplicate cell");
    }
    return b;
  });
}

Json word_json(const Word& w) { return {{"schema", kWordSchema}, {"word", w}}; }

Word word_from_json(const Json& j) {
  return wrap([&] {
    check_schema(j, kWordSchema);
    Word w = json_ints(field(j, "word"), "word");
    validate_word(w);
    return w;
  });
}

Json to_json(const EquivalenceCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps)
    steps.push_back({{"rule", s.rule}, {"pos", s.pos}, {"dir", s.forward ? "forward" : "backward"}});
  return {{"schema", kCertificateSchema}, {"source", c.source}, {"target", c.target}, {"steps", steps}};
}

EquivalenceCertificate certificate_from_json(const Json& j) {
  return wrap([&] {
    check_schema(j, kCertificateSchema);
    EquivalenceCertificate c;
    c.source = json_ints(field(j, "source"), "source");
    c.target = json_ints(field(j, "target"), "target");
    for (const auto& s : field(j, "steps")) {
      const Json& dir = field(s, "dir");
      if (dir != "forward" && dir != "backward") throw ParseError("dir must be forward or backward");
      c.steps.push_back({json_int(field(s, "rule"), "rule"), json_int(field(s, "pos"), "pos"), dir == "forward"});
    }
    return c;
  });
}

Json to_json(const TruncatedPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json coef;
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      coef = static_cast<long long>(c);
    else
      coef = c.str();
    terms.push_back({{"exp", e}, {"coef", coef}});
  }
  return {{"schema", kPolynomialSchema}, {"nvars", p.nvars()}, {"maxdeg", p.maxdeg()}, {"terms", terms}};
}

TruncatedPolynomial polynomial_from_json(const Json& j) {
  return wrap([&] {
    check_schema(j, kPolynomialSchema);
    TruncatedPolynomial p(json_int(field(j, "nvars"), "nvars"), json_int(field(j, "maxdeg"), "maxdeg"));
    for (const auto& t : field(j, "terms")) {
      const Json& c = field(t, "coef");
      Integer coef;
      if (c.is_number_integer())
        coef = c.get<long long>();
      else if (c.is_string())
        coef = Integer(c.get<std::string>());
      else
        throw ParseError("coef must be an integer or a decimal string");
      p.add_term(json_ints(field(t, "exp"), "exp"), coef);
    }
    return p;
  });
}

Json lr_json(const StrictPartition& lambda, const StrictPartition& mu, const LRTable& t) {
  std::vector<std::pair<StrictPartition, long long>> rows(t.begin(), t.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return graded_before(a.first, b.first); });
  Json coeffs = Json::array();
  for (const auto& [nu, c] : rows) coeffs.push_back({{"nu", shape_json(nu)}, {"c", c}});
  return {{"schema", kLRSchema}, {"lambda", shape_json(lambda)}, {"mu", shape_json(mu)}, {"coeffs", coeffs}};
}

LRTable lr_from_json(const Json& j) {
  return wrap([&] {
    check_schema(j, kLRSchema);
    LRTable t;
    for (const auto& row : field(j, "coeffs")) {
      const Json& c = field(row, "c");
      if (!c.is_number_integer() || c.get<long long>() < 1) throw ParseError("coefficients must be positive");
      t[StrictPartition(json_ints(field(row, "nu"), "nu"))] = c.get<long long>();
    }
    return t;
  });
}

SwitchSequence switches_from_json(const Json& j) {
  return wrap([&] {
    check_schema(j, kSwitchesSchema);
    SwitchSequence s;
    for (const auto& p : field(j, "switches")) {
      const auto v = json_ints(p, "switch");
      if (v.size() != 2) throw ParseError("a switch is a [marker, value] pair");
      s.emplace_back(v[0], v[1]);
    }
    return s;
  });
}

Json parse_json(const std::string& s) {
  try {
    return Json::parse(s);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<int> parse_partition(const std::string& s) {
  std::vector<int> parts;
  if (trim(s).empty()) return parts;
  for (const auto& tok : split(s, ',')) parts.push_back(parse_int(tok, "part"));
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] <= 0 || (i && parts[i] > parts[i - 1])) throw ParseError("not a partition: " + s);
  return parts;
}

StrictPartition parse_shape(const std::string& s) {
  return wrap([&] { return StrictPartition(parse_partition(s)); });
}

IncreasingShiftedTableau parse_tableau_arg(const std::string& s) {
  const std::string t = trim(s);
  if (!t.empty() && t.front() == '{') return tableau_from_json(parse_json(t));
  return tableau_from_text(t);
}

}  // namespace shk::io
