// SPDX-License-Identifier: Apache-2.0
//
// Text and JSON encodings. Every JSON document carries a "schema" field.

#pragma once

#include <string>

#include <json.hpp>

#include "shk/core.hpp"
#include "shk/equivalence.hpp"
#include "shk/kjdt.hpp"
#include "shk/skpr.hpp"
#include "shk/symfun.hpp"

namespace shk::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kTableauSchema = "shk.tableau/1";
inline constexpr const char* kBoardSchema = "shk.board/1";
inline constexpr const char* kWordSchema = "shk.word/1";
inline constexpr const char* kCertificateSchema = "shk.certificate/1";
inline constexpr const char* kPolynomialSchema = "shk.polynomial/1";
inline constexpr const char* kLRSchema = "shk.lr/1";
inline constexpr const char* kSwitchesSchema = "shk.switches/1";

// Tableau text: one line per row, row i led by i-1 tabs, cells separated by
// tabs, primes as a trailing apostrophe, multi-entry cells as {a,b'}.
std::string to_text(const IncreasingShiftedTableau& t);
std::string to_text(const SetValuedTableau& t);
std::string to_text(const SkewTableau& t);
std::string to_text(const Board& b);
IncreasingShiftedTableau tableau_from_text(const std::string& s);
SetValuedTableau set_valued_from_text(const std::string& s);

Json to_json(const IncreasingShiftedTableau& t);
Json to_json(const SetValuedTableau& t);
Json to_json(const Board& b);
Json word_json(const Word& w);
Json to_json(const EquivalenceCertificate& c);
Json to_json(const TruncatedPolynomial& p);
Json lr_json(const StrictPartition& lambda, const StrictPartition& mu, const LRTable& t);

// Parsers throw ParseError on malformed input, including a wrong schema.
IncreasingShiftedTableau tableau_from_json(const Json& j);
SetValuedTableau set_valued_from_json(const Json& j);
Board board_from_json(const Json& j);
Word word_from_json(const Json& j);
EquivalenceCertificate certificate_from_json(const Json& j);
TruncatedPolynomial polynomial_from_json(const Json& j);
LRTable lr_from_json(const Json& j);
SwitchSequence switches_from_json(const Json& j);

Json parse_json(const std::string& s);

/// Shapes as "4,2,1"; the empty string is the empty shape.
StrictPartition parse_shape(const std::string& s);
std::vector<int> parse_partition(const std::string& s);

/// Tableau given inline: JSON when it starts with '{', else the text format
/// with rows separated by newlines or '/'.
IncreasingShiftedTableau parse_tableau_arg(const std::string& s);

}  // namespace shk::io
