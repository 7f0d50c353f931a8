#pragma once

#include <functional>

#include <nlohmann/json.hpp>

#include "nilcone/ccmap.hpp"
#include "nilcone/jordan.hpp"

namespace nilcone {

using nlohmann::json;

// JSON encodings: Partition [2,1]; class [r,d]; HNType and JordanType
// [[r,d],...]; ComponentLabel {"hn":...,"lambda":...};
// IntegerMatrix {"order":[...],"rows":[[...]]}.  Matrix entries that exceed
// 64 bits are emitted as decimal strings.

json json_partition(const Partition& p);
json json_class(const ClassVector& a);
json json_hn(const HNType& h);
json json_multipartition(const MultiPartition& mp);
json json_component(const ComponentLabel& c);
json json_jordan(const JordanType& j);
json json_matrix(const IntegerMatrix& m);
json json_cc_block(const CCBlock& b);
json json_truncated(const TruncatedCCMatrix& t);

// Parsers; all throw ParseError on malformed input.
json parse_json(const std::string& text);
ClassVector parse_class(const std::string& text); // "r,d"
Partition partition_from_json(const json& v);
ClassVector class_from_json(const json& v);
HNType hn_from_json(const json& v);
MultiPartition multipartition_from_json(const json& v);
ComponentLabel component_from_json(const json& v);
std::vector<ClassVector> class_list_from_json(const json& v);
IntegerMatrix matrix_from_json(const json& v);

/// CSV: one header line of column labels, then one line of entries per row.
std::string csv_matrix(const IntegerMatrix& m);
/// Same layout over the truncation; unknown entries render as "?".
std::string csv_truncated(const TruncatedCCMatrix& t);

/// DOT digraph of the Hasse reduction of a finite poset given by `leq` on
/// node indices; deterministic node order, transitive edges removed.
std::string export_hasse(const std::vector<std::string>& labels,
                         const std::function<bool(std::size_t, std::size_t)>& leq);

} // namespace nilcone
