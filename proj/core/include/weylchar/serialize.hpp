#pragma once

// JSON, TSV and DOT formats. This is the only layer where indices become
// 1-based: tableau cells, letters and operator labels are written and read
// with rows, columns, components and letters counted from 1.
//
// Writers produce compact single-line JSON with a fixed key order, so equal
// values always serialize to identical bytes. Integers of any size are
// written in decimal; the reader accepts integers beyond 64 bits and rejects
// every number with a fraction or exponent.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "weylchar/crystal.hpp"
#include "weylchar/factorization.hpp"
#include "weylchar/integer.hpp"
#include "weylchar/multiplicity.hpp"
#include "weylchar/shapes.hpp"
#include "weylchar/symfunc.hpp"
#include "weylchar/tableaux.hpp"

namespace weylchar {

using Json = nlohmann::ordered_json;

// Throws InputError on malformed JSON or non-integer numbers. Integers too
// large for 64 bits are kept as strings tagged with big_integer_tag.
Json parse_json(std::string_view text);
inline constexpr std::string_view big_integer_tag = "\x01int:";

BigInt bigint_from_json(const Json& j);
int int_from_json(const Json& j, const char* what);

Partition partition_from_json(const Json& j);
MultiPartition multipartition_from_json(const Json& j);
MultiPartition parse_multipartition(std::string_view text);
// Row k must have exactly m_k entries.
MultiComposition multicomposition_from_json(const Json& j, const ShapeBound& bound);
// A comma separated list such as "2,2".
ShapeBound parse_bound(std::string_view text);
Grouping parse_grouping(std::string_view text);

Json to_json(const Partition& p);
Json to_json(const MultiPartition& mp);
Json to_json(const MultiComposition& mc);
Json to_json(const CrystalWord& w);
Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);
CrystalWord word_from_json(const Json& j);

std::string dump(const Json& j);

// {n, r, m, order, rows}.
std::string write_matrix_json(const IndexedMatrix& m);
std::string write_matrix_json(const BetaMatrix& b);
// Header line of index labels, then one labelled line per row.
std::string write_matrix_tsv(const IndexedMatrix& m);
IndexedMatrix parse_matrix(std::string_view text);

// {basis, degree, terms: [{index, coeff}]}.
std::string write_expansion(const SchurExpansion& e);
std::string write_expansion(const MonomialPoly& p);

std::string write_conjecture_report(const ConjectureReport& report);
std::string write_factorization_report(const FactorizationReport& report, const IndexedMatrix& index);

// Nodes are serialized tableaux, edges are labelled f(i,k), and each
// component is a cluster labelled by its highest weight.
std::string write_crystal_dot(const CrystalGraph& g);
// [{highest_weight, size}].
std::string write_crystal_summary(const CrystalGraph& g);

}  // namespace weylchar
