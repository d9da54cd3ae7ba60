#pragma once

// JSON formats for matrices, algebras, modules, Laurent polynomials and
// silting records. Vertices and mutation indices are one-based on disk.
// Exact numbers are written as integers or "p/q" strings; never floats.

#include <string>

#include <nlohmann/json.hpp>

#include "cvec/algebra.hpp"
#include "cvec/laurent.hpp"
#include "cvec/modrep.hpp"
#include "cvec/mutation.hpp"
#include "cvec/silting.hpp"

namespace cvec {

using Json = nlohmann::json;

// Parses text, reporting line and column of syntax errors as ParseError.
Json parse_json(const std::string& text, const std::string& source = "input");
Json read_json_file(const std::string& path);

Rational parse_rational(const Json& j, const std::string& field);
std::string format_rational(const Rational& q);

Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j, const std::string& field);

// {"n": rank, "rows": [[...], ...]}; rows may be n x n or m x n.
struct MatrixFile {
  IntMatrix rows;
  std::size_t n = 0;
  bool square() const { return rows.rows() == n; }
  // Square input gets principal framing; taller input is used as is.
  ExtendedExchangeMatrix extended() const;
};
MatrixFile matrix_file_from_json(const Json& j);
Json to_json(const MatrixFile& m);

AlgebraPresentation algebra_from_json(const Json& j);
Json to_json(const AlgebraPresentation& p);

Representation module_from_json(const AlgebraPtr& alg, const Json& j);
Json to_json(const Representation& m);

Json to_json(const LaurentPoly& p);
Json algebra_element_to_json(const PathBasis& b, const AlgElement& x);
Json to_json(const SiltingRecord& r);

Json one_based(const std::vector<std::size_t>& word);
Json to_json(const IntVector& v);

}  // namespace cvec
