#include "cvec/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace cvec {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

const Json& require(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(field + "." + key, "missing");
  return *it;
}

std::size_t require_count(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Integer parse_integer(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    static const std::regex re("-?[0-9]+");
    if (!std::regex_match(j.get<std::string>(), re)) fail(field, "expected an integer, got \"" + j.get<std::string>() + "\"");
    return Integer(j.get<std::string>());
  }
  fail(field, "expected an integer");
}

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_json(os.str(), path);
}

Rational parse_rational(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(parse_integer(j, field));
  if (!j.is_string()) fail(field, "expected an exact rational (integer or \"p/q\" string)");
  static const std::regex re("-?[0-9]+(/[0-9]+)?");
  const std::string s = j.get<std::string>();
  if (!std::regex_match(s, re)) fail(field, "malformed rational \"" + s + "\"");
  Rational q(s);
  if (q.get_den() == 0) fail(field, "zero denominator");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

IntMatrix int_matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of rows");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) fail(f, "expected an array");
    IntVector row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(parse_integer(j[i][k], f + "[" + std::to_string(k) + "]"));
    if (!rows.empty() && row.size() != rows.front().size()) fail(f, "row length differs from row 0");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return IntMatrix();
  return IntMatrix::from_rows(rows);
}

ExtendedExchangeMatrix MatrixFile::extended() const {
  if (square()) return principal_framing(rows);
  return ExtendedExchangeMatrix(rows, n);
}

MatrixFile matrix_file_from_json(const Json& j) {
  MatrixFile m;
  m.n = require_count(require(j, "n", "matrix"), "matrix.n");
  m.rows = int_matrix_from_json(require(j, "rows", "matrix"), "matrix.rows");
  if (m.n == 0) fail("matrix.n", "rank must be positive");
  if (m.rows.cols() != m.n) fail("matrix.rows", "expected " + std::to_string(m.n) + " columns");
  if (m.rows.rows() < m.n) fail("matrix.rows", "expected at least n rows");
  try {
    (void)m.extended();
  } catch (const NotSkewSymmetrizable&) {
    fail("matrix.rows", "principal part is not skew-symmetrizable");
  }
  return m;
}

Json to_json(const MatrixFile& m) { return Json{{"n", m.n}, {"rows", to_json(m.rows)}}; }

AlgebraPresentation algebra_from_json(const Json& j) {
  const std::size_t n = require_count(require(j, "vertices", "algebra"), "algebra.vertices");
  const Json& arrows = require(j, "arrows", "algebra");
  if (!arrows.is_array()) fail("algebra.arrows", "expected an array");
  std::vector<Arrow> list;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string f = "algebra.arrows[" + std::to_string(i) + "]";
    const Json& name = require(arrows[i], "name", f);
    if (!name.is_string()) fail(f + ".name", "expected a string");
    const std::size_t s = require_count(require(arrows[i], "source", f), f + ".source");
    const std::size_t t = require_count(require(arrows[i], "target", f), f + ".target");
    if (s < 1 || s > n) fail(f + ".source", "vertex out of range 1.." + std::to_string(n));
    if (t < 1 || t > n) fail(f + ".target", "vertex out of range 1.." + std::to_string(n));
    list.push_back({name.get<std::string>(), s - 1, t - 1});
  }
  AlgebraPresentation p;
  try {
    p.quiver = Quiver(n, std::move(list));
  } catch (const Error& e) {
    fail("algebra.arrows", e.what());
  }
  if (j.contains("relations")) {
    const Json& rels = j["relations"];
    if (!rels.is_array()) fail("algebra.relations", "expected an array");
    for (std::size_t r = 0; r < rels.size(); ++r) {
      const std::string f = "algebra.relations[" + std::to_string(r) + "]";
      if (!rels[r].is_array()) fail(f, "expected an array of terms");
      Relation rel;
      for (std::size_t k = 0; k < rels[r].size(); ++k) {
        const std::string ft = f + "[" + std::to_string(k) + "]";
        PathTerm term;
        term.coeff = parse_rational(require(rels[r][k], "coeff", ft), ft + ".coeff");
        const Json& path = require(rels[r][k], "path", ft);
        if (!path.is_array()) fail(ft + ".path", "expected an array of arrow names");
        for (const auto& a : path) {
          if (!a.is_string()) fail(ft + ".path", "expected arrow names");
          term.path.push_back(a.get<std::string>());
        }
        rel.push_back(std::move(term));
      }
      p.relations.push_back(std::move(rel));
    }
  }
  if (j.contains("nilpotency_bound") && !j["nilpotency_bound"].is_null())
    p.nilpotency_bound = require_count(j["nilpotency_bound"], "algebra.nilpotency_bound");
  return p;
}

Json to_json(const AlgebraPresentation& p) {
  Json arrows = Json::array();
  for (const auto& a : p.quiver.arrows())
    arrows.push_back(Json{{"name", a.name}, {"source", a.source + 1}, {"target", a.target + 1}});
  Json rels = Json::array();
  for (const auto& rel : p.relations) {
    Json r = Json::array();
    for (const auto& t : rel) r.push_back(Json{{"coeff", format_rational(t.coeff)}, {"path", t.path}});
    rels.push_back(std::move(r));
  }
  Json bound = p.nilpotency_bound ? Json(*p.nilpotency_bound) : Json(nullptr);
  return Json{{"vertices", p.quiver.vertex_count()}, {"arrows", arrows}, {"relations", rels}, {"nilpotency_bound", bound}};
}

Representation module_from_json(const AlgebraPtr& alg, const Json& j) {
  const Quiver& q = alg->presentation().quiver;
  const Json& dims_j = require(j, "dims", "module");
  if (!dims_j.is_array() || dims_j.size() != q.vertex_count())
    fail("module.dims", "expected " + std::to_string(q.vertex_count()) + " dimensions");
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < dims_j.size(); ++v) dims.push_back(require_count(dims_j[v], "module.dims[" + std::to_string(v) + "]"));
  const Json& maps_j = require(j, "maps", "module");
  if (!maps_j.is_object()) fail("module.maps", "expected an object keyed by arrow name");
  for (auto it = maps_j.begin(); it != maps_j.end(); ++it)
    if (!q.arrow_index(it.key())) fail("module.maps." + it.key(), "unknown arrow");
  std::vector<RatMatrix> maps;
  for (const auto& a : q.arrows()) {
    const std::string f = "module.maps." + a.name;
    RatMatrix m(dims[a.target], dims[a.source]);
    auto it = maps_j.find(a.name);
    if (it != maps_j.end()) {
      const Json& rows = *it;
      const bool empty_ok = m.rows() == 0 || m.cols() == 0;
      if (!rows.is_array() || (rows.size() != m.rows() && !(empty_ok && rows.empty())))
        fail(f, "expected " + std::to_string(m.rows()) + " rows");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string fr = f + "[" + std::to_string(r) + "]";
        if (!rows[r].is_array() || rows[r].size() != m.cols()) fail(fr, "expected " + std::to_string(m.cols()) + " entries");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_rational(rows[r][c], fr + "[" + std::to_string(c) + "]");
      }
    } else if (m.rows() != 0 && m.cols() != 0) {
      fail(f, "missing");
    }
    maps.push_back(std::move(m));
  }
  try {
    return Representation(alg, std::move(dims), std::move(maps));
  } catch (const InvalidRepresentation& e) {
    fail("module", e.what());
  }
}

Json to_json(const Representation& m) {
  const Quiver& q = m.algebra()->presentation().quiver;
  Json maps = Json::object();
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const RatMatrix& x = m.map(a);
    Json rows = Json::array();
    for (std::size_t r = 0; r < x.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(format_rational(x(r, c)));
      rows.push_back(std::move(row));
    }
    maps[q.arrow(a).name] = std::move(rows);
  }
  return Json{{"dims", m.dims()}, {"maps", maps}};
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json{{"exp", e}, {"coeff", c.get_str()}});
  return out;
}

Json algebra_element_to_json(const PathBasis& b, const AlgElement& x) {
  Json out = Json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const Path& p = b.element(i);
    std::vector<std::string> names;
    for (auto a : p.arrows) names.push_back(b.quiver().arrow(a).name);
    Json term{{"coeff", format_rational(x[i])}, {"path", names}};
    if (names.empty()) term["vertex"] = p.source + 1;
    out.push_back(std::move(term));
  }
  return out;
}

Json one_based(const std::vector<std::size_t>& word) {
  Json out = Json::array();
  for (auto k : word) out.push_back(k + 1);
  return out;
}

Json to_json(const SiltingRecord& r) {
  const ProjMap& d = r.complex.differential();
  const PathBasis& b = r.complex.algebra()->basis();
  Json diff = Json::array();
  for (std::size_t row = 0; row < d.target().size(); ++row) {
    Json line = Json::array();
    for (std::size_t c = 0; c < d.source().size(); ++c) line.push_back(algebra_element_to_json(b, d.at(row, c)));
    diff.push_back(std::move(line));
  }
  // Rows and columns of the differential follow the summand orders.
  Json p1 = Json::array(), p0 = Json::array();
  for (auto v : d.source()) p1.push_back(v + 1);
  for (auto v : d.target()) p0.push_back(v + 1);
  const std::size_t n = r.complex.algebra()->vertex_count();
  return Json{{"P1", to_json(multiplicities(d.source(), n))},
              {"P0", to_json(multiplicities(d.target(), n))},
              {"P1_summands", p1},
              {"P0_summands", p0},
              {"differential", diff},
              {"g_matrix", to_json(r.g_matrix)},
              {"c_matrix", to_json(r.c_matrix)},
              {"word", one_based(r.word)}};
}

}  // namespace cvec
