#include "cvec/fixtures.hpp"

namespace cvec {

std::vector<std::string> matrix_fixture_names() { return {"a2", "a3", "b2", "kronecker", "markov"}; }

IntMatrix fixture_matrix(const std::string& name) {
  if (name == "a2") return IntMatrix{{0, 1}, {-1, 0}};
  if (name == "a3") return IntMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
  if (name == "b2") return IntMatrix{{0, 1}, {-2, 0}};
  if (name == "kronecker") return IntMatrix{{0, 2}, {-2, 0}};
  if (name == "markov") return IntMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}};
  throw Error("unknown matrix fixture: " + name);
}

std::vector<std::string> algebra_fixture_names() { return {"a2", "a3", "kronecker", "nakayama3"}; }

AlgebraPresentation linear_path_algebra(std::size_t n) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
  return AlgebraPresentation{Quiver(n, std::move(arrows)), {}, std::nullopt};
}

AlgebraPresentation cyclic_nakayama(std::size_t n) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i) arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % n});
  std::vector<Relation> rels;
  for (std::size_t i = 0; i < n; ++i)
    rels.push_back({PathTerm{1, {arrows[i].name, arrows[(i + 1) % n].name}}});
  return AlgebraPresentation{Quiver(n, std::move(arrows)), std::move(rels), 2};
}

AlgebraPresentation fixture_algebra(const std::string& name) {
  if (name == "a2") return linear_path_algebra(2);
  if (name == "a3") return linear_path_algebra(3);
  if (name == "kronecker") return AlgebraPresentation{Quiver(2, {{"a", 0, 1}, {"b", 0, 1}}), {}, std::nullopt};
  if (name == "nakayama3") return cyclic_nakayama(3);
  throw Error("unknown algebra fixture: " + name);
}

IntMatrix cartan_a(std::size_t n) {
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i) = 2;
    if (i + 1 < n) c(i, i + 1) = c(i + 1, i) = -1;
  }
  return c;
}

Representation interval_module(const AlgebraPtr& alg, std::size_t i, std::size_t j) {
  const Quiver& q = alg->presentation().quiver;
  if (i > j || j >= q.vertex_count()) throw IndexOutOfRange("interval out of range");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (std::size_t v = i; v <= j; ++v) dims[v] = 1;
  std::vector<RatMatrix> maps;
  for (const auto& a : q.arrows()) {
    RatMatrix m(dims[a.target], dims[a.source]);
    if (dims[a.source] == 1 && dims[a.target] == 1) m(0, 0) = 1;
    maps.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(maps));
}

std::vector<NamedModule> fixture_modules(const AlgebraPtr& alg, const std::string& name) {
  std::vector<NamedModule> out;
  const std::size_t n = alg->vertex_count();
  if (name == "a2" || name == "a3") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        out.push_back({"M" + std::to_string(i + 1) + std::to_string(j + 1), interval_module(alg, i, j)});
    return out;
  }
  if (name == "nakayama3") {
    for (std::size_t i = 0; i < n; ++i) out.push_back({"S" + std::to_string(i + 1), simple(alg, i)});
    for (std::size_t i = 0; i < n; ++i) out.push_back({"P" + std::to_string(i + 1), projective(alg, i)});
    return out;
  }
  throw Error("no module fixtures for " + name);
}

}  // namespace cvec
