#include "cvec/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cvec {

Quiver::Quiver(std::size_t vertices, std::vector<Arrow> arrows) : vertices_(vertices), arrows_(std::move(arrows)) {
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (a.source >= vertices_ || a.target >= vertices_)
      throw IndexOutOfRange("arrow '" + a.name + "' has an endpoint out of range");
    if (a.name.empty()) throw NotAdmissible("arrow with empty name");
    if (!names.insert(a.name).second) throw NotAdmissible("duplicate arrow name '" + a.name + "'");
  }
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::longest_path() const {
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> state(vertices_, 0);
  std::vector<std::size_t> depth(vertices_, 0);
  bool cyclic = false;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    state[v] = 1;
    for (const auto& a : arrows_) {
      if (a.source != v) continue;
      if (state[a.target] == 1) {
        cyclic = true;
        continue;
      }
      if (state[a.target] == 0) visit(a.target);
      depth[v] = std::max(depth[v], depth[a.target] + 1);
    }
    state[v] = 2;
  };
  for (std::size_t v = 0; v < vertices_; ++v)
    if (state[v] == 0) visit(v);
  if (cyclic) return std::nullopt;
  std::size_t best = 0;
  for (auto d : depth) best = std::max(best, d);
  return best;
}

AlgebraPresentation opposite(const AlgebraPresentation& p) {
  std::vector<Arrow> arrows;
  for (const auto& a : p.quiver.arrows()) arrows.push_back({a.name, a.target, a.source});
  AlgebraPresentation op{Quiver(p.quiver.vertex_count(), std::move(arrows)), {}, p.nilpotency_bound};
  for (const auto& rel : p.relations) {
    Relation r;
    for (const auto& t : rel) r.push_back({t.coeff, {t.path.rbegin(), t.path.rend()}});
    op.relations.push_back(std::move(r));
  }
  return op;
}

namespace {

using PathKey = std::pair<std::size_t, std::vector<std::size_t>>;

PathKey key_of(const Path& p) { return {p.source, p.arrows}; }

std::vector<std::string> names_of(const Quiver& q, const Path& p) {
  std::vector<std::string> out;
  for (auto a : p.arrows) out.push_back(q.arrow(a).name);
  return out;
}

Path resolve(const Quiver& q, const std::vector<std::string>& names) {
  if (names.empty()) throw NotAdmissible("relation term with an empty path");
  Path p;
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto idx = q.arrow_index(names[i]);
    if (!idx) throw NotAdmissible("unknown arrow '" + names[i] + "' in relation");
    const Arrow& a = q.arrow(*idx);
    if (i == 0) p.source = a.source;
    else if (q.arrow(p.arrows.back()).target != a.source)
      throw NotAdmissible("relation path is not composable at arrow '" + names[i] + "'");
    p.arrows.push_back(*idx);
    p.target = a.target;
  }
  return p;
}

Path concat(const Path& a, const Path& b) {
  Path p{a.source, b.target, a.arrows};
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return p;
}

}  // namespace

PathBasis::PathBasis(const AlgebraPresentation& pres) : quiver_(pres.quiver), vertices_(pres.quiver.vertex_count()) {
  const Quiver& q = quiver_;

  struct ResolvedRelation {
    std::vector<std::pair<Rational, Path>> terms;
    std::size_t source, target, min_length;
  };
  std::vector<ResolvedRelation> rels;
  for (const auto& rel : pres.relations) {
    if (rel.empty()) throw NotAdmissible("empty relation");
    ResolvedRelation rr{{}, 0, 0, SIZE_MAX};
    for (std::size_t t = 0; t < rel.size(); ++t) {
      Path p = resolve(q, rel[t].path);
      if (p.length() < 2) throw NotAdmissible("relation term of length < 2");
      if (t == 0) {
        rr.source = p.source;
        rr.target = p.target;
      } else if (p.source != rr.source || p.target != rr.target) {
        throw NotAdmissible("relation terms have different endpoints");
      }
      rr.min_length = std::min(rr.min_length, p.length());
      rr.terms.emplace_back(rel[t].coeff, std::move(p));
    }
    rels.push_back(std::move(rr));
  }

  if (pres.nilpotency_bound) {
    bound_ = *pres.nilpotency_bound;
    if (bound_ < 1) throw NotAdmissible("nilpotency bound must be at least 1");
  } else if (q.arrows().empty()) {
    bound_ = 1;
  } else if (auto longest = q.longest_path(); longest && pres.relations.empty()) {
    bound_ = *longest + 1;
  } else {
    throw NotAdmissible("a nilpotency bound is required for quivers with cycles or relations");
  }

  // All paths of length < bound, grouped by endpoints.
  std::vector<Path> paths;
  for (std::size_t v = 0; v < vertices_; ++v) paths.push_back({v, v, {}});
  for (std::size_t start = 0; start < paths.size(); ++start) {
    if (paths[start].length() + 1 >= bound_) continue;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      if (q.arrow(a).source != paths[start].target) continue;
      Path p = paths[start];
      p.arrows.push_back(a);
      p.target = q.arrow(a).target;
      paths.push_back(std::move(p));
    }
  }

  // Elimination order within a block: longer paths first, then
  // lexicographic on arrow names. Pivots are rewritten as combinations of
  // the remaining (standard) paths.
  auto elimination_less = [&](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return names_of(q, a) < names_of(q, b);
  };
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Path>> block_paths;
  for (const auto& p : paths) block_paths[{p.source, p.target}].push_back(p);
  for (auto& [k, v] : block_paths) std::sort(v.begin(), v.end(), elimination_less);

  // Generators u r v of the ideal, truncated to length < bound.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::map<PathKey, Rational>>> generators;
  for (const auto& r : rels) {
    for (const auto& u : paths) {
      if (u.target != r.source || u.length() + r.min_length >= bound_) continue;
      for (const auto& w : paths) {
        if (w.source != r.target || u.length() + w.length() + r.min_length >= bound_) continue;
        std::map<PathKey, Rational> elem;
        for (const auto& [c, p] : r.terms) {
          if (u.length() + p.length() + w.length() >= bound_) continue;
          Path full = concat(concat(u, p), w);
          elem[key_of(full)] += c;
        }
        std::erase_if(elem, [](const auto& kv) { return kv.second == 0; });
        if (!elem.empty()) generators[{u.source, w.target}].push_back(std::move(elem));
      }
    }
  }

  std::vector<Path> standard;
  std::map<PathKey, std::vector<std::pair<Rational, PathKey>>> rewrites;  // pivot -> combination of standard
  for (const auto& [block, bpaths] : block_paths) {
    std::map<PathKey, std::size_t> column;
    for (std::size_t c = 0; c < bpaths.size(); ++c) column[key_of(bpaths[c])] = c;
    std::vector<bool> pivot(bpaths.size(), false);
    auto git = generators.find(block);
    if (git != generators.end()) {
      RatMatrix m(git->second.size(), bpaths.size());
      for (std::size_t r = 0; r < git->second.size(); ++r)
        for (const auto& [k, c] : git->second[r]) m(r, column.at(k)) = c;
      Echelon e = row_reduce(m);
      for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        pivot[e.pivots[r]] = true;
        std::vector<std::pair<Rational, PathKey>> comb;
        for (std::size_t c = e.pivots[r] + 1; c < bpaths.size(); ++c)
          if (e.rref(r, c) != 0) comb.emplace_back(-e.rref(r, c), key_of(bpaths[c]));
        rewrites[key_of(bpaths[e.pivots[r]])] = std::move(comb);
      }
    }
    for (std::size_t c = 0; c < bpaths.size(); ++c)
      if (!pivot[c]) standard.push_back(bpaths[c]);
  }

  std::sort(standard.begin(), standard.end(), [&](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.source != b.source) return a.source < b.source;
    if (a.target != b.target) return a.target < b.target;
    return names_of(q, a) < names_of(q, b);
  });
  elements_ = std::move(standard);

  blocks_.assign(vertices_ * vertices_, {});
  std::map<PathKey, std::size_t> index;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    blocks_[elements_[i].source * vertices_ + elements_[i].target].push_back(i);
    index[key_of(elements_[i])] = i;
  }
  for (const auto& p : paths) {
    AlgElement nf(elements_.size());
    auto it = index.find(key_of(p));
    if (it != index.end()) {
      nf[it->second] = 1;
    } else {
      for (const auto& [c, k] : rewrites.at(key_of(p))) nf[index.at(k)] += c;
    }
    normal_forms_.emplace(key_of(p), std::move(nf));
  }

  const std::size_t dim = elements_.size();
  table_.assign(dim * dim, {});
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (elements_[i].target != elements_[j].source) continue;
      AlgElement nf = normal_form(concat(elements_[i], elements_[j]));
      for (std::size_t k = 0; k < dim; ++k)
        if (nf[k] != 0) table_[i * dim + j].emplace_back(k, nf[k]);
    }
  }
}

const std::vector<std::size_t>& PathBasis::between(std::size_t from, std::size_t to) const {
  if (from >= vertices_ || to >= vertices_) throw IndexOutOfRange("vertex index out of range");
  return blocks_[from * vertices_ + to];
}

AlgElement PathBasis::unit(std::size_t i) const {
  AlgElement x(dimension());
  x.at(i) = 1;
  return x;
}

AlgElement PathBasis::normal_form(const Path& p) const {
  if (p.length() >= bound_) return zero();
  auto it = normal_forms_.find(key_of(p));
  if (it == normal_forms_.end()) throw Error("normal_form: not a path of this quiver");
  return it->second;
}

AlgElement PathBasis::multiply(const AlgElement& x, const AlgElement& y) const {
  const std::size_t dim = dimension();
  if (x.size() != dim || y.size() != dim) throw DimensionMismatch("algebra element of wrong length");
  AlgElement out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const auto& prod = table_[i * dim + j];
      if (prod.empty()) continue;
      Rational c = x[i] * y[j];
      for (const auto& [k, v] : prod) out[k] += c * v;
    }
  }
  return out;
}

std::string PathBasis::path_label(const Path& p) const {
  if (p.arrows.empty()) return "e" + std::to_string(p.source + 1);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) s += (i ? "*" : "") + quiver_.arrow(p.arrows[i]).name;
  return s;
}

std::string PathBasis::label(std::size_t i) const { return path_label(element(i)); }

PathBasis build_basis(const AlgebraPresentation& p) { return PathBasis(p); }

std::vector<std::size_t> hom_proj(const PathBasis& b, std::size_t i, std::size_t j) {
  if (i >= b.vertex_count() || j >= b.vertex_count()) throw IndexOutOfRange("projective index out of range");
  return b.between(j, i);
}

Algebra::Algebra(Token, AlgebraPresentation p) : presentation_(std::move(p)), basis_(presentation_) {}

AlgebraPtr Algebra::create(AlgebraPresentation p) { return std::make_shared<const Algebra>(Token{}, std::move(p)); }

AlgebraPtr Algebra::opposite() const {
  std::lock_guard lock(opposite_mutex_);
  if (auto parent = parent_.lock()) return parent;
  if (!opposite_) {
    auto op = std::make_shared<Algebra>(Token{}, cvec::opposite(presentation_));
    op->parent_ = weak_from_this();
    opposite_ = std::move(op);
  }
  return opposite_;
}

AlgElement Algebra::to_opposite(const AlgElement& x) const {
  AlgebraPtr op = opposite();
  const PathBasis& ob = op->basis();
  AlgElement out = ob.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const Path& p = basis_.element(i);
    Path rev{p.target, p.source, {p.arrows.rbegin(), p.arrows.rend()}};
    AlgElement nf = ob.normal_form(rev);
    for (std::size_t k = 0; k < nf.size(); ++k)
      if (nf[k] != 0) out[k] += x[i] * nf[k];
  }
  return out;
}

}  // namespace cvec
