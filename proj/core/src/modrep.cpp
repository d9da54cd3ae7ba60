#include "cvec/modrep.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace cvec {

namespace {

RatVector unit_rat(std::size_t n, std::size_t i) {
  RatVector v(n);
  v.at(i) = 1;
  return v;
}

RatMatrix select_columns(const RatMatrix& m, const std::vector<std::size_t>& cols) {
  RatMatrix out(m.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, cols[j]);
  return out;
}

// Independent columns spanning the column space of m.
RatMatrix column_basis(const RatMatrix& m) { return select_columns(m, extending_columns(RatMatrix(m.rows(), 0), m)); }

Rational trace(const RatMatrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

void check_algebra(const Representation& a, const Representation& b) {
  if (!a.algebra()->same_as(*b.algebra())) throw AlgebraMismatch("modules over different algebras");
}

// Row offsets of the basis of (P_S) e_w, keyed by (summand, basis index).
std::vector<std::map<std::size_t, std::size_t>> offsets_at(const PathBasis& b, const Summands& s, std::size_t w) {
  std::vector<std::map<std::size_t, std::size_t>> off(s.size());
  std::size_t n = 0;
  for (std::size_t c = 0; c < s.size(); ++c)
    for (auto k : b.between(s[c], w)) off[c][k] = n++;
  return off;
}

void enumerate_paths(const Quiver& q, std::size_t length, Path& cur, const std::function<void(const Path&)>& visit) {
  if (cur.length() == length) {
    visit(cur);
    return;
  }
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    if (q.arrow(a).source != cur.target) continue;
    const std::size_t saved = cur.target;
    cur.arrows.push_back(a);
    cur.target = q.arrow(a).target;
    enumerate_paths(q, length, cur, visit);
    cur.arrows.pop_back();
    cur.target = saved;
  }
}

// Generators of m modulo its radical: (vertex, vector in V_v).
std::vector<std::pair<std::size_t, RatVector>> top_generators(const Representation& m) {
  const Quiver& q = m.algebra()->presentation().quiver;
  std::vector<std::pair<std::size_t, RatVector>> gens;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    const std::size_t d = m.dim(v);
    if (d == 0) continue;
    RatMatrix rad(d, 0);
    for (std::size_t a = 0; a < q.arrows().size(); ++a)
      if (q.arrow(a).target == v) rad = RatMatrix::hstack(rad, m.map(a));
    rad = column_basis(rad);
    for (auto j : extending_columns(rad, RatMatrix::identity(d))) gens.emplace_back(v, unit_rat(d, j));
  }
  return gens;
}

}  // namespace

Representation::Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<RatMatrix> maps)
    : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(maps)) {
  const Quiver& q = alg_->presentation().quiver;
  if (dims_.size() != q.vertex_count()) throw InvalidRepresentation("dimension vector has the wrong length");
  if (maps_.size() != q.arrows().size()) throw InvalidRepresentation("one matrix per arrow is required");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (maps_[a].rows() != dims_[ar.target] || maps_[a].cols() != dims_[ar.source])
      throw InvalidRepresentation("matrix of arrow " + ar.name + " has the wrong shape");
  }
  for (const auto& rel : alg_->presentation().relations) {
    std::optional<RatMatrix> sum;
    for (const auto& term : rel) {
      Path p;
      for (const auto& name : term.path) {
        auto idx = q.arrow_index(name);
        if (!idx) throw InvalidRepresentation("relation uses unknown arrow " + name);
        if (p.arrows.empty()) p.source = p.target = q.arrow(*idx).source;
        p.arrows.push_back(*idx);
        p.target = q.arrow(*idx).target;
      }
      RatMatrix t = term.coeff * path_action(p);
      sum = sum ? *sum + t : t;
    }
    if (sum && !sum->is_zero()) throw InvalidRepresentation("a relation does not vanish on the module");
  }
  const std::size_t bound = alg_->basis().nilpotency_bound();
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    Path cur{v, v, {}};
    enumerate_paths(q, bound, cur, [&](const Path& p) {
      if (!path_action(p).is_zero()) throw InvalidRepresentation("a path of length " + std::to_string(bound) + " acts nontrivially");
    });
  }
}

Representation Representation::zero(AlgebraPtr alg) {
  const Quiver& q = alg->presentation().quiver;
  return trusted(alg, std::vector<std::size_t>(q.vertex_count(), 0), std::vector<RatMatrix>(q.arrows().size()));
}

Representation Representation::trusted(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<RatMatrix> maps) {
  Representation r;
  r.alg_ = std::move(alg);
  r.dims_ = std::move(dims);
  r.maps_ = std::move(maps);
  return r;
}

std::size_t Representation::total_dimension() const {
  std::size_t n = 0;
  for (auto d : dims_) n += d;
  return n;
}

IntVector Representation::dimension_vector() const {
  IntVector v;
  for (auto d : dims_) v.emplace_back(static_cast<unsigned long>(d));
  return v;
}

RatMatrix Representation::path_action(const Path& p) const {
  RatMatrix m = RatMatrix::identity(dims_.at(p.source));
  for (auto a : p.arrows) m = maps_.at(a) * m;
  return m;
}

RatMatrix Representation::action(const AlgElement& x, std::size_t from, std::size_t to) const {
  const PathBasis& b = alg_->basis();
  RatMatrix m(dims_.at(to), dims_.at(from));
  for (auto k : b.between(from, to))
    if (x.at(k) != 0) m += x[k] * path_action(b.element(k));
  return m;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h;
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(g.components.at(v) * f.components[v]);
  return h;
}

Morphism identity_morphism(const Representation& m) {
  Morphism f;
  for (auto d : m.dims()) f.components.push_back(RatMatrix::identity(d));
  return f;
}

bool is_morphism(const Representation& m, const Representation& n, const Morphism& f) {
  const Quiver& q = m.algebra()->presentation().quiver;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (!(f.components.at(ar.target) * m.map(a) == n.map(a) * f.components.at(ar.source))) return false;
  }
  return true;
}

HomSpace hom(const Representation& m, const Representation& n) {
  check_algebra(m, n);
  const Quiver& q = m.algebra()->presentation().quiver;
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  auto var = [&](std::size_t v, std::size_t i, std::size_t k) { return offset[v] + i * m.dim(v) + k; };

  std::size_t eqs = 0;
  for (const auto& ar : q.arrows()) eqs += n.dim(ar.target) * m.dim(ar.source);
  RatMatrix sys(eqs, offset[nv]);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
    const RatMatrix& ma = m.map(a);
    const RatMatrix& na = n.map(a);
    // (f_t M_a - N_a f_s)(i, j) = 0
    for (std::size_t i = 0; i < n.dim(t); ++i) {
      for (std::size_t j = 0; j < m.dim(s); ++j, ++row) {
        for (std::size_t k = 0; k < m.dim(t); ++k)
          if (ma(k, j) != 0) sys(row, var(t, i, k)) += ma(k, j);
        for (std::size_t k = 0; k < n.dim(s); ++k)
          if (na(i, k) != 0) sys(row, var(s, k, j)) -= na(i, k);
      }
    }
  }
  RatMatrix ker = rat_kernel(sys);
  HomSpace h;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Morphism f;
    for (std::size_t v = 0; v < nv; ++v) {
      RatMatrix fv(n.dim(v), m.dim(v));
      for (std::size_t i = 0; i < n.dim(v); ++i)
        for (std::size_t k = 0; k < m.dim(v); ++k) fv(i, k) = ker(var(v, i, k), c);
      f.components.push_back(std::move(fv));
    }
    h.basis.push_back(std::move(f));
  }
  return h;
}

Representation submodule(const Representation& m, const std::vector<RatMatrix>& basis) {
  const Quiver& q = m.algebra()->presentation().quiver;
  std::vector<std::size_t> dims;
  for (const auto& u : basis) dims.push_back(u.cols());
  std::vector<RatMatrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrow(a);
    auto y = rat_solve(basis.at(ar.target), m.map(a) * basis.at(ar.source));
    if (!y) throw InvalidRepresentation("subspace is not closed under the arrow actions");
    maps.push_back(std::move(*y));
  }
  return Representation::trusted(m.algebra(), std::move(dims), std::move(maps));
}

std::pair<Representation, Morphism> quotient(const Representation& m, const std::vector<RatMatrix>& basis) {
  const Quiver& q = m.algebra()->presentation().quiver;
  const std::size_t nv = q.vertex_count();
  std::vector<RatMatrix> proj, lift;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < nv; ++v) {
    const RatMatrix& u = basis.at(v);
    const std::size_t d = m.dim(v);
    RatMatrix e = select_columns(RatMatrix::identity(d), extending_columns(u, RatMatrix::identity(d)));
    RatMatrix inv = rat_inverse(RatMatrix::hstack(u, e));
    proj.push_back(inv.block(u.cols(), 0, e.cols(), d));
    lift.push_back(std::move(e));
    dims.push_back(lift.back().cols());
  }
  std::vector<RatMatrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrow(a);
    maps.push_back(proj[ar.target] * m.map(a) * lift[ar.source]);
  }
  return {Representation::trusted(m.algebra(), std::move(dims), std::move(maps)), Morphism{std::move(proj)}};
}

Representation kernel(const Representation& m, const Morphism& f) {
  std::vector<RatMatrix> basis;
  for (const auto& c : f.components) basis.push_back(rat_kernel(c));
  return submodule(m, basis);
}

Representation image(const Representation& n, const Morphism& f) {
  std::vector<RatMatrix> basis;
  for (const auto& c : f.components) basis.push_back(column_basis(c));
  return submodule(n, basis);
}

Representation cokernel(const Representation& n, const Morphism& f) {
  std::vector<RatMatrix> basis;
  for (const auto& c : f.components) basis.push_back(column_basis(c));
  return quotient(n, basis).first;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  check_algebra(a, b);
  const Quiver& q = a.algebra()->presentation().quiver;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims.push_back(a.dim(v) + b.dim(v));
  std::vector<RatMatrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& ar = q.arrow(k);
    RatMatrix m(dims[ar.target], dims[ar.source]);
    const RatMatrix& x = a.map(k);
    const RatMatrix& y = b.map(k);
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
    maps.push_back(std::move(m));
  }
  return Representation::trusted(a.algebra(), std::move(dims), std::move(maps));
}

Representation projective_module(AlgebraPtr alg, const Summands& s) {
  const PathBasis& b = alg->basis();
  const Quiver& q = b.quiver();
  std::vector<std::size_t> dims;
  for (std::size_t w = 0; w < q.vertex_count(); ++w) dims.push_back(projective_dimension_at(*alg, s, w));
  std::vector<RatMatrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrow(a);
    const AlgElement arrow = b.normal_form(Path{ar.source, ar.target, {a}});
    auto rows = offsets_at(b, s, ar.target);
    RatMatrix m(dims[ar.target], dims[ar.source]);
    std::size_t col = 0;
    for (std::size_t c = 0; c < s.size(); ++c) {
      for (auto p : b.between(s[c], ar.source)) {
        for (std::size_t k = 0; k < arrow.size(); ++k) {
          if (arrow[k] == 0) continue;
          for (const auto& [r, v] : b.product(p, k)) m(rows[c].at(r), col) += arrow[k] * v;
        }
        ++col;
      }
    }
    maps.push_back(std::move(m));
  }
  return Representation::trusted(std::move(alg), std::move(dims), std::move(maps));
}

Representation projective(AlgebraPtr alg, std::size_t v) {
  if (v >= alg->vertex_count()) throw IndexOutOfRange("vertex out of range");
  return projective_module(std::move(alg), {v});
}

Representation simple(AlgebraPtr alg, std::size_t v) {
  const Quiver& q = alg->presentation().quiver;
  if (v >= q.vertex_count()) throw IndexOutOfRange("vertex out of range");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[v] = 1;
  std::vector<RatMatrix> maps;
  for (const auto& ar : q.arrows()) maps.emplace_back(dims[ar.target], dims[ar.source]);
  return Representation::trusted(std::move(alg), std::move(dims), std::move(maps));
}

Representation cokernel(const ProjMap& d) {
  Representation p0 = projective_module(d.algebra(), d.target());
  std::vector<RatMatrix> basis;
  for (std::size_t w = 0; w < p0.dims().size(); ++w) basis.push_back(column_basis(d.at_vertex(w)));
  return quotient(p0, basis).first;
}

Representation kernel(const ProjMap& d) {
  Representation p1 = projective_module(d.algebra(), d.source());
  std::vector<RatMatrix> basis;
  for (std::size_t w = 0; w < p1.dims().size(); ++w) basis.push_back(rat_kernel(d.at_vertex(w)));
  return submodule(p1, basis);
}

ProjPresentation min_proj_presentation(const Representation& m) {
  const AlgebraPtr& alg = m.algebra();
  const PathBasis& b = alg->basis();
  const std::size_t nv = alg->vertex_count();

  auto gens = top_generators(m);
  Summands p0;
  for (const auto& g : gens) p0.push_back(g.first);

  // Projective cover P0 -> M sends the path p of summand c to gen_c . p.
  Representation p0_mod = projective_module(alg, p0);
  Morphism cover;
  for (std::size_t w = 0; w < nv; ++w) {
    RatMatrix cw(m.dim(w), p0_mod.dim(w));
    std::size_t col = 0;
    for (std::size_t c = 0; c < p0.size(); ++c) {
      const RatMatrix gen = RatMatrix::column(gens[c].second);
      for (auto p : b.between(p0[c], w)) {
        RatMatrix img = m.path_action(b.element(p)) * gen;
        for (std::size_t i = 0; i < img.rows(); ++i) cw(i, col) = img(i, 0);
        ++col;
      }
    }
    cover.components.push_back(std::move(cw));
  }

  std::vector<RatMatrix> kbasis;
  for (const auto& c : cover.components) kbasis.push_back(rat_kernel(c));
  Representation k = submodule(p0_mod, kbasis);
  auto kgens = top_generators(k);
  Summands p1;
  for (const auto& g : kgens) p1.push_back(g.first);

  ProjMap d(alg, p1, p0);
  for (std::size_t c = 0; c < kgens.size(); ++c) {
    const std::size_t v = kgens[c].first;
    RatMatrix x = kbasis[v] * RatMatrix::column(kgens[c].second);
    auto off = offsets_at(b, p0, v);
    for (std::size_t r = 0; r < p0.size(); ++r)
      for (const auto& [idx, row] : off[r]) d.at(r, c)[idx] = x(row, 0);
  }
  return ProjPresentation{std::move(d)};
}

IntVector index_and_g(const Representation& m) {
  return TwoTermComplex(min_proj_presentation(m).differential).g_vector();
}

RatMatrix evaluation_matrix(const ProjMap& d, const Representation& n) {
  if (!d.algebra()->same_as(*n.algebra())) throw AlgebraMismatch("complex and module over different algebras");
  const Summands& s0 = d.target();
  const Summands& s1 = d.source();
  std::vector<std::size_t> roff(s1.size() + 1, 0), coff(s0.size() + 1, 0);
  for (std::size_t c = 0; c < s1.size(); ++c) roff[c + 1] = roff[c] + n.dim(s1[c]);
  for (std::size_t r = 0; r < s0.size(); ++r) coff[r + 1] = coff[r] + n.dim(s0[r]);
  RatMatrix e(roff.back(), coff.back());
  for (std::size_t c = 0; c < s1.size(); ++c) {
    for (std::size_t r = 0; r < s0.size(); ++r) {
      RatMatrix blk = n.action(d.at(r, c), s0[r], s1[c]);
      for (std::size_t i = 0; i < blk.rows(); ++i)
        for (std::size_t j = 0; j < blk.cols(); ++j) e(roff[c] + i, coff[r] + j) = blk(i, j);
    }
  }
  return e;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  RatMatrix e = evaluation_matrix(min_proj_presentation(m).differential, n);
  return e.cols() - rat_rank(e);
}

std::size_t ext1_dim(const Representation& m, const Representation& n) {
  RatMatrix e = evaluation_matrix(min_proj_presentation(m).differential, n);
  return e.rows() - rat_rank(e);
}

Representation transpose(const Representation& m) {
  return cokernel(min_proj_presentation(m).differential.dual());
}

Representation dual(const Representation& m) {
  std::vector<RatMatrix> maps;
  for (const auto& a : m.maps()) maps.push_back(a.transpose());
  return Representation::trusted(m.algebra()->opposite(), m.dims(), std::move(maps));
}

Representation ar_translate(const Representation& m) { return dual(transpose(m)); }

bool is_tau_rigid(const Representation& m) { return hom_dim(m, ar_translate(m)) == 0; }

bool is_exceptional(const Representation& m) { return hom_dim(m, m) == 1 && ext1_dim(m, m) == 0; }

namespace {

// Kernel of the trace form tr(xy) on the span of `basis`.
std::size_t trace_radical_dim(const std::vector<Morphism>& basis) {
  const std::size_t n = basis.size();
  RatMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational t = 0;
      for (std::size_t v = 0; v < basis[i].components.size(); ++v)
        t += trace(basis[i].components[v] * basis[j].components[v]);
      gram(i, j) = gram(j, i) = t;
    }
  }
  return n - rat_rank(gram);
}

// Monic characteristic polynomial, lowest coefficient first.
RatVector charpoly(const RatMatrix& a) {
  const std::size_t n = a.rows();
  RatVector c(n + 1);
  c[n] = 1;
  RatMatrix mk(n, n);
  const RatMatrix id = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + c[n - k + 1] * id;
    c[n - k] = -trace(a * mk) / Rational(static_cast<long>(k));
  }
  return c;
}

std::vector<Integer> divisors(Integer x) {
  x = abs(x);
  std::vector<Integer> out;
  if (x == 0 || x > Integer(1000000000)) return out;
  for (Integer d = 1; d * d <= x; ++d) {
    if (x % d != 0) continue;
    out.push_back(d);
    if (d * d != x) out.push_back(x / d);
  }
  return out;
}

std::set<Rational> rational_roots(const RatVector& poly) {
  std::set<Rational> roots;
  Integer l = 1;
  for (const auto& c : poly) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> a;
  for (const auto& c : poly) a.push_back(Integer(c * l));
  std::size_t lo = 0;
  while (lo < a.size() && a[lo] == 0) ++lo;
  if (lo > 0) roots.insert(0);
  if (lo + 1 >= a.size()) return roots;
  auto eval = [&](const Rational& x) {
    Rational v = 0;
    for (std::size_t i = a.size(); i-- > lo;) v = v * x + a[i];
    return v;
  };
  for (const auto& p : divisors(a[lo]))
    for (const auto& q : divisors(a.back()))
      for (int sgn : {1, -1}) {
        Rational x(sgn * p, q);
        x.canonicalize();
        if (eval(x) == 0) roots.insert(x);
      }
  return roots;
}

Morphism power(const Morphism& f, std::size_t e) {
  Morphism out = f;
  for (auto& c : out.components) c = RatMatrix::identity(c.rows());
  for (std::size_t i = 0; i < e; ++i) out = compose(f, out);
  return out;
}

bool is_nilpotent_power_zero(const Morphism& g) {
  for (const auto& c : g.components)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<std::pair<Representation, Representation>> fitting_split(const Representation& m, const Morphism& f) {
  const std::size_t n = m.total_dimension();
  std::set<Rational> eig;
  for (const auto& c : f.components)
    for (const auto& r : rational_roots(charpoly(c))) eig.insert(r);
  for (const auto& lambda : eig) {
    Morphism g = f;
    for (auto& c : g.components) c -= lambda * RatMatrix::identity(c.rows());
    Morphism gn = power(g, n);
    if (is_nilpotent_power_zero(gn)) continue;
    Representation k = kernel(m, gn);
    Representation i = image(m, gn);
    if (k.is_zero() || i.is_zero()) continue;
    return std::pair{std::move(k), std::move(i)};
  }
  return std::nullopt;
}

}  // namespace

bool is_indecomposable(const Representation& m) {
  if (m.is_zero()) return false;
  HomSpace end = hom(m, m);
  return end.dimension() - trace_radical_dim(end.basis) == 1;
}

std::vector<Representation> decompose_module(const Representation& m) {
  if (m.is_zero()) return {};
  HomSpace end = hom(m, m);
  if (end.dimension() - trace_radical_dim(end.basis) == 1) return {m};
  std::vector<Morphism> candidates = end.basis;
  for (std::size_t i = 0; i < end.basis.size(); ++i)
    for (std::size_t j = i + 1; j < end.basis.size(); ++j) {
      Morphism s = end.basis[i];
      for (std::size_t v = 0; v < s.components.size(); ++v) s.components[v] += end.basis[j].components[v];
      candidates.push_back(std::move(s));
      candidates.push_back(compose(end.basis[i], end.basis[j]));
    }
  for (const auto& f : candidates) {
    if (auto split = fitting_split(m, f)) {
      auto out = decompose_module(split->first);
      auto rest = decompose_module(split->second);
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
  }
  return {m};
}

TwoTermComplex support_pair_to_silting(const Representation& m, const Summands& q) {
  for (auto v : q) {
    if (v >= m.dims().size()) throw IndexOutOfRange("projective summand out of range");
    if (m.dim(v) != 0) throw SupportViolation("Hom(Q, M) is nonzero at vertex " + std::to_string(v + 1));
  }
  ProjMap d = min_proj_presentation(m).differential;
  return TwoTermComplex(ProjMap::hstack(d, ProjMap(m.algebra(), q, d.target())));
}

Representation h0(const TwoTermComplex& t) { return cokernel(t.differential()); }

Representation h_minus1(const TwoTermComplex& t) { return kernel(t.differential()); }

std::set<IntVector> positive_roots(const IntMatrix& cartan, std::size_t height_bound) {
  const std::size_t n = cartan.rows();
  if (!cartan.is_square()) throw DimensionMismatch("Cartan matrix must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan(i, i) != 2) throw Error("Cartan matrix needs 2 on the diagonal");
    for (std::size_t j = 0; j < n; ++j)
      if (cartan(i, j) != cartan(j, i)) throw Error("Cartan matrix must be symmetric");
  }
  std::set<IntVector> roots;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < n && height_bound >= 1; ++i) {
    roots.insert(unit_vector(n, i));
    queue.push_back(unit_vector(n, i));
  }
  while (!queue.empty()) {
    IntVector v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Integer pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += v[j] * cartan(j, i);
      IntVector w = v;
      w[i] -= pairing;
      Integer height = 0;
      bool positive = true;
      for (const auto& x : w) {
        if (x < 0) positive = false;
        height += x;
      }
      if (!positive || height == 0 || height > Integer(static_cast<unsigned long>(height_bound))) continue;
      if (roots.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return roots;
}

}  // namespace cvec
