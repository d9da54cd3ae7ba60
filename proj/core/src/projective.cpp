#include "cvec/projective.hpp"

#include <algorithm>
#include <map>

namespace cvec {

IntVector multiplicities(const Summands& s, std::size_t vertex_count) {
  IntVector m(vertex_count);
  for (auto v : s) m.at(v) += 1;
  return m;
}

Summands summands_from_multiplicities(std::span<const Integer> mult) {
  Summands s;
  for (std::size_t v = 0; v < mult.size(); ++v) {
    if (mult[v] < 0) throw Error("negative multiplicity");
    for (Integer i = 0; i < mult[v]; ++i) s.push_back(v);
  }
  return s;
}

ProjMap::ProjMap(AlgebraPtr alg, Summands source, Summands target)
    : alg_(std::move(alg)), source_(std::move(source)), target_(std::move(target)) {
  const std::size_t n = alg_->vertex_count();
  for (auto v : source_)
    if (v >= n) throw IndexOutOfRange("projective summand out of range");
  for (auto v : target_)
    if (v >= n) throw IndexOutOfRange("projective summand out of range");
  entries_.assign(source_.size() * target_.size(), alg_->basis().zero());
}

ProjMap ProjMap::identity(AlgebraPtr alg, const Summands& s) {
  ProjMap f(alg, s, s);
  for (std::size_t i = 0; i < s.size(); ++i) f.at(i, i)[alg->basis().idempotent(s[i])] = 1;
  return f;
}

bool ProjMap::is_zero() const {
  for (const auto& e : entries_)
    for (const auto& x : e)
      if (x != 0) return false;
  return true;
}

bool ProjMap::is_radical() const {
  for (std::size_t r = 0; r < target_.size(); ++r)
    for (std::size_t c = 0; c < source_.size(); ++c)
      if (target_[r] == source_[c] && at(r, c)[target_[r]] != 0) return false;
  return true;
}

RatMatrix ProjMap::top() const {
  RatMatrix t(target_.size(), source_.size());
  for (std::size_t r = 0; r < target_.size(); ++r)
    for (std::size_t c = 0; c < source_.size(); ++c)
      if (target_[r] == source_[c]) t(r, c) = at(r, c)[target_[r]];
  return t;
}

ProjMap& ProjMap::operator+=(const ProjMap& o) {
  if (source_ != o.source_ || target_ != o.target_) throw DimensionMismatch("ProjMap sum of different shapes");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t k = 0; k < entries_[i].size(); ++k) entries_[i][k] += o.entries_[i][k];
  return *this;
}

ProjMap ProjMap::operator-() const {
  ProjMap f = *this;
  for (auto& e : f.entries_)
    for (auto& x : e) x = -x;
  return f;
}

ProjMap operator*(const Rational& s, ProjMap f) {
  for (auto& e : f.entries_)
    for (auto& x : e) x *= s;
  return f;
}

ProjMap operator*(const ProjMap& g, const ProjMap& f) {
  if (g.source_ != f.target_) throw DimensionMismatch("ProjMap composition: summands do not match");
  if (!g.alg_->same_as(*f.alg_)) throw AlgebraMismatch("ProjMap composition over different algebras");
  ProjMap out(g.alg_, f.source_, g.target_);
  const PathBasis& b = g.alg_->basis();
  for (std::size_t r = 0; r < g.target_.size(); ++r) {
    for (std::size_t c = 0; c < f.source_.size(); ++c) {
      AlgElement& acc = out.at(r, c);
      for (std::size_t m = 0; m < f.target_.size(); ++m) {
        AlgElement p = b.multiply(g.at(r, m), f.at(m, c));
        for (std::size_t k = 0; k < p.size(); ++k) acc[k] += p[k];
      }
    }
  }
  return out;
}

std::size_t ProjMap::coordinate_count(const Algebra& alg, const Summands& source, const Summands& target) {
  std::size_t n = 0;
  for (auto t : target)
    for (auto s : source) n += alg.basis().between(t, s).size();
  return n;
}

RatVector ProjMap::coordinates() const {
  RatVector x;
  const PathBasis& b = alg_->basis();
  for (std::size_t r = 0; r < target_.size(); ++r)
    for (std::size_t c = 0; c < source_.size(); ++c)
      for (auto k : b.between(target_[r], source_[c])) x.push_back(at(r, c)[k]);
  return x;
}

ProjMap ProjMap::from_coordinates(AlgebraPtr alg, Summands source, Summands target, std::span<const Rational> x) {
  ProjMap f(std::move(alg), std::move(source), std::move(target));
  const PathBasis& b = f.alg_->basis();
  std::size_t i = 0;
  for (std::size_t r = 0; r < f.target_.size(); ++r)
    for (std::size_t c = 0; c < f.source_.size(); ++c)
      for (auto k : b.between(f.target_[r], f.source_[c])) {
        if (i >= x.size()) throw DimensionMismatch("too few coordinates for ProjMap");
        f.at(r, c)[k] = x[i++];
      }
  if (i != x.size()) throw DimensionMismatch("too many coordinates for ProjMap");
  return f;
}

std::vector<ProjMap> ProjMap::hom_basis(AlgebraPtr alg, const Summands& source, const Summands& target) {
  const std::size_t n = coordinate_count(*alg, source, target);
  std::vector<ProjMap> out;
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = 1;
    out.push_back(from_coordinates(alg, source, target, x));
    x[i] = 0;
  }
  return out;
}

std::size_t projective_dimension_at(const Algebra& alg, const Summands& s, std::size_t w) {
  std::size_t d = 0;
  for (auto v : s) d += alg.basis().between(v, w).size();
  return d;
}

RatMatrix ProjMap::at_vertex(std::size_t w) const {
  const PathBasis& b = alg_->basis();
  const std::size_t dim = b.dimension();
  // Row offset of each (target summand, basis element) pair.
  std::vector<std::map<std::size_t, std::size_t>> row_of(target_.size());
  std::size_t rows = 0;
  for (std::size_t r = 0; r < target_.size(); ++r)
    for (auto k : b.between(target_[r], w)) row_of[r][k] = rows++;
  std::size_t cols = projective_dimension_at(*alg_, source_, w);
  RatMatrix m(rows, cols);
  std::size_t col = 0;
  for (std::size_t c = 0; c < source_.size(); ++c) {
    for (auto p : b.between(source_[c], w)) {
      for (std::size_t r = 0; r < target_.size(); ++r) {
        const AlgElement& x = at(r, c);
        for (std::size_t i = 0; i < dim; ++i) {
          if (x[i] == 0) continue;
          for (const auto& [k, v] : b.product(i, p)) m(row_of[r].at(k), col) += x[i] * v;
        }
      }
      ++col;
    }
  }
  return m;
}

RatMatrix ProjMap::as_linear() const {
  std::vector<RatMatrix> blocks;
  std::size_t rows = 0, cols = 0;
  for (std::size_t w = 0; w < alg_->vertex_count(); ++w) {
    blocks.push_back(at_vertex(w));
    rows += blocks.back().rows();
    cols += blocks.back().cols();
  }
  RatMatrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& blk : blocks) {
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j) m(r0 + i, c0 + j) = blk(i, j);
    r0 += blk.rows();
    c0 += blk.cols();
  }
  return m;
}

ProjMap ProjMap::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Summands src, tgt;
  for (auto c : cols) src.push_back(source_.at(c));
  for (auto r : rows) tgt.push_back(target_.at(r));
  ProjMap out(alg_, std::move(src), std::move(tgt));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
  return out;
}

ProjMap ProjMap::hstack(const ProjMap& f, const ProjMap& g) {
  if (f.target_ != g.target_) throw DimensionMismatch("hstack: targets differ");
  Summands src = f.source_;
  src.insert(src.end(), g.source_.begin(), g.source_.end());
  ProjMap out(f.alg_, src, f.target_);
  for (std::size_t r = 0; r < f.target_.size(); ++r) {
    for (std::size_t c = 0; c < f.source_.size(); ++c) out.at(r, c) = f.at(r, c);
    for (std::size_t c = 0; c < g.source_.size(); ++c) out.at(r, f.source_.size() + c) = g.at(r, c);
  }
  return out;
}

ProjMap ProjMap::vstack(const ProjMap& f, const ProjMap& g) {
  if (f.source_ != g.source_) throw DimensionMismatch("vstack: sources differ");
  Summands tgt = f.target_;
  tgt.insert(tgt.end(), g.target_.begin(), g.target_.end());
  ProjMap out(f.alg_, f.source_, tgt);
  for (std::size_t c = 0; c < f.source_.size(); ++c) {
    for (std::size_t r = 0; r < f.target_.size(); ++r) out.at(r, c) = f.at(r, c);
    for (std::size_t r = 0; r < g.target_.size(); ++r) out.at(f.target_.size() + r, c) = g.at(r, c);
  }
  return out;
}

ProjMap ProjMap::dual() const {
  ProjMap out(alg_->opposite(), target_, source_);
  for (std::size_t r = 0; r < target_.size(); ++r)
    for (std::size_t c = 0; c < source_.size(); ++c) out.at(c, r) = alg_->to_opposite(at(r, c));
  return out;
}

AlgElement local_inverse(const Algebra& alg, const AlgElement& x, std::size_t v) {
  const PathBasis& b = alg.basis();
  const Rational lambda = x.at(b.idempotent(v));
  if (lambda == 0) throw Error("local_inverse: element is not invertible");
  // x = lambda (e_v + n) with n nilpotent of index <= nilpotency bound.
  AlgElement n = x;
  for (auto& c : n) c /= lambda;
  n[b.idempotent(v)] -= 1;
  for (auto& c : n) c = -c;
  AlgElement term = b.unit(b.idempotent(v));
  AlgElement sum = term;
  for (std::size_t k = 1; k <= b.nilpotency_bound(); ++k) {
    term = b.multiply(term, n);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += term[i];
  }
  for (auto& c : sum) c /= lambda;
  return sum;
}

TwoTermComplex TwoTermComplex::stalk(AlgebraPtr alg, Summands p) {
  return TwoTermComplex(ProjMap(std::move(alg), {}, std::move(p)));
}

TwoTermComplex TwoTermComplex::shifted_stalk(AlgebraPtr alg, Summands p) {
  return TwoTermComplex(ProjMap(std::move(alg), std::move(p), {}));
}

TwoTermComplex TwoTermComplex::direct_sum(std::span<const TwoTermComplex> parts) {
  if (parts.empty()) throw Error("direct_sum of no complexes");
  AlgebraPtr alg = parts.front().algebra();
  Summands p1, p0;
  for (const auto& t : parts) {
    p1.insert(p1.end(), t.p1().begin(), t.p1().end());
    p0.insert(p0.end(), t.p0().begin(), t.p0().end());
  }
  ProjMap d(alg, p1, p0);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& t : parts) {
    for (std::size_t r = 0; r < t.p0().size(); ++r)
      for (std::size_t c = 0; c < t.p1().size(); ++c) d.at(r0 + r, c0 + c) = t.differential().at(r, c);
    r0 += t.p0().size();
    c0 += t.p1().size();
  }
  return TwoTermComplex(std::move(d));
}

IntVector TwoTermComplex::g_vector() const {
  const std::size_t n = algebra()->vertex_count();
  IntVector g = multiplicities(p0(), n);
  IntVector m1 = multiplicities(p1(), n);
  for (std::size_t i = 0; i < n; ++i) g[i] -= m1[i];
  return g;
}

namespace {

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

std::vector<std::size_t> all_of(std::size_t n) { return all_but(n, n); }

}  // namespace

ProjComplex minimize(ProjComplex c) {
  const PathBasis& b = c.alg->basis();
  for (;;) {
    bool found = false;
    for (std::size_t k = 0; k < c.differentials.size() && !found; ++k) {
      const ProjMap& d = c.differentials[k];
      for (std::size_t r = 0; r < d.target().size() && !found; ++r) {
        for (std::size_t col = 0; col < d.source().size() && !found; ++col) {
          const std::size_t v = d.source()[col];
          if (d.target()[r] != v || d.at(r, col)[b.idempotent(v)] == 0) continue;
          found = true;
          AlgElement phi_inv = local_inverse(*c.alg, d.at(r, col), v);
          ProjMap reduced = d.select(all_but(d.target().size(), r), all_but(d.source().size(), col));
          auto rows = all_but(d.target().size(), r);
          auto cols = all_but(d.source().size(), col);
          for (std::size_t i = 0; i < rows.size(); ++i) {
            const AlgElement gamma = b.multiply(d.at(rows[i], col), phi_inv);
            for (std::size_t j = 0; j < cols.size(); ++j) {
              AlgElement corr = b.multiply(gamma, d.at(r, cols[j]));
              for (std::size_t t = 0; t < corr.size(); ++t) reduced.at(i, j)[t] -= corr[t];
            }
          }
          if (k > 0) {
            const ProjMap& prev = c.differentials[k - 1];
            c.differentials[k - 1] = prev.select(all_but(prev.target().size(), col), all_of(prev.source().size()));
          }
          if (k + 1 < c.differentials.size()) {
            const ProjMap& next = c.differentials[k + 1];
            c.differentials[k + 1] = next.select(all_of(next.target().size()), all_but(next.source().size(), r));
          }
          c.differentials[k] = std::move(reduced);
          c.terms[k].erase(c.terms[k].begin() + static_cast<std::ptrdiff_t>(col));
          c.terms[k + 1].erase(c.terms[k + 1].begin() + static_cast<std::ptrdiff_t>(r));
        }
      }
    }
    if (!found) break;
  }
  return c;
}

TwoTermComplex minimize(const TwoTermComplex& t) {
  ProjComplex c{t.algebra(), -1, {t.p1(), t.p0()}, {t.differential()}};
  c = minimize(std::move(c));
  return TwoTermComplex(c.differentials.front());
}

}  // namespace cvec
