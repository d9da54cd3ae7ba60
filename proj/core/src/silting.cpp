#include "cvec/silting.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "cvec/mutation.hpp"

namespace cvec {

namespace {

// Position of each basis element inside its e_x A e_y block.
std::vector<std::size_t> block_positions(const PathBasis& b) {
  std::vector<std::size_t> pos(b.dimension());
  const std::size_t n = b.vertex_count();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& ids = b.between(x, y);
      for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = i;
    }
  return pos;
}

// Offsets of the (r, c) blocks in the coordinates of Hom(P_source, P_target).
std::vector<std::size_t> block_offsets(const PathBasis& b, const Summands& source, const Summands& target) {
  std::vector<std::size_t> off(target.size() * source.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t r = 0; r < target.size(); ++r)
    for (std::size_t c = 0; c < source.size(); ++c, ++k) off[k + 1] = off[k] + b.between(target[r], source[c]).size();
  return off;
}

// Matrix of f |-> g * f on Hom(src, g.source()).
SparseRatMatrix post_matrix(const ProjMap& g, const Summands& src) {
  const Algebra& alg = *g.algebra();
  const PathBasis& b = alg.basis();
  const auto pos = block_positions(b);
  const auto in_off = block_offsets(b, src, g.source());
  const auto out_off = block_offsets(b, src, g.target());
  SparseRatMatrix m(out_off.back(), in_off.back());
  for (std::size_t r = 0; r < g.source().size(); ++r)
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& ks = b.between(g.source()[r], src[c]);
      for (std::size_t q = 0; q < ks.size(); ++q) {
        const std::size_t col = in_off[r * src.size() + c] + q;
        for (std::size_t rr = 0; rr < g.target().size(); ++rr) {
          const AlgElement& x = g.at(rr, r);
          for (std::size_t p = 0; p < x.size(); ++p) {
            if (x[p] == 0) continue;
            for (const auto& [idx, coeff] : b.product(p, ks[q]))
              m.add(out_off[rr * src.size() + c] + pos[idx], col, x[p] * coeff);
          }
        }
      }
    }
  return m;
}

// Matrix of h |-> h * f on Hom(f.target(), tgt).
SparseRatMatrix pre_matrix(const ProjMap& f, const Summands& tgt) {
  const Algebra& alg = *f.algebra();
  const PathBasis& b = alg.basis();
  const auto pos = block_positions(b);
  const auto in_off = block_offsets(b, f.target(), tgt);
  const auto out_off = block_offsets(b, f.source(), tgt);
  SparseRatMatrix m(out_off.back(), in_off.back());
  for (std::size_t r = 0; r < tgt.size(); ++r)
    for (std::size_t mid = 0; mid < f.target().size(); ++mid) {
      const auto& ks = b.between(tgt[r], f.target()[mid]);
      for (std::size_t q = 0; q < ks.size(); ++q) {
        const std::size_t col = in_off[r * f.target().size() + mid] + q;
        for (std::size_t c = 0; c < f.source().size(); ++c) {
          const AlgElement& x = f.at(mid, c);
          for (std::size_t p = 0; p < x.size(); ++p) {
            if (x[p] == 0) continue;
            for (const auto& [idx, coeff] : b.product(ks[q], p))
              m.add(out_off[r * f.source().size() + c] + pos[idx], col, coeff * x[p]);
          }
        }
      }
    }
  return m;
}

void check_same(const TwoTermComplex& t, const TwoTermComplex& u) {
  if (!t.algebra()->same_as(*u.algebra())) throw AlgebraMismatch("complexes over different algebras");
}

// Chain maps T -> U as coordinate columns [f1; f0], with the subspace of
// null-homotopic maps.
struct ChainSpace {
  std::size_t n1 = 0, n0 = 0;
  RatMatrix chains;
  SparseRatMatrix homotopic;
};

ChainSpace chain_space(const TwoTermComplex& t, const TwoTermComplex& u) {
  check_same(t, u);
  const ProjMap& dt = t.differential();
  const ProjMap& du = u.differential();
  ChainSpace cs;
  cs.n1 = ProjMap::coordinate_count(*t.algebra(), t.p1(), u.p1());
  cs.n0 = ProjMap::coordinate_count(*t.algebra(), t.p0(), u.p0());
  cs.chains = rat_kernel(SparseRatMatrix::hstack(post_matrix(du, t.p1()), -pre_matrix(dt, u.p0())));
  cs.homotopic = SparseRatMatrix::vstack(pre_matrix(dt, u.p1()), post_matrix(du, t.p0()));
  return cs;
}

ChainMap to_chain(const TwoTermComplex& t, const TwoTermComplex& u, std::span<const Rational> x) {
  const std::size_t n1 = ProjMap::coordinate_count(*t.algebra(), t.p1(), u.p1());
  return ChainMap{ProjMap::from_coordinates(t.algebra(), t.p1(), u.p1(), x.subspan(0, n1)),
                  ProjMap::from_coordinates(t.algebra(), t.p0(), u.p0(), x.subspan(n1))};
}

RatVector coords(const ChainMap& f) {
  RatVector x = f.f1.coordinates();
  RatVector y = f.f0.coordinates();
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

std::vector<ChainMap> columns_as_chains(const TwoTermComplex& t, const TwoTermComplex& u, const RatMatrix& m) {
  std::vector<ChainMap> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    RatVector c = m.col(j);
    out.push_back(to_chain(t, u, c));
  }
  return out;
}

Rational linear_trace(const ProjMap& f) {
  RatMatrix m = f.as_linear();
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Rational chain_trace(const ChainMap& f) { return linear_trace(f.f1) + linear_trace(f.f0); }

// Chain maps T -> U representing a basis of Hom in the homotopy category.
std::vector<ChainMap> homotopy_classes(const TwoTermComplex& t, const TwoTermComplex& u) {
  ChainSpace cs = chain_space(t, u);
  std::vector<ChainMap> out;
  for (auto c : extending_columns(cs.homotopic, cs.chains)) out.push_back(to_chain(t, u, cs.chains.col(c)));
  return out;
}

// Radical of End(X) modulo homotopy for X indecomposable and minimal. The
// endomorphism ring is then local with residue field Q, so the radical is
// the kernel of the trace functional (null-homotopic maps have trace zero).
std::vector<ChainMap> radical_endomorphisms(const TwoTermComplex& x) {
  ChainMap id{ProjMap::identity(x.algebra(), x.p1()), ProjMap::identity(x.algebra(), x.p0())};
  const Rational tid = chain_trace(id);
  std::vector<ChainMap> out;
  for (auto& b : homotopy_classes(x, x)) {
    const Rational t = chain_trace(b);
    out.push_back(ChainMap{b.f1 - (t / tid) * id.f1, b.f0 - (t / tid) * id.f0});
  }
  return out;
}

bool top_invertible(const ProjMap& f) {
  if (f.source().size() != f.target().size()) return false;
  if (f.source().empty()) return true;
  return determinant(f.top()) != 0;
}

SparseRatMatrix append_columns(const SparseRatMatrix& m, const std::vector<RatVector>& cols) {
  SparseRatMatrix extra(m.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) extra.add(i, j, cols[j][i]);
  return SparseRatMatrix::hstack(m, extra);
}

struct Approximation {
  std::vector<std::size_t> slots;  // summand index of each component
  std::vector<ChainMap> maps;
};

// Minimal left (X -> add P) or right (add P -> X) approximation, P being
// the summands other than slot i.
Approximation approximation(const SiltingRecord& t, std::size_t i, bool left) {
  const auto& s = t.summands;
  const TwoTermComplex& x = s[i];
  std::vector<std::vector<ChainMap>> to_x(s.size());  // chain maps X -> X_k (left) or X_k -> X (right)
  for (std::size_t k = 0; k < s.size(); ++k)
    if (k != i) to_x[k] = left ? homotopy_classes(x, s[k]) : homotopy_classes(s[k], x);

  Approximation out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j == i) continue;
    ChainSpace cs = left ? chain_space(x, s[j]) : chain_space(s[j], x);
    std::vector<RatVector> factored;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k == i) continue;
      std::vector<ChainMap> rad = k == j ? radical_endomorphisms(s[j])
                                          : (left ? homotopy_classes(s[k], s[j]) : homotopy_classes(s[j], s[k]));
      for (const auto& r : rad)
        for (const auto& g : to_x[k]) factored.push_back(coords(left ? compose(r, g) : compose(g, r)));
    }
    SparseRatMatrix span = append_columns(cs.homotopic, factored);
    for (auto c : extending_columns(span, cs.chains)) {
      RatVector v = cs.chains.col(c);
      out.slots.push_back(j);
      out.maps.push_back(left ? to_chain(x, s[j], v) : to_chain(s[j], x, v));
    }
  }
  return out;
}

TwoTermComplex sum_of(const AlgebraPtr& alg, const std::vector<TwoTermComplex>& parts) {
  if (parts.empty()) return TwoTermComplex(ProjMap(alg, {}, {}));
  return TwoTermComplex::direct_sum(parts);
}

SiltingRecord replace_slot(const SiltingRecord& t, std::size_t i, const ProjComplex& c, int low) {
  // The minimized cone must live in degrees -1 and 0.
  for (std::size_t k = 0; k < c.terms.size(); ++k) {
    const int deg = c.lowest + static_cast<int>(k);
    if ((deg < -1 || deg > 0) && !c.terms[k].empty()) throw MutationNotTwoTerm("mutation leaves the two-term range");
  }
  const std::size_t idx = static_cast<std::size_t>(-1 - low);
  TwoTermComplex y = minimize(TwoTermComplex(c.differentials.at(idx)));
  auto parts = decompose(y);
  if (parts.size() != 1) throw NotSilting("mutation produced " + std::to_string(parts.size()) + " summands");
  std::vector<TwoTermComplex> summands = t.summands;
  summands[i] = parts.front();
  std::vector<std::size_t> word = t.word;
  word.push_back(i);
  return make_record(std::move(summands), std::move(word));
}

}  // namespace

ChainMap compose(const ChainMap& g, const ChainMap& f) { return ChainMap{g.f1 * f.f1, g.f0 * f.f0}; }

std::vector<ChainMap> chain_maps(const TwoTermComplex& t, const TwoTermComplex& u) {
  ChainSpace cs = chain_space(t, u);
  return columns_as_chains(t, u, cs.chains);
}

std::size_t hom_shift(const TwoTermComplex& t, const TwoTermComplex& u, int s) {
  check_same(t, u);
  const ProjMap& dt = t.differential();
  const ProjMap& du = u.differential();
  const AlgebraPtr& alg = t.algebra();
  switch (s) {
    case 0: {
      ChainSpace cs = chain_space(t, u);
      return cs.chains.cols() - rat_rank(cs.homotopic);
    }
    case 1: {
      SparseRatMatrix m = SparseRatMatrix::hstack(pre_matrix(dt, u.p0()), post_matrix(du, t.p1()));
      return m.rows() - rat_rank(m);
    }
    case -1: {
      SparseRatMatrix m = SparseRatMatrix::vstack(post_matrix(du, t.p0()), pre_matrix(dt, u.p1()));
      return m.cols() - rat_rank(m);
    }
    default:
      throw Error("hom_shift supports shifts -1, 0, 1");
  }
}

bool is_presilting(const TwoTermComplex& t) { return hom_shift(t, t, 1) == 0; }

bool is_silting(const TwoTermComplex& t) {
  TwoTermComplex m = minimize(t);
  if (!is_presilting(m)) return false;
  auto parts = decompose(m);
  std::vector<TwoTermComplex> distinct;
  for (const auto& p : parts) {
    bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const TwoTermComplex& q) { return isomorphic(p, q); });
    if (!seen) distinct.push_back(p);
  }
  return distinct.size() == t.algebra()->vertex_count();
}

std::vector<TwoTermComplex> decompose(const TwoTermComplex& t) {
  const AlgebraPtr& alg = t.algebra();
  const std::size_t n = alg->vertex_count();
  TwoTermComplex m = minimize(t);
  std::vector<TwoTermComplex> out;
  IntVector p1 = multiplicities(m.p1(), n);
  IntVector p0 = multiplicities(m.p0(), n);
  for (const auto& part : decompose_module(h0(m))) {
    TwoTermComplex c(min_proj_presentation(part).differential);
    IntVector a = multiplicities(c.p1(), n);
    IntVector b = multiplicities(c.p0(), n);
    for (std::size_t v = 0; v < n; ++v) {
      p1[v] -= a[v];
      p0[v] -= b[v];
    }
    out.push_back(std::move(c));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (p0[v] != 0 || p1[v] < 0) throw Error("decompose: H0 summands do not match the complex");
    for (Integer k = 0; k < p1[v]; ++k) out.push_back(TwoTermComplex::shifted_stalk(alg, {v}));
  }
  return out;
}

bool isomorphic(const TwoTermComplex& x, const TwoTermComplex& y) {
  check_same(x, y);
  if (x.g_vector() != y.g_vector()) return false;
  if (multiplicities(x.p1(), x.algebra()->vertex_count()) != multiplicities(y.p1(), y.algebra()->vertex_count()))
    return false;
  if (x.is_zero()) return y.is_zero();
  TwoTermComplex mx = minimize(x), my = minimize(y);
  auto fs = homotopy_classes(mx, my);
  auto gs = homotopy_classes(my, mx);
  if (fs.empty() || gs.empty()) return false;
  auto works = [](const ChainMap& f, const ChainMap& g) {
    ChainMap e = compose(g, f);
    return top_invertible(e.f1) && top_invertible(e.f0);
  };
  // Isomorphisms form a dense open subset, so a random combination almost
  // always finds one; the pairwise search settles the rest.
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> coeff(-7, 7);
  auto combine = [&](const std::vector<ChainMap>& maps) {
    ChainMap acc = maps.front();
    for (std::size_t i = 1; i < maps.size(); ++i) {
      const Rational c = coeff(rng);
      acc = ChainMap{acc.f1 + c * maps[i].f1, acc.f0 + c * maps[i].f0};
    }
    return acc;
  };
  for (int attempt = 0; attempt < 3; ++attempt)
    if (works(combine(fs), combine(gs))) return true;
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (works(f, g)) return true;
  return false;
}

SiltingRecord make_record(std::vector<TwoTermComplex> summands, std::vector<std::size_t> word) {
  if (summands.empty()) throw NotSilting("no summands");
  const AlgebraPtr alg = summands.front().algebra();
  const std::size_t n = alg->vertex_count();
  if (summands.size() != n) throw NotSilting("a silting record needs one summand per vertex");
  SiltingRecord r;
  r.g_matrix = IntMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) r.g_matrix.set_col(j, summands[j].g_vector());
  r.c_matrix = unimodular_inverse(r.g_matrix.transpose());
  r.complex = TwoTermComplex::direct_sum(summands);
  r.summands = std::move(summands);
  r.word = std::move(word);
  return r;
}

SiltingRecord root_record(const AlgebraPtr& alg) {
  std::vector<TwoTermComplex> s;
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) s.push_back(TwoTermComplex::stalk(alg, {v}));
  return make_record(std::move(s), {});
}

SiltingRecord left_mutation(const SiltingRecord& t, std::size_t i) {
  if (i >= t.summands.size()) throw IndexOutOfRange("summand index out of range");
  const AlgebraPtr& alg = t.complex.algebra();
  const TwoTermComplex& x = t.summands[i];
  Approximation ap = approximation(t, i, true);
  std::vector<TwoTermComplex> parts;
  for (auto j : ap.slots) parts.push_back(t.summands[j]);
  TwoTermComplex y = sum_of(alg, parts);
  ProjMap f1(alg, x.p1(), y.p1()), f0(alg, x.p0(), y.p0());
  {
    std::size_t r1 = 0, r0 = 0;
    for (const auto& m : ap.maps) {
      for (std::size_t r = 0; r < m.f1.target().size(); ++r)
        for (std::size_t c = 0; c < x.p1().size(); ++c) f1.at(r1 + r, c) = m.f1.at(r, c);
      for (std::size_t r = 0; r < m.f0.target().size(); ++r)
        for (std::size_t c = 0; c < x.p0().size(); ++c) f0.at(r0 + r, c) = m.f0.at(r, c);
      r1 += m.f1.target().size();
      r0 += m.f0.target().size();
    }
  }
  // cone(f): X1 -> X0 + Y1 -> Y0 in degrees -2, -1, 0.
  Summands mid = x.p0();
  mid.insert(mid.end(), y.p1().begin(), y.p1().end());
  ProjComplex c{alg, -2, {x.p1(), mid, y.p0()},
                {ProjMap::vstack(-x.differential(), f1), ProjMap::hstack(f0, y.differential())}};
  return replace_slot(t, i, minimize(std::move(c)), -2);
}

SiltingRecord right_mutation(const SiltingRecord& t, std::size_t i) {
  if (i >= t.summands.size()) throw IndexOutOfRange("summand index out of range");
  const AlgebraPtr& alg = t.complex.algebra();
  const TwoTermComplex& x = t.summands[i];
  Approximation ap = approximation(t, i, false);
  std::vector<TwoTermComplex> parts;
  for (auto j : ap.slots) parts.push_back(t.summands[j]);
  TwoTermComplex y = sum_of(alg, parts);
  ProjMap g1(alg, y.p1(), x.p1()), g0(alg, y.p0(), x.p0());
  {
    std::size_t c1 = 0, c0 = 0;
    for (const auto& m : ap.maps) {
      for (std::size_t r = 0; r < x.p1().size(); ++r)
        for (std::size_t c = 0; c < m.f1.source().size(); ++c) g1.at(r, c1 + c) = m.f1.at(r, c);
      for (std::size_t r = 0; r < x.p0().size(); ++r)
        for (std::size_t c = 0; c < m.f0.source().size(); ++c) g0.at(r, c0 + c) = m.f0.at(r, c);
      c1 += m.f1.source().size();
      c0 += m.f0.source().size();
    }
  }
  // cocone(g): Y1 -> Y0 + X1 -> X0 in degrees -1, 0, 1.
  Summands mid = y.p0();
  mid.insert(mid.end(), x.p1().begin(), x.p1().end());
  ProjComplex c{alg, -1, {y.p1(), mid, x.p0()},
                {ProjMap::vstack(-y.differential(), g1), ProjMap::hstack(g0, x.differential())}};
  return replace_slot(t, i, minimize(std::move(c)), -1);
}

SiltingRecord mutate(const SiltingRecord& t, std::size_t i) {
  try {
    return left_mutation(t, i);
  } catch (const MutationNotTwoTerm&) {
    return right_mutation(t, i);
  }
}

std::vector<IntVector> record_key(const SiltingRecord& r) {
  std::vector<IntVector> key;
  for (const auto& s : r.summands) key.push_back(s.g_vector());
  std::sort(key.begin(), key.end());
  return key;
}

namespace {

bool records_isomorphic(const SiltingRecord& a, const SiltingRecord& b) {
  std::vector<bool> used(b.summands.size(), false);
  for (const auto& x : a.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < b.summands.size() && !matched; ++j) {
      if (used[j] || !isomorphic(x, b.summands[j])) continue;
      used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

SiltingEnumeration enumerate_silting(const AlgebraPtr& alg, std::size_t budget) {
  if (budget == 0) throw BudgetInvalid("budget must be at least 1");
  SiltingEnumeration out;
  std::map<std::vector<IntVector>, std::size_t> seen;
  out.records.push_back(root_record(alg));
  seen.emplace(record_key(out.records.front()), 0);
  const std::size_t n = alg->vertex_count();
  for (std::size_t p = 0; p < out.records.size(); ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      SiltingRecord next = mutate(out.records[p], i);
      auto key = record_key(next);
      auto it = seen.find(key);
      if (it != seen.end()) {
        if (!records_isomorphic(next, out.records[it->second]))
          throw Error("records share g-vectors but are not isomorphic");
        continue;
      }
      if (out.records.size() >= budget) return out;
      seen.emplace(std::move(key), out.records.size());
      out.records.push_back(std::move(next));
    }
  }
  out.exhausted = true;
  return out;
}

CVectorReport cvectors(const SiltingEnumeration& e) {
  CVectorReport rep;
  rep.records = e.records.size();
  rep.exhausted = e.exhausted;
  for (const auto& r : e.records) {
    rep.c_matrices.push_back(r.c_matrix);
    for (std::size_t j = 0; j < r.c_matrix.cols(); ++j) {
      IntVector c = r.c_matrix.col(j);
      rep.cv.insert(c);
      switch (classify_sign(c)) {
        case SignClass::Positive: rep.cv_plus.insert(c); break;
        case SignClass::Negative: rep.cv_minus.insert(c); break;
        default:
          rep.violations.push_back("column " + std::to_string(j + 1) + " of record " + to_compact(r.g_matrix) +
                                   " is " + to_string(classify_sign(c)));
      }
    }
  }
  return rep;
}

CVectorReport cvectors(const AlgebraPtr& alg, std::size_t budget) { return cvectors(enumerate_silting(alg, budget)); }

std::pair<std::size_t, std::size_t> hom_profile(const TwoTermComplex& t, const Representation& m) {
  RatMatrix e = evaluation_matrix(t.differential(), m);
  const std::size_t r = rat_rank(e);
  return {e.cols() - r, e.rows() - r};
}

SymmetryReport check_symmetries(const AlgebraPtr& alg, std::size_t budget) {
  CVectorReport a = cvectors(alg, budget);
  CVectorReport b = cvectors(alg->opposite(), budget);
  if (!a.exhausted || !b.exhausted) throw NotExhausted("silting enumeration did not finish within the budget");
  auto negated = [](const std::set<IntVector>& s) {
    std::set<IntVector> out;
    for (const auto& v : s) out.insert(negate(v));
    return out;
  };
  SymmetryReport rep;
  rep.negative_is_minus_positive = a.cv_minus == negated(a.cv_plus);
  rep.opposite_negates = a.cv == negated(b.cv);
  rep.opposite_positive_equal = a.cv_plus == b.cv_plus;
  if (!rep.negative_is_minus_positive) rep.violations.push_back("cv- differs from -cv+");
  if (!rep.opposite_negates) rep.violations.push_back("cv(A) differs from -cv(A^op)");
  if (!rep.opposite_positive_equal) rep.violations.push_back("cv+(A) differs from cv+(A^op)");
  for (const auto& v : a.violations) rep.violations.push_back(v);
  for (const auto& v : b.violations) rep.violations.push_back("opposite: " + v);
  return rep;
}

}  // namespace cvec
