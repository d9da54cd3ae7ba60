#pragma once

// Maps between direct sums of indecomposable projectives, stored as
// matrices over the algebra, and two-term complexes built from them.

#include <cstddef>
#include <span>
#include <vector>

#include "cvec/algebra.hpp"

namespace cvec {

// Vertex labels of the indecomposable summands of a projective module:
// {0, 0, 2} stands for P_1 + P_1 + P_3.
using Summands = std::vector<std::size_t>;

IntVector multiplicities(const Summands& s, std::size_t vertex_count);
Summands summands_from_multiplicities(std::span<const Integer> mult);

// f : P_source -> P_target. Entry (r, c) lies in e_{target[r]} A e_{source[c]}.
class ProjMap {
 public:
  ProjMap() = default;
  ProjMap(AlgebraPtr alg, Summands source, Summands target);
  static ProjMap identity(AlgebraPtr alg, const Summands& s);

  const AlgebraPtr& algebra() const { return alg_; }
  const Summands& source() const { return source_; }
  const Summands& target() const { return target_; }

  AlgElement& at(std::size_t r, std::size_t c) { return entries_[r * source_.size() + c]; }
  const AlgElement& at(std::size_t r, std::size_t c) const { return entries_[r * source_.size() + c]; }

  bool is_zero() const;
  // True when no entry has a nonzero idempotent coefficient.
  bool is_radical() const;
  // Idempotent coefficients: (r, c) holds the coefficient of e_v when
  // target[r] == source[c] == v, zero otherwise. Invertibility of this
  // matrix is invertibility of the map.
  RatMatrix top() const;

  ProjMap& operator+=(const ProjMap& o);
  friend ProjMap operator+(ProjMap a, const ProjMap& b) { return a += b; }
  ProjMap operator-() const;
  friend ProjMap operator-(ProjMap a, const ProjMap& b) { return a += -b; }
  friend ProjMap operator*(const Rational& s, ProjMap f);
  // Composition: (g * f)(x) = g(f(x)).
  friend ProjMap operator*(const ProjMap& g, const ProjMap& f);
  friend bool operator==(const ProjMap& a, const ProjMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.entries_ == b.entries_;
  }

  // Flattened coordinates over the basis of Hom(P_source, P_target).
  RatVector coordinates() const;
  static std::size_t coordinate_count(const Algebra& alg, const Summands& source, const Summands& target);
  static ProjMap from_coordinates(AlgebraPtr alg, Summands source, Summands target, std::span<const Rational> x);
  // Basis of Hom(P_source, P_target), one map per coordinate.
  static std::vector<ProjMap> hom_basis(AlgebraPtr alg, const Summands& source, const Summands& target);

  // The Q-linear map (P_source) e_w -> (P_target) e_w. Basis of (P_S) e_w:
  // summands in order, and within summand c the basis paths from S[c] to w.
  RatMatrix at_vertex(std::size_t w) const;
  // Block diagonal over all vertices; used for trace forms.
  RatMatrix as_linear() const;

  // Keep only the listed rows / columns, in the given order.
  ProjMap select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  // [f g] : P_S + P_S' -> P_T
  static ProjMap hstack(const ProjMap& f, const ProjMap& g);
  // [f; g] : P_S -> P_T + P_T'
  static ProjMap vstack(const ProjMap& f, const ProjMap& g);
  // The dual map Hom(P_target, A) -> Hom(P_source, A) over the opposite algebra.
  ProjMap dual() const;

 private:
  AlgebraPtr alg_;
  Summands source_;
  Summands target_;
  std::vector<AlgElement> entries_;
};

std::size_t projective_dimension_at(const Algebra& alg, const Summands& s, std::size_t w);

// Inverse of an element of e_v A e_v with nonzero idempotent coefficient.
AlgElement local_inverse(const Algebra& alg, const AlgElement& x, std::size_t v);

// A complex P1 --d--> P0 of projectives in degrees -1 and 0.
class TwoTermComplex {
 public:
  TwoTermComplex() = default;
  explicit TwoTermComplex(ProjMap differential) : d_(std::move(differential)) {}

  // 0 -> P (P in degree 0).
  static TwoTermComplex stalk(AlgebraPtr alg, Summands p);
  // P -> 0 (P in degree -1).
  static TwoTermComplex shifted_stalk(AlgebraPtr alg, Summands p);
  static TwoTermComplex direct_sum(std::span<const TwoTermComplex> parts);

  const AlgebraPtr& algebra() const { return d_.algebra(); }
  const Summands& p1() const { return d_.source(); }
  const Summands& p0() const { return d_.target(); }
  const ProjMap& differential() const { return d_; }

  bool is_zero() const { return p1().empty() && p0().empty(); }
  bool is_minimal() const { return d_.is_radical(); }
  // [P0] - [P1] in the basis of indecomposable projectives.
  IntVector g_vector() const;

 private:
  ProjMap d_;
};

// A bounded complex of projectives; terms[i] sits in degree lowest + i and
// differentials[i] maps terms[i] to terms[i + 1].
struct ProjComplex {
  AlgebraPtr alg;
  int lowest = 0;
  std::vector<Summands> terms;
  std::vector<ProjMap> differentials;
};

// Removes contractible summands by Gaussian elimination on differential
// entries with invertible idempotent part. Empty terms are kept, so
// degrees do not move.
ProjComplex minimize(ProjComplex c);
TwoTermComplex minimize(const TwoTermComplex& t);

}  // namespace cvec
