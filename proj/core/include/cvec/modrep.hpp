#pragma once

// Finite-dimensional right modules as quiver representations.
//
// A representation assigns V_v = M e_v to each vertex and to each arrow
// a: s -> t the matrix of right multiplication by a, a map V_s -> V_t.
// A path a_1 ... a_k therefore acts as M_{a_k} ... M_{a_1}.

#include <cstddef>
#include <set>
#include <vector>

#include "cvec/algebra.hpp"
#include "cvec/projective.hpp"

namespace cvec {

class Representation {
 public:
  Representation() = default;
  // maps[a] is indexed like the quiver's arrow list. Validates shapes,
  // every relation, and the vanishing of paths of length L.
  Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<RatMatrix> maps);
  static Representation zero(AlgebraPtr alg);
  // Skips validation; for data produced by the library itself.
  static Representation trusted(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<RatMatrix> maps);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  std::size_t total_dimension() const;
  const RatMatrix& map(std::size_t arrow) const { return maps_.at(arrow); }
  const std::vector<RatMatrix>& maps() const { return maps_; }
  IntVector dimension_vector() const;
  bool is_zero() const { return total_dimension() == 0; }

  RatMatrix path_action(const Path& p) const;
  // Right multiplication by x in e_from A e_to, as a map V_from -> V_to.
  RatMatrix action(const AlgElement& x, std::size_t from, std::size_t to) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.alg_->same_as(*b.alg_) && a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<RatMatrix> maps_;
};

// Per-vertex linear maps commuting with the arrow actions.
struct Morphism {
  std::vector<RatMatrix> components;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

Morphism compose(const Morphism& g, const Morphism& f);
Morphism identity_morphism(const Representation& m);
bool is_morphism(const Representation& m, const Representation& n, const Morphism& f);

struct HomSpace {
  std::vector<Morphism> basis;
  std::size_t dimension() const { return basis.size(); }
};

HomSpace hom(const Representation& m, const Representation& n);
// Dimension only, via the projective presentation of m.
std::size_t hom_dim(const Representation& m, const Representation& n);

// Submodule spanned per vertex by the columns of `basis[v]`; the columns
// must be independent and the span closed under the arrow actions.
Representation submodule(const Representation& m, const std::vector<RatMatrix>& basis);
// Quotient by such a submodule, with the projection.
std::pair<Representation, Morphism> quotient(const Representation& m, const std::vector<RatMatrix>& basis);
Representation kernel(const Representation& m, const Morphism& f);
Representation image(const Representation& n, const Morphism& f);
Representation cokernel(const Representation& n, const Morphism& f);
Representation direct_sum(const Representation& a, const Representation& b);

// The module P_S; its basis at w follows ProjMap::at_vertex.
Representation projective_module(AlgebraPtr alg, const Summands& s);
Representation projective(AlgebraPtr alg, std::size_t v);
Representation simple(AlgebraPtr alg, std::size_t v);
Representation cokernel(const ProjMap& d);
Representation kernel(const ProjMap& d);

struct ProjPresentation {
  ProjMap differential;  // P1 -> P0
  const Summands& p1() const { return differential.source(); }
  const Summands& p0() const { return differential.target(); }
};

ProjPresentation min_proj_presentation(const Representation& m);
IntVector index_and_g(const Representation& m);

// Hom(P0, N) -> Hom(P1, N), phi |-> phi d, with Hom(P_S, N) = (+)_c N e_{S[c]}.
RatMatrix evaluation_matrix(const ProjMap& d, const Representation& n);

Representation transpose(const Representation& m);
// The k-dual, a module over the opposite algebra.
Representation dual(const Representation& m);
Representation ar_translate(const Representation& m);
std::size_t ext1_dim(const Representation& m, const Representation& n);

bool is_tau_rigid(const Representation& m);
bool is_exceptional(const Representation& m);
bool is_indecomposable(const Representation& m);
// Splits m into summands with local endomorphism rings where a rational
// eigenvalue makes an idempotent visible (Fitting decomposition).
std::vector<Representation> decompose_module(const Representation& m);

// (P1^M + Q --(d, 0)--> P0^M) for a pair with Hom(Q, M) = 0.
TwoTermComplex support_pair_to_silting(const Representation& m, const Summands& q);
Representation h0(const TwoTermComplex& t);
Representation h_minus1(const TwoTermComplex& t);

std::set<IntVector> positive_roots(const IntMatrix& cartan, std::size_t height_bound);

}  // namespace cvec
