#pragma once

// Finite-dimensional basic algebras kQ/I given by a quiver with relations.
//
// Conventions used throughout the library:
//  * paths compose left to right: pq means first p, then q;
//  * modules are right modules and P_i = e_i A is spanned by the paths
//    starting at i;
//  * Hom_A(P_i, P_j) = e_j A e_i, acting by left multiplication, so the
//    composite of p: P_i -> P_j and q: P_j -> P_k is the product q p.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cvec/exactmat.hpp"

namespace cvec {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::size_t vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }
  std::optional<std::size_t> arrow_index(const std::string& name) const;

  // Length of the longest path, or nullopt when the quiver has a cycle.
  std::optional<std::size_t> longest_path() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::size_t vertices_ = 0;
  std::vector<Arrow> arrows_;
};

struct PathTerm {
  Rational coeff;
  std::vector<std::string> path;  // arrow names, composed left to right
  friend bool operator==(const PathTerm&, const PathTerm&) = default;
};

using Relation = std::vector<PathTerm>;

struct AlgebraPresentation {
  Quiver quiver;
  std::vector<Relation> relations;
  // Paths of length >= this bound lie in the ideal. When absent, the
  // builder derives it for relation-free acyclic quivers.
  std::optional<std::size_t> nilpotency_bound;
  friend bool operator==(const AlgebraPresentation&, const AlgebraPresentation&) = default;
};

AlgebraPresentation opposite(const AlgebraPresentation& p);

struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;  // indices into the quiver's arrow list
  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

// Coordinates of an algebra element in the basis of a PathBasis.
using AlgElement = RatVector;

class PathBasis {
 public:
  explicit PathBasis(const AlgebraPresentation& p);

  std::size_t dimension() const { return elements_.size(); }
  std::size_t vertex_count() const { return vertices_; }
  std::size_t nilpotency_bound() const { return bound_; }
  const Quiver& quiver() const { return quiver_; }

  const Path& element(std::size_t i) const { return elements_.at(i); }
  // Basis indices of e_from A e_to (paths from `from` to `to`).
  const std::vector<std::size_t>& between(std::size_t from, std::size_t to) const;
  // The idempotent e_v has basis index v.
  std::size_t idempotent(std::size_t v) const { return v; }

  AlgElement zero() const { return AlgElement(dimension()); }
  AlgElement unit(std::size_t i) const;
  AlgElement normal_form(const Path& p) const;
  // Sparse product of two basis elements.
  const std::vector<std::pair<std::size_t, Rational>>& product(std::size_t i, std::size_t j) const {
    return table_[i * dimension() + j];
  }
  AlgElement multiply(const AlgElement& x, const AlgElement& y) const;

  std::string label(std::size_t i) const;
  std::string path_label(const Path& p) const;

 private:
  Quiver quiver_;
  std::size_t vertices_ = 0;
  std::size_t bound_ = 0;
  std::vector<Path> elements_;
  std::vector<std::vector<std::size_t>> blocks_;  // from * vertices + to
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, AlgElement> normal_forms_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> table_;
};

PathBasis build_basis(const AlgebraPresentation& p);

// Basis of Hom(P_i, P_j) = e_j A e_i.
std::vector<std::size_t> hom_proj(const PathBasis& b, std::size_t i, std::size_t j);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// A presentation together with its path basis. Shared by every module and
// complex over it; identity of the pointer is the algebra's identity.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static AlgebraPtr create(AlgebraPresentation p);

  const AlgebraPresentation& presentation() const { return presentation_; }
  const PathBasis& basis() const { return basis_; }
  std::size_t vertex_count() const { return basis_.vertex_count(); }
  std::size_t dimension() const { return basis_.dimension(); }

  // Cached; opposite()->opposite() is this algebra while it is alive.
  AlgebraPtr opposite() const;
  // Image of x under the anti-isomorphism A -> A^op (reverse every path).
  AlgElement to_opposite(const AlgElement& x) const;

  bool same_as(const Algebra& other) const {
    return this == &other || presentation_ == other.presentation_;
  }

 private:
  struct Token {};

 public:
  Algebra(Token, AlgebraPresentation p);

 private:
  AlgebraPresentation presentation_;
  PathBasis basis_;
  mutable std::mutex opposite_mutex_;
  mutable AlgebraPtr opposite_;
  mutable std::weak_ptr<const Algebra> parent_;
};

}  // namespace cvec
