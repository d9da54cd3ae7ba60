#pragma once

// Bundled examples: exchange matrices, algebras and their indecomposable
// modules. The data/ directory ships the same objects as JSON files.

#include <string>
#include <vector>

#include "cvec/algebra.hpp"
#include "cvec/modrep.hpp"

namespace cvec {

// "a2", "a3", "b2", "kronecker", "markov".
std::vector<std::string> matrix_fixture_names();
IntMatrix fixture_matrix(const std::string& name);

// "a2", "a3" (linear path algebras), "kronecker", "nakayama3" (cyclic, rad^2 = 0).
std::vector<std::string> algebra_fixture_names();
AlgebraPresentation fixture_algebra(const std::string& name);

// Path algebra of 1 -> 2 -> ... -> n, arrows named a1, a2, ...
AlgebraPresentation linear_path_algebra(std::size_t n);
// Cyclic quiver on n vertices modulo all paths of length 2.
AlgebraPresentation cyclic_nakayama(std::size_t n);

// Symmetric Cartan matrix of type A_n.
IntMatrix cartan_a(std::size_t n);

struct NamedModule {
  std::string name;
  Representation module;
};

// Interval module M[i, j] (zero-based, i <= j) over the linear path algebra.
Representation interval_module(const AlgebraPtr& alg, std::size_t i, std::size_t j);
// Every indecomposable of a linear path algebra (intervals) or of the
// cyclic rad^2-zero Nakayama algebra (simples and projectives).
std::vector<NamedModule> fixture_modules(const AlgebraPtr& alg, const std::string& name);

}  // namespace cvec
