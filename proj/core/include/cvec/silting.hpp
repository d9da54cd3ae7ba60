#pragma once

// Two-term silting complexes: homotopy Hom, decomposition, mutation, and
// the G-/C-matrix engine built on breadth-first mutation.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cvec/modrep.hpp"
#include "cvec/projective.hpp"

namespace cvec {

// A chain map T -> U of two-term complexes: f1 : T1 -> U1, f0 : T0 -> U0.
struct ChainMap {
  ProjMap f1;
  ProjMap f0;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);

// Basis of all chain maps T -> U (not reduced modulo homotopy).
std::vector<ChainMap> chain_maps(const TwoTermComplex& t, const TwoTermComplex& u);

// dim Hom_K(T, Sigma^s U) for s in {-1, 0, 1}.
std::size_t hom_shift(const TwoTermComplex& t, const TwoTermComplex& u, int s);

bool is_presilting(const TwoTermComplex& t);
bool is_silting(const TwoTermComplex& t);

// Indecomposable summands of a minimal complex: the minimal presentations
// of the summands of H0, followed by one shifted stalk per leftover P1 summand.
std::vector<TwoTermComplex> decompose(const TwoTermComplex& t);

// For indecomposable minimal complexes.
bool isomorphic(const TwoTermComplex& x, const TwoTermComplex& y);

struct SiltingRecord {
  TwoTermComplex complex;
  std::vector<TwoTermComplex> summands;
  IntMatrix g_matrix;  // column j is the g-vector of summands[j]
  IntMatrix c_matrix;  // (G^T)^{-1}
  std::vector<std::size_t> word;
};

SiltingRecord make_record(std::vector<TwoTermComplex> summands, std::vector<std::size_t> word);
SiltingRecord root_record(const AlgebraPtr& alg);

SiltingRecord left_mutation(const SiltingRecord& t, std::size_t i);
SiltingRecord right_mutation(const SiltingRecord& t, std::size_t i);
// The irreducible mutation at slot i: left if it stays two-term, else right.
SiltingRecord mutate(const SiltingRecord& t, std::size_t i);

// Sorted g-vectors of the summands; equal keys mean isomorphic records.
std::vector<IntVector> record_key(const SiltingRecord& r);

struct SiltingEnumeration {
  std::vector<SiltingRecord> records;
  bool exhausted = false;
};

SiltingEnumeration enumerate_silting(const AlgebraPtr& alg, std::size_t budget);

struct CVectorReport {
  std::set<IntVector> cv, cv_plus, cv_minus;
  std::vector<IntMatrix> c_matrices;
  std::vector<std::string> violations;
  std::size_t records = 0;
  bool exhausted = false;
};

CVectorReport cvectors(const SiltingEnumeration& e);
CVectorReport cvectors(const AlgebraPtr& alg, std::size_t budget);

// (dim Hom(T, M), dim Hom(T, Sigma M)).
std::pair<std::size_t, std::size_t> hom_profile(const TwoTermComplex& t, const Representation& m);

struct SymmetryReport {
  bool negative_is_minus_positive = false;  // cv- = -cv+
  bool opposite_negates = false;            // cv(A) = -cv(A^op)
  bool opposite_positive_equal = false;     // cv+(A) = cv+(A^op)
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

SymmetryReport check_symmetries(const AlgebraPtr& alg, std::size_t budget);

}  // namespace cvec
