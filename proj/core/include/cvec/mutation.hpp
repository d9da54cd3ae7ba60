#pragma once

// Matrix mutation, principal coefficients, and exploration of cluster
// patterns. Indices are zero-based in this API; the CLI and the JSON
// formats present them one-based.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cvec/exactmat.hpp"

namespace cvec {

// An m x n integer matrix whose first n rows (the principal part) are
// skew-symmetrizable. Rows n..m-1 belong to frozen variables.
class ExtendedExchangeMatrix {
 public:
  ExtendedExchangeMatrix(IntMatrix entries, std::size_t rank);

  std::size_t rank() const { return rank_; }
  std::size_t rows() const { return entries_.rows(); }
  const IntMatrix& entries() const { return entries_; }
  IntMatrix principal_part() const { return entries_.block(0, 0, rank_, rank_); }
  IntMatrix coefficient_part() const { return entries_.block(rank_, 0, rows() - rank_, rank_); }

  friend bool operator==(const ExtendedExchangeMatrix&, const ExtendedExchangeMatrix&) = default;
  friend bool operator<(const ExtendedExchangeMatrix& a, const ExtendedExchangeMatrix& b) {
    return a.entries_ < b.entries_;
  }

 private:
  ExtendedExchangeMatrix() = default;
  friend ExtendedExchangeMatrix mutate(const ExtendedExchangeMatrix&, std::size_t);

  IntMatrix entries_;
  std::size_t rank_ = 0;
};

// The entry rule on a raw matrix: column k is the mutation direction and
// must also index a row. Used for both extended and framed square matrices.
IntMatrix mutate_entries(const IntMatrix& b, std::size_t k);

ExtendedExchangeMatrix mutate(const ExtendedExchangeMatrix& b, std::size_t k);
ExtendedExchangeMatrix mutate(ExtendedExchangeMatrix b, std::span<const std::size_t> word);

// [B; E_n]. Throws NotSkewSymmetrizable.
ExtendedExchangeMatrix principal_framing(const IntMatrix& b);

// G = (D C^{-1} D^{-1})^T, the unique matrix with G^T D C = D.
IntMatrix g_matrix_from_c(const IntMatrix& c, const IntMatrix& d);

enum class SignClass { Positive, Negative, Zero, Mixed };

SignClass classify_sign(std::span<const Integer> v);
std::string to_string(SignClass s);

struct PatternSeed {
  ExtendedExchangeMatrix matrix;
  IntMatrix cmatrix;
  IntMatrix gmatrix;
  std::vector<std::size_t> word;  // mutation directions from the root
};

// Root seed of the principally framed pattern of b.
PatternSeed root_seed(const IntMatrix& b);
// Seed obtained by one more mutation; D is the initial skew-symmetrizer.
PatternSeed mutate_seed(const PatternSeed& s, std::size_t k, const IntMatrix& d);

// Minimum over all relabelings of the mutable indices. Frozen rows keep
// their positions; only columns of the coefficient part move.
IntMatrix canonical_form(const ExtendedExchangeMatrix& b);

inline constexpr std::size_t kMaxCanonicalRank = 8;

struct ExploreOptions {
  std::size_t budget = 1000;  // maximal number of seeds
  bool canonicalize = false;
  std::optional<std::size_t> max_depth;  // word length cap, if any
};

struct ExploreResult {
  std::vector<PatternSeed> seeds;  // BFS discovery order
  std::set<IntVector> cvectors;
  bool exhausted = false;
  IntMatrix skew_symmetrizer;
};

ExploreResult explore(const IntMatrix& b, const ExploreOptions& options);

struct Violation {
  std::vector<std::size_t> word;
  std::size_t column = 0;
  std::string what;
};

struct CheckReport {
  std::size_t checked = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Every C-column must be Positive or Negative.
CheckReport check_sign_coherence(std::span<const PatternSeed> seeds);
// G^T D C = D at every seed, with G recomputed from C.
CheckReport check_tropical_duality(std::span<const PatternSeed> seeds, const IntMatrix& d);

struct FiniteTypeResult {
  bool finite = false;
  std::set<IntVector> cvectors;
  std::size_t seeds = 0;
};

FiniteTypeResult finite_type_probe(const IntMatrix& b, std::size_t budget);

// The full 2n x 2n matrix of the framed quiver: principal part B, one
// frozen vertex n+i with an arrow n+i -> i for each mutable i, and the
// frozen-frozen block (bottom right) tracked explicitly.
class FramedSquareMatrix {
 public:
  static FramedSquareMatrix root(const IntMatrix& b);

  std::size_t rank() const { return rank_; }
  const IntMatrix& entries() const { return entries_; }
  IntMatrix frozen_block() const { return entries_.block(rank_, rank_, rank_, rank_); }
  // The first n columns; agrees with the extended exchange matrix.
  IntMatrix extended_part() const { return entries_.block(0, 0, 2 * rank_, rank_); }

 private:
  friend FramedSquareMatrix framed_square_mutate(const FramedSquareMatrix&, std::size_t);
  IntMatrix entries_;
  std::size_t rank_ = 0;
};

FramedSquareMatrix framed_square_mutate(const FramedSquareMatrix& f, std::size_t k);

}  // namespace cvec
