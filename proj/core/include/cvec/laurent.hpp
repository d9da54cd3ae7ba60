#pragma once

// Cluster variables with principal coefficients as exact Laurent
// polynomials in x_1..x_n (invertible) and x_{n+1}..x_{2n} (coefficients).

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cvec/exactmat.hpp"
#include "cvec/mutation.hpp"

namespace cvec {

using Exponent = std::vector<std::int64_t>;

class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Integer& c);
  static LaurentPoly monomial(std::size_t nvars, Exponent e, const Integer& c = 1);
  static LaurentPoly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Sorted lexicographically by exponent.
  const std::map<Exponent, Integer>& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly pow(unsigned e) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

  // True when every exponent at index >= first_polynomial_var is >= 0.
  bool polynomial_in_tail(std::size_t first_polynomial_var) const;

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Integer& c);

  std::size_t nvars_ = 0;
  std::map<Exponent, Integer> terms_;
};

// Exact quotient f / g in the Laurent ring. Throws NonExactDivision when
// g does not divide f.
LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g);

// Degree of a monomial under deg(x_i) = e_i, deg(x_{n+i}) = -b_i where
// b_i is column i of the initial principal part.
IntVector monomial_degree(std::span<const std::int64_t> e, const IntMatrix& initial_b);
// Common degree of all terms. Throws NotHomogeneous, or Error for zero input.
IntVector g_vector(const LaurentPoly& p, const IntMatrix& initial_b);

struct LaurentSeed {
  ExtendedExchangeMatrix matrix;
  std::vector<LaurentPoly> variables;
  IntMatrix initial_b;  // defines the grading
  std::vector<std::size_t> word;

  IntMatrix g_matrix() const;
};

LaurentSeed laurent_root(const IntMatrix& b);
LaurentSeed exchange_step(const LaurentSeed& s, std::size_t k);
LaurentSeed walk(const IntMatrix& b, std::span<const std::size_t> word);

struct GMismatch {
  std::vector<std::size_t> word;
  IntMatrix grading_g;
  IntMatrix duality_g;
};

struct DuplicateG {
  IntVector g;
  LaurentPoly first;
  LaurentPoly second;
};

struct GCrossCheckReport {
  std::size_t seeds_checked = 0;
  std::size_t distinct_variables = 0;
  std::vector<GMismatch> mismatches;
  std::vector<DuplicateG> duplicates;
  bool ok() const { return mismatches.empty() && duplicates.empty(); }
};

// Explores the labeled pattern up to the budget (and depth, if given) and
// compares grading g-vectors with duality g-vectors at every seed.
GCrossCheckReport cross_check_g(const IntMatrix& b, std::size_t budget,
                                std::optional<std::size_t> max_depth = std::nullopt);

}  // namespace cvec
