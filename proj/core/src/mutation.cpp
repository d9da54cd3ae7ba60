#include "cvec/mutation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace cvec {

ExtendedExchangeMatrix::ExtendedExchangeMatrix(IntMatrix entries, std::size_t rank)
    : entries_(std::move(entries)), rank_(rank) {
  if (entries_.cols() != rank_ || entries_.rows() < rank_)
    throw DimensionMismatch("extended exchange matrix must be m x n with m >= n");
  if (!skew_symmetrizer(principal_part()))
    throw NotSkewSymmetrizable("principal part is not skew-symmetrizable");
}

IntMatrix mutate_entries(const IntMatrix& b, std::size_t k) {
  if (k >= b.cols() || k >= b.rows()) throw IndexOutOfRange("mutation index out of range");
  IntMatrix out = b;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
        continue;
      }
      Integer prod = b(i, k) * b(k, j);
      if (prod > 0) out(i, j) = b(i, j) + sgn(b(i, k)) * prod;
    }
  }
  return out;
}

ExtendedExchangeMatrix mutate(const ExtendedExchangeMatrix& b, std::size_t k) {
  if (k >= b.rank()) throw IndexOutOfRange("mutation index " + std::to_string(k + 1) + " exceeds rank");
  ExtendedExchangeMatrix out;
  out.entries_ = mutate_entries(b.entries_, k);
  out.rank_ = b.rank_;
  return out;
}

ExtendedExchangeMatrix mutate(ExtendedExchangeMatrix b, std::span<const std::size_t> word) {
  for (std::size_t k : word) b = mutate(b, k);
  return b;
}

ExtendedExchangeMatrix principal_framing(const IntMatrix& b) {
  if (!b.is_square()) throw DimensionMismatch("principal framing needs a square matrix");
  if (!skew_symmetrizer(b)) throw NotSkewSymmetrizable("matrix is not skew-symmetrizable");
  return ExtendedExchangeMatrix(IntMatrix::vstack(b, IntMatrix::identity(b.rows())), b.rows());
}

IntMatrix g_matrix_from_c(const IntMatrix& c, const IntMatrix& d) {
  if (!c.is_square() || !d.is_square() || c.rows() != d.rows())
    throw DimensionMismatch("g_matrix_from_c: shapes differ");
  IntMatrix c_inv = unimodular_inverse(c);
  const std::size_t n = c.rows();
  IntMatrix g(n, n);
  // (D C^{-1} D^{-1})^T has (i,j) entry d_j (C^{-1})_{ji} / d_i.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer num = d(j, j) * c_inv(j, i);
      if (num % d(i, i) != 0)
        throw NonIntegerResult("tropical duality produced a non-integer G entry");
      g(i, j) = num / d(i, i);
    }
  }
  return g;
}

SignClass classify_sign(std::span<const Integer> v) {
  bool pos = false, neg = false;
  for (const auto& x : v) {
    if (x > 0) pos = true;
    if (x < 0) neg = true;
  }
  if (pos && neg) return SignClass::Mixed;
  if (pos) return SignClass::Positive;
  if (neg) return SignClass::Negative;
  return SignClass::Zero;
}

std::string to_string(SignClass s) {
  switch (s) {
    case SignClass::Positive: return "positive";
    case SignClass::Negative: return "negative";
    case SignClass::Zero: return "zero";
    case SignClass::Mixed: return "mixed";
  }
  return "unknown";
}

PatternSeed root_seed(const IntMatrix& b) {
  auto framed = principal_framing(b);
  const std::size_t n = b.rows();
  return PatternSeed{framed, IntMatrix::identity(n), IntMatrix::identity(n), {}};
}

PatternSeed mutate_seed(const PatternSeed& s, std::size_t k, const IntMatrix& d) {
  PatternSeed out{mutate(s.matrix, k), {}, {}, s.word};
  out.word.push_back(k);
  out.cmatrix = out.matrix.coefficient_part();
  out.gmatrix = g_matrix_from_c(out.cmatrix, d);
  return out;
}

IntMatrix canonical_form(const ExtendedExchangeMatrix& b) {
  const std::size_t n = b.rank();
  const std::size_t m = b.rows();
  if (n > kMaxCanonicalRank)
    throw RankTooLargeForCanonicalization("canonicalization supports rank <= 8");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const IntMatrix& e = b.entries();
  IntMatrix best;
  bool have = false;
  IntMatrix candidate(m, n);
  do {
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t src_row = i < n ? perm[i] : i;
      for (std::size_t j = 0; j < n; ++j) candidate(i, j) = e(src_row, perm[j]);
    }
    if (!have || candidate < best) {
      best = candidate;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

ExploreResult explore(const IntMatrix& b, const ExploreOptions& options) {
  if (options.budget < 1) throw BudgetInvalid("budget must be at least 1");
  if (!b.is_square()) throw DimensionMismatch("explore needs a square exchange matrix");
  if (options.canonicalize && b.rows() > kMaxCanonicalRank)
    throw RankTooLargeForCanonicalization("canonicalization supports rank <= 8");
  auto d = skew_symmetrizer(b);
  if (!d) throw NotSkewSymmetrizable("matrix is not skew-symmetrizable");

  ExploreResult result;
  result.skew_symmetrizer = *d;
  auto key_of = [&](const ExtendedExchangeMatrix& m) {
    return options.canonicalize ? canonical_form(m) : m.entries();
  };

  std::set<IntMatrix> seen;
  std::deque<std::size_t> frontier;
  result.seeds.push_back(root_seed(b));
  seen.insert(key_of(result.seeds.front().matrix));
  frontier.push_back(0);
  bool truncated = false;
  bool budget_hit = false;

  while (!frontier.empty() && !budget_hit) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    const bool at_depth_cap = options.max_depth && result.seeds[idx].word.size() >= *options.max_depth;
    for (std::size_t k = 0; k < b.rows(); ++k) {
      PatternSeed child = mutate_seed(result.seeds[idx], k, *d);
      IntMatrix key = key_of(child.matrix);
      if (seen.count(key)) continue;
      if (at_depth_cap) {
        truncated = true;
        break;
      }
      if (result.seeds.size() >= options.budget) {
        budget_hit = true;
        break;
      }
      seen.insert(std::move(key));
      result.seeds.push_back(std::move(child));
      frontier.push_back(result.seeds.size() - 1);
    }
  }
  result.exhausted = !budget_hit && !truncated && frontier.empty();
  for (const auto& s : result.seeds)
    for (std::size_t j = 0; j < s.cmatrix.cols(); ++j) result.cvectors.insert(s.cmatrix.col(j));
  return result;
}

CheckReport check_sign_coherence(std::span<const PatternSeed> seeds) {
  CheckReport report;
  for (const auto& s : seeds) {
    for (std::size_t j = 0; j < s.cmatrix.cols(); ++j) {
      ++report.checked;
      auto cls = classify_sign(s.cmatrix.col(j));
      if (cls == SignClass::Positive || cls == SignClass::Negative) continue;
      report.violations.push_back({s.word, j, "c-vector classified " + to_string(cls)});
    }
  }
  return report;
}

CheckReport check_tropical_duality(std::span<const PatternSeed> seeds, const IntMatrix& d) {
  CheckReport report;
  for (const auto& s : seeds) {
    ++report.checked;
    try {
      IntMatrix g = g_matrix_from_c(s.cmatrix, d);
      if (g != s.gmatrix) report.violations.push_back({s.word, 0, "stored G differs from duality G"});
      if (g.transpose() * d * s.cmatrix != d) report.violations.push_back({s.word, 0, "G^T D C != D"});
    } catch (const Error& e) {
      report.violations.push_back({s.word, 0, e.what()});
    }
  }
  return report;
}

FiniteTypeResult finite_type_probe(const IntMatrix& b, std::size_t budget) {
  ExploreOptions opts;
  opts.budget = budget;
  opts.canonicalize = b.rows() <= kMaxCanonicalRank;
  auto r = explore(b, opts);
  return FiniteTypeResult{r.exhausted, std::move(r.cvectors), r.seeds.size()};
}

FramedSquareMatrix FramedSquareMatrix::root(const IntMatrix& b) {
  if (!b.is_square()) throw DimensionMismatch("framed square matrix needs a square principal part");
  if (!skew_symmetrizer(b)) throw NotSkewSymmetrizable("matrix is not skew-symmetrizable");
  const std::size_t n = b.rows();
  FramedSquareMatrix f;
  f.rank_ = n;
  f.entries_ = IntMatrix(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) f.entries_(i, j) = b(i, j);
    f.entries_(n + i, i) = 1;   // arrow n+i -> i
    f.entries_(i, n + i) = -1;
  }
  return f;
}

FramedSquareMatrix framed_square_mutate(const FramedSquareMatrix& f, std::size_t k) {
  if (k >= f.rank_) throw IndexOutOfRange("framed square mutation only at mutable vertices");
  FramedSquareMatrix out;
  out.rank_ = f.rank_;
  out.entries_ = mutate_entries(f.entries_, k);
  return out;
}

}  // namespace cvec
