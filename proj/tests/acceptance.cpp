// One line per acceptance criterion: PASS/FAIL, name, elapsed time against
// its limit, and a short detail. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "cvec/errors.hpp"
#include "cvec/fixtures.hpp"
#include "cvec/laurent.hpp"
#include "cvec/modrep.hpp"
#include "cvec/mutation.hpp"
#include "cvec/silting.hpp"
#include "oracles.hpp"

using namespace cvec;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && s >= limit_s) {
    o.ok = false;
    o.detail = "too slow";
  }
  failures += !o.ok;
  std::printf("%s  %-44s %7.3fs / %4.0fs  %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), s, limit_s, o.detail.c_str());
  std::fflush(stdout);
}

AlgebraPtr alg_of(const std::string& name) { return Algebra::create(fixture_algebra(name)); }

IntVector from_oracle(const oracle::Vec& v) {
  IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

oracle::Vec to_oracle(const IntVector& v) {
  oracle::Vec out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

IntVector abs_vector(const IntVector& v) {
  IntVector out;
  for (const auto& x : v) out.push_back(abs(x));
  return out;
}

// Visits every word of length <= depth over n letters, carrying state.
template <class State, class Step, class Visit>
void all_words(const State& s, std::size_t n, std::size_t depth, Step step, Visit visit) {
  visit(s);
  if (depth == 0) return;
  for (std::size_t k = 0; k < n; ++k) all_words(step(s, k), n, depth - 1, step, visit);
}

std::size_t pair_oracle_count(const std::string& name) {
  AlgebraPtr alg = alg_of(name);
  auto mods = fixture_modules(alg, name);
  std::vector<oracle::Vec> dims;
  std::vector<std::vector<long>> homs(mods.size(), std::vector<long>(mods.size()));
  for (std::size_t i = 0; i < mods.size(); ++i) {
    dims.push_back(to_oracle(mods[i].module.dimension_vector()));
    for (std::size_t j = 0; j < mods.size(); ++j) homs[i][j] = static_cast<long>(hom_dim(mods[i].module, mods[j].module));
  }
  std::vector<std::pair<int, int>> arrows;
  for (const auto& a : alg->presentation().quiver.arrows())
    arrows.emplace_back(static_cast<int>(a.source), static_cast<int>(a.target));
  return oracle::count_support_tilting_pairs(dims, homs, arrows, alg->vertex_count());
}

}  // namespace

int main() {
  criterion("mutation involution + principal closure", 1, [] {
    Outcome o;
    std::size_t words = 0;
    for (const auto& name : matrix_fixture_names()) {
      ExtendedExchangeMatrix root = principal_framing(fixture_matrix(name));
      const std::size_t n = root.rank();
      // Words of length 7 plus the checked direction reach length 8.
      all_words(
          root, n, 7, [](const ExtendedExchangeMatrix& b, std::size_t k) { return mutate(b, k); },
          [&](const ExtendedExchangeMatrix& b) {
            ++words;
            for (std::size_t k = 0; k < n; ++k) {
              ExtendedExchangeMatrix m = mutate(b, k);
              o.require(mutate(m, k) == b, name + ": involution fails");
              o.require(m.principal_part() == mutate_entries(b.principal_part(), k), name + ": closure fails");
            }
          });
    }
    if (o.ok) o.detail = std::to_string(words) + " words";
    return o;
  });

  auto seeds_for = [](const std::string& name) {
    if (name == "kronecker" || name == "markov") return explore(fixture_matrix(name), ExploreOptions{1000000, false, 8});
    return explore(fixture_matrix(name), ExploreOptions{100000, true, std::nullopt});
  };

  criterion("sign-coherence", 5, [&] {
    Outcome o;
    const std::vector<std::pair<std::string, std::size_t>> finite{{"a2", 5}, {"a3", 14}, {"b2", 6}};
    std::size_t total = 0;
    for (const auto& [name, count] : finite) {
      ExploreResult r = seeds_for(name);
      o.require(r.exhausted && r.seeds.size() == count, name + ": " + std::to_string(r.seeds.size()) + " seeds");
      o.require(check_sign_coherence(r.seeds).ok(), name + ": mixed column");
      total += r.seeds.size();
    }
    for (const std::string name : {"kronecker", "markov"}) {
      ExploreResult r = seeds_for(name);
      o.require(check_sign_coherence(r.seeds).ok(), name + ": mixed column");
      total += r.seeds.size();
    }
    if (o.ok) o.detail = std::to_string(total) + " seeds";
    return o;
  });

  criterion("tropical duality G^T D C = D", 5, [&] {
    Outcome o;
    std::size_t total = 0;
    for (const auto& name : matrix_fixture_names()) {
      ExploreResult r = seeds_for(name);
      o.require(check_tropical_duality(r.seeds, r.skew_symmetrizer).ok(), name + ": duality fails");
      total += r.seeds.size();
    }
    o.require(seeds_for("b2").skew_symmetrizer == IntMatrix{{2, 0}, {0, 1}}, "B2 symmetrizer is not diag(2,1)");
    if (o.ok) o.detail = std::to_string(total) + " seeds";
    return o;
  });

  criterion("pentagon periodicity", 1, [] {
    Outcome o;
    ExtendedExchangeMatrix root = principal_framing(fixture_matrix("a2"));
    const IntMatrix e = root.entries();
    IntMatrix swapped(e.rows(), e.cols());
    for (std::size_t i = 0; i < e.rows(); ++i)
      for (std::size_t j = 0; j < 2; ++j) swapped(i < 2 ? 1 - i : i, 1 - j) = e(i, j);
    ExtendedExchangeMatrix b = root;
    for (std::size_t k : {0, 1, 0, 1, 0}) b = mutate(b, k);
    o.require(b.entries() == swapped, "length 5 is not the swapped matrix");
    for (std::size_t k : {1, 0, 1, 0, 1}) b = mutate(b, k);
    o.require(b == root, "length 10 is not the identity");
    return o;
  });

  criterion("Laurent phenomenon + g-vector grading", 10, [] {
    Outcome o;
    std::size_t vars = 0;
    for (const std::string name : {"a2", "a3"}) {
      IntMatrix b = fixture_matrix(name);
      GCrossCheckReport r = cross_check_g(b, 1000000, 6);
      o.require(r.mismatches.empty(), name + ": grading g differs from duality g");
      o.require(r.duplicates.empty(), name + ": distinct variables share a g-vector");
      vars += r.distinct_variables;
      // Every word, including those revisiting seeds, divides exactly.
      all_words(
          laurent_root(b), b.rows(), 6, [](const LaurentSeed& s, std::size_t k) { return exchange_step(s, k); },
          [&](const LaurentSeed& s) {
            for (const auto& v : s.variables) {
              o.require(v.polynomial_in_tail(b.rows()), name + ": negative coefficient exponent");
              (void)g_vector(v, b);
            }
          });
    }
    if (o.ok) o.detail = std::to_string(vars) + " distinct variables";
    return o;
  });

  criterion("silting counts vs tau-rigid pair oracle", 30, [] {
    Outcome o;
    for (const auto& [name, count] : std::vector<std::pair<std::string, std::size_t>>{{"a2", 5}, {"a3", 14}}) {
      SiltingEnumeration e = enumerate_silting(alg_of(name), 10000);
      const std::size_t oracle_count = pair_oracle_count(name);
      o.require(e.exhausted, name + ": not exhausted");
      o.require(e.records.size() == count && oracle_count == count,
                name + ": " + std::to_string(e.records.size()) + " records, oracle " + std::to_string(oracle_count));
    }
    if (o.ok) o.detail = "5 and 14";
    return o;
  });

  criterion("hereditary cv+ = positive roots", 30, [] {
    Outcome o;
    for (std::size_t n : {2, 3}) {
      CVectorReport r = cvectors(alg_of("a" + std::to_string(n)), 10000);
      std::set<IntVector> roots = positive_roots(cartan_a(n), 64);
      o.require(r.exhausted && r.cv_plus == roots && roots.size() == n * (n + 1) / 2,
                "A" + std::to_string(n) + ": cv+ differs from roots");
    }
    return o;
  });

  criterion("Nakayama cv+ = radical-quotient dims", 30, [] {
    Outcome o;
    CVectorReport r = cvectors(alg_of("nakayama3"), 10000);
    std::set<IntVector> expected;
    for (const auto& v : oracle::nakayama_radical_quotients(3)) expected.insert(from_oracle(v));
    o.require(r.exhausted && r.cv_plus == expected && expected.size() == 6, "cv+ differs from oracle");
    return o;
  });

  criterion("c-vector realization by hom profile (A2)", 5, [] {
    Outcome o;
    AlgebraPtr alg = alg_of("a2");
    auto mods = fixture_modules(alg, "a2");
    std::size_t checked = 0;
    for (const auto& r : enumerate_silting(alg, 100).records)
      for (std::size_t j = 0; j < r.c_matrix.cols(); ++j) {
        const IntVector c = r.c_matrix.col(j);
        const bool positive = classify_sign(c) == SignClass::Positive;
        const Representation* m = nullptr;
        for (const auto& nm : mods)
          if (nm.module.dimension_vector() == abs_vector(c)) m = &nm.module;
        o.require(m != nullptr, "no fixture module for a C column");
        if (!m) continue;
        const auto want = positive ? std::make_pair<std::size_t, std::size_t>(1, 0) : std::make_pair<std::size_t, std::size_t>(0, 1);
        o.require(hom_profile(r.complex, *m) == want, "profile mismatch");
        ++checked;
      }
    if (o.ok) o.detail = std::to_string(checked) + " columns";
    return o;
  });

  criterion("symmetries cv- = -cv+, opposite algebra", 30, [] {
    Outcome o;
    for (const std::string name : {"a2", "a3", "nakayama3"}) {
      SymmetryReport r = check_symmetries(alg_of(name), 10000);
      o.require(r.ok() && r.negative_is_minus_positive && r.opposite_negates && r.opposite_positive_equal,
                name + ": symmetry fails");
    }
    return o;
  });

  criterion("transpose identity g(Tr M) = -g(M)", 5, [] {
    Outcome o;
    std::size_t checked = 0;
    for (const std::string name : {"a2", "a3", "nakayama3"}) {
      AlgebraPtr alg = alg_of(name);
      for (const auto& m : fixture_modules(alg, name)) {
        if (min_proj_presentation(m.module).p1().empty() || !is_indecomposable(m.module) || !is_tau_rigid(m.module))
          continue;
        IntVector g = index_and_g(m.module);
        IntVector gt = index_and_g(transpose(m.module));
        o.require(gt == negate(g), name + " " + m.name + ": g(Tr M) != -g(M)");
        ++checked;
      }
    }
    if (o.ok) o.detail = std::to_string(checked) + " modules";
    return o;
  });

  criterion("framed square frozen block stays zero", 5, [] {
    Outcome o;
    std::size_t words = 0;
    for (const std::string name : {"a3", "markov"}) {
      all_words(
          FramedSquareMatrix::root(fixture_matrix(name)), 3, 8,
          [](const FramedSquareMatrix& f, std::size_t k) { return framed_square_mutate(f, k); },
          [&](const FramedSquareMatrix& f) {
            ++words;
            o.require(f.frozen_block().is_zero(), name + ": frozen block nonzero");
          });
    }
    if (o.ok) o.detail = std::to_string(words) + " words";
    return o;
  });

  criterion("finite-type probe", 10, [] {
    Outcome o;
    FiniteTypeResult a3 = finite_type_probe(fixture_matrix("a3"), 10000);
    o.require(a3.finite, "A3 not finite");
    FiniteTypeResult kr = finite_type_probe(fixture_matrix("kronecker"), 200);
    o.require(!kr.finite, "Kronecker reported finite");
    o.require(kr.cvectors.size() >= 20, "Kronecker: only " + std::to_string(kr.cvectors.size()) + " c-vectors");
    if (o.ok) o.detail = "Kronecker " + std::to_string(kr.cvectors.size()) + " c-vectors";
    return o;
  });

  std::printf("%d failed\n", failures);
  return failures;
}
