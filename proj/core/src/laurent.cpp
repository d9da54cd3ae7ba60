#include "cvec/laurent.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace cvec {

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Integer& c) {
  return monomial(nvars, Exponent(nvars, 0), c);
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, Exponent e, const Integer& c) {
  if (e.size() != nvars) throw DimensionMismatch("exponent length differs from variable count");
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(nvars, std::move(e));
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("Laurent polynomials over different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("Laurent polynomials over different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("Laurent polynomials over different rings");
  LaurentPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly out = constant(nvars_, 1);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

bool LaurentPoly::polynomial_in_tail(std::size_t first) const {
  for (const auto& [e, c] : terms_)
    for (std::size_t i = first; i < e.size(); ++i)
      if (e[i] < 0) return false;
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Integer mag = abs(c);
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) os << "*";
      else if (mag != 1) os << mag.get_str() << "*";
      any = true;
      os << "x" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
    }
    if (!any) os << mag.get_str();
  }
  return os.str();
}

LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw NonExactDivision("division by zero Laurent polynomial");
  if (f.nvars() != g.nvars()) throw DimensionMismatch("Laurent polynomials over different rings");
  const std::size_t nv = f.nvars();
  LaurentPoly q(nv);
  if (f.is_zero()) return q;

  // Lex order is a group order on Z^N, so exact division peels off the
  // quotient's terms from the top. The quotient's exponents must lie in
  // the box [min f - min g, max f - max g], which bounds the loop.
  auto bounds = [nv](const LaurentPoly& p) {
    Exponent lo(nv, std::numeric_limits<std::int64_t>::max());
    Exponent hi(nv, std::numeric_limits<std::int64_t>::min());
    for (const auto& [e, c] : p.terms()) {
      for (std::size_t i = 0; i < nv; ++i) {
        lo[i] = std::min(lo[i], e[i]);
        hi[i] = std::max(hi[i], e[i]);
      }
    }
    return std::pair{lo, hi};
  };
  auto [flo, fhi] = bounds(f);
  auto [glo, ghi] = bounds(g);

  const auto& [glead_e, glead_c] = *g.terms().rbegin();
  LaurentPoly rem = f;
  while (!rem.is_zero()) {
    const auto& [lead_e, lead_c] = *rem.terms().rbegin();
    if (lead_c % glead_c != 0) throw NonExactDivision("leading coefficient is not divisible");
    Exponent qe(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      qe[i] = lead_e[i] - glead_e[i];
      if (qe[i] < flo[i] - glo[i] || qe[i] > fhi[i] - ghi[i])
        throw NonExactDivision("quotient term leaves the Newton box");
    }
    LaurentPoly term = LaurentPoly::monomial(nv, qe, lead_c / glead_c);
    rem -= term * g;
    q += term;
  }
  return q;
}

IntVector monomial_degree(std::span<const std::int64_t> e, const IntMatrix& initial_b) {
  const std::size_t n = initial_b.rows();
  if (e.size() != 2 * n) throw DimensionMismatch("exponent length must be 2n");
  IntVector deg(n);
  for (std::size_t i = 0; i < n; ++i) deg[i] += e[i];
  for (std::size_t j = 0; j < n; ++j) {
    if (e[n + j] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) deg[i] -= initial_b(i, j) * e[n + j];
  }
  return deg;
}

IntVector g_vector(const LaurentPoly& p, const IntMatrix& initial_b) {
  if (p.is_zero()) throw Error("g_vector of the zero polynomial");
  std::optional<IntVector> common;
  for (const auto& [e, c] : p.terms()) {
    IntVector d = monomial_degree(e, initial_b);
    if (!common) common = std::move(d);
    else if (*common != d) throw NotHomogeneous("terms of different degrees: " + p.to_string());
  }
  return *common;
}

IntMatrix LaurentSeed::g_matrix() const {
  const std::size_t n = variables.size();
  IntMatrix g(n, n);
  for (std::size_t j = 0; j < n; ++j) g.set_col(j, g_vector(variables[j], initial_b));
  return g;
}

LaurentSeed laurent_root(const IntMatrix& b) {
  LaurentSeed s{principal_framing(b), {}, b, {}};
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) s.variables.push_back(LaurentPoly::variable(2 * n, i));
  return s;
}

LaurentSeed exchange_step(const LaurentSeed& s, std::size_t k) {
  const std::size_t n = s.matrix.rank();
  if (k >= n) throw IndexOutOfRange("exchange index out of range");
  const IntMatrix& bt = s.matrix.entries();
  const std::size_t nv = 2 * n;
  LaurentPoly plus = LaurentPoly::constant(nv, 1);
  LaurentPoly minus = LaurentPoly::constant(nv, 1);
  for (std::size_t i = 0; i < bt.rows(); ++i) {
    const Integer& b = bt(i, k);
    if (b == 0) continue;
    LaurentPoly xi = i < n ? s.variables[i] : LaurentPoly::variable(nv, i);
    LaurentPoly power = xi.pow(static_cast<unsigned>(Integer(abs(b)).get_ui()));
    if (b > 0) plus = plus * power;
    else minus = minus * power;
  }
  LaurentSeed out = s;
  out.variables[k] = exact_divide(plus + minus, s.variables[k]);
  if (!out.variables[k].polynomial_in_tail(n))
    throw NonExactDivision("coefficient variable with negative exponent");
  out.matrix = mutate(s.matrix, k);
  out.word.push_back(k);
  return out;
}

LaurentSeed walk(const IntMatrix& b, std::span<const std::size_t> word) {
  LaurentSeed s = laurent_root(b);
  for (std::size_t k : word) s = exchange_step(s, k);
  return s;
}

GCrossCheckReport cross_check_g(const IntMatrix& b, std::size_t budget, std::optional<std::size_t> max_depth) {
  ExploreOptions opts;
  opts.budget = budget;
  opts.max_depth = max_depth;
  auto explored = explore(b, opts);

  GCrossCheckReport report;
  std::map<IntVector, LaurentPoly> by_g;
  std::set<LaurentPoly> distinct;
  // Seeds arrive in BFS order, so each parent is replayed before its children.
  std::map<std::vector<std::size_t>, LaurentSeed> cache;
  for (const auto& seed : explored.seeds) {
    LaurentSeed ls = [&] {
      if (seed.word.empty()) return laurent_root(b);
      std::vector<std::size_t> parent(seed.word.begin(), seed.word.end() - 1);
      auto it = cache.find(parent);
      if (it == cache.end()) return walk(b, seed.word);
      return exchange_step(it->second, seed.word.back());
    }();
    ++report.seeds_checked;
    IntMatrix grading = ls.g_matrix();
    if (grading != seed.gmatrix) report.mismatches.push_back({seed.word, grading, seed.gmatrix});
    for (std::size_t j = 0; j < ls.variables.size(); ++j) {
      IntVector g = grading.col(j);
      distinct.insert(ls.variables[j]);
      auto [it, inserted] = by_g.emplace(g, ls.variables[j]);
      if (!inserted && it->second != ls.variables[j]) {
        bool known = std::any_of(report.duplicates.begin(), report.duplicates.end(),
                                 [&](const DuplicateG& d) { return d.g == g && d.second == ls.variables[j]; });
        if (!known) report.duplicates.push_back({g, it->second, ls.variables[j]});
      }
    }
    cache.emplace(seed.word, std::move(ls));
  }
  report.distinct_variables = distinct.size();
  return report;
}

}  // namespace cvec
