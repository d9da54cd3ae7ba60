#include "oracles.hpp"

#include <functional>
#include <stdexcept>

namespace oracle {

Mat mutate(const Mat& b, std::size_t k) {
  Mat out = b;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
        continue;
      }
      const long prod = b[i][k] * b[k][j];
      const long sgn = (b[i][k] > 0) - (b[i][k] < 0);
      out[i][j] = b[i][j] + sgn * std::max(prod, 0L);
    }
  return out;
}

Mat adjugate_inverse_2x2(const Mat& m) {
  const long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det != 1 && det != -1) throw std::invalid_argument("not unimodular");
  return {{m[1][1] * det, -m[0][1] * det}, {-m[1][0] * det, m[0][0] * det}};
}

std::set<Vec> unit_form_roots(const Mat& cartan, long box) {
  const std::size_t n = cartan.size();
  std::set<Vec> out;
  Vec x(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      long q = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) q += x[a] * cartan[a][b] * x[b];
      bool positive = false;
      for (long v : x) positive |= v > 0;
      if (positive && q == 2) out.insert(x);
      return;
    }
    for (long v = 0; v <= box; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

long euler_form(const Vec& x, const Vec& y, const std::vector<std::pair<int, int>>& arrows) {
  long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  for (auto [a, b] : arrows) s -= x[a] * y[b];
  return s;
}

std::set<Vec> nakayama_radical_quotients(std::size_t n) {
  std::set<Vec> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vec s(n, 0);
    s[i] = 1;
    out.insert(s);
    s[(i + 1) % n] = 1;
    out.insert(s);
  }
  return out;
}

std::size_t count_support_tilting_pairs(const std::vector<Vec>& dims, const std::vector<std::vector<long>>& hom,
                                        const std::vector<std::pair<int, int>>& arrows, std::size_t n) {
  const std::size_t m = dims.size();
  auto ext = [&](std::size_t a, std::size_t b) { return hom[a][b] - euler_form(dims[a], dims[b], arrows); };
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) chosen.push_back(i);
    if (chosen.size() > n) continue;
    bool rigid = true;
    for (auto a : chosen)
      for (auto b : chosen) rigid &= ext(a, b) == 0;
    if (!rigid) continue;
    // Vertices outside the support may carry Q; choose n - |M| of them.
    std::vector<bool> support(n, false);
    for (auto a : chosen)
      for (std::size_t v = 0; v < n; ++v) support[v] = support[v] || dims[a][v] != 0;
    std::size_t free = 0;
    for (std::size_t v = 0; v < n; ++v) free += !support[v];
    const std::size_t need = n - chosen.size();
    // binomial(free, need)
    std::size_t c = 1;
    if (need > free) continue;
    for (std::size_t i = 0; i < need; ++i) c = c * (free - i) / (i + 1);
    count += c;
  }
  return count;
}

}  // namespace oracle
