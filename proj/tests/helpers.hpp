#pragma once

#include <string>
#include <vector>

#include "cvec/exactmat.hpp"
#include "oracles.hpp"

namespace testing_helpers {

inline std::string data_path(const std::string& rel) { return std::string(CVEC_DATA_DIR) + "/" + rel; }

inline cvec::IntMatrix to_int(const oracle::Mat& m) {
  cvec::IntMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j];
  return out;
}

inline oracle::Mat to_mat(const cvec::IntMatrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

inline oracle::Vec to_vec(const cvec::IntVector& v) {
  oracle::Vec out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

inline cvec::IntVector ivec(std::initializer_list<long> xs) {
  cvec::IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace testing_helpers
