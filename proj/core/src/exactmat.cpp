#include "cvec/exactmat.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <utility>

namespace cvec {

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  Matrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  m.data_.reserve(m.rows_ * m.cols_);
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw DimensionMismatch("ragged row list");
    m.data_.insert(m.data_.end(), r.begin(), r.end());
  }
  return m;
}

template <class T>
Matrix<T> Matrix<T>::diagonal(std::span<const T> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

template <class T>
Matrix<T> Matrix<T>::column(std::span<const T> v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

template <class T>
std::vector<T> Matrix<T>::col(std::size_t j) const {
  std::vector<T> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

template <class T>
void Matrix<T>::set_col(std::size_t j, std::span<const T> v) {
  if (v.size() != rows_) throw DimensionMismatch("set_col: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class T>
Matrix<T> Matrix<T>::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

template <class T>
bool Matrix<T>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const T& x) { return sgn(x) == 0; });
}

template <class T>
Matrix<T> Matrix<T>::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

template <class T>
Matrix<T>& Matrix<T>::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

template <class T>
Matrix<T>& Matrix<T>::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

template <class T>
Matrix<T> Matrix<T>::multiply(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const T& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  }
  return out;
}

template <class T>
Matrix<T> Matrix<T>::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.empty() && top.rows_ == 0) return bottom;
  if (bottom.rows_ == 0) return top;
  if (top.cols_ != bottom.cols_) throw DimensionMismatch("vstack column mismatch");
  Matrix m = top;
  m.rows_ += bottom.rows_;
  m.data_.insert(m.data_.end(), bottom.data_.begin(), bottom.data_.end());
  return m;
}

template <class T>
Matrix<T> Matrix<T>::hstack(const Matrix& left, const Matrix& right) {
  return vstack(left.transpose(), right.transpose()).transpose();
}

template class Matrix<Integer>;
template class Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) return std::nullopt;
      r(i, j) = m(i, j).get_num();
    }
  }
  return r;
}

namespace {

// Fraction-free forward elimination in place. Returns pivot columns and
// the number of row swaps performed.
std::pair<std::vector<std::size_t>, std::size_t> bareiss_forward(IntMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t swaps = 0;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      ++swaps;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        Integer t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    pivots.push_back(c);
    ++r;
  }
  return {pivots, swaps};
}

// Scales each row by the lcm of its denominators.
IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  auto [pivots, swaps] = bareiss_forward(a);
  if (pivots.size() < m.rows()) return 0;
  Integer d = a(m.rows() - 1, m.cols() - 1);
  return swaps % 2 == 0 ? d : Integer(-d);
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  Rational scale = 1;
  RatMatrix copy = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale /= Rational(l);
  }
  return scale * Rational(determinant(clear_denominators(copy)));
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("unimodular_inverse: matrix is not square");
  Integer d = determinant(m);
  if (abs(d) != 1) throw NotUnimodular("determinant is " + d.get_str() + ", not +-1");
  auto inv = to_integer(rat_inverse(to_rational(m)));
  // Integral because the adjugate is integral and det = +-1.
  return *inv;
}

std::optional<IntMatrix> skew_symmetrizer(const IntMatrix& b) {
  if (!b.is_square()) throw DimensionMismatch("skew_symmetrizer: matrix is not square");
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) != 0) return std::nullopt;
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((b(i, j) == 0) != (b(j, i) == 0)) return std::nullopt;
      if (b(i, j) != 0 && sgn(b(i, j)) == sgn(b(j, i))) return std::nullopt;
    }
  }
  std::vector<std::optional<Rational>> d(n);
  IntVector result(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root]) continue;
    std::vector<std::size_t> component{root};
    d[root] = Rational(1);
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) == 0) continue;
        // d_i b_ij = -d_j b_ji
        Rational dj = -(*d[i]) * Rational(b(i, j)) / Rational(b(j, i));
        if (!d[j]) {
          d[j] = dj;
          component.push_back(j);
          queue.push(j);
        } else if (*d[j] != dj) {
          return std::nullopt;
        }
      }
    }
    Integer l = 1;
    for (std::size_t i : component) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d[i]->get_den_mpz_t());
    Integer g = 0;
    for (std::size_t i : component) {
      result[i] = d[i]->get_num() * (l / d[i]->get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), result[i].get_mpz_t());
    }
    for (std::size_t i : component) result[i] /= g;
  }
  return IntMatrix::diagonal(result);
}

Echelon row_reduce(const RatMatrix& m) {
  IntMatrix a = clear_denominators(m);
  auto [pivots, swaps] = bareiss_forward(a);
  (void)swaps;
  Echelon e;
  e.pivots = pivots;
  e.rref = RatMatrix(m.rows(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Rational inv = Rational(1) / Rational(a(r, pivots[r]));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (a(r, j) != 0) e.rref(r, j) = Rational(a(r, j)) * inv;
    }
  }
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    for (std::size_t above = 0; above < r; ++above) {
      Rational f = e.rref(above, pc);
      if (f == 0) continue;
      for (std::size_t j = pc; j < m.cols(); ++j) e.rref(above, j) -= f * e.rref(r, j);
    }
  }
  return e;
}

std::size_t rat_rank(const RatMatrix& m) { return rat_rank(SparseRatMatrix::from_dense(m)); }

RatMatrix rat_kernel(const RatMatrix& m) { return rat_kernel(SparseRatMatrix::from_dense(m)); }

std::optional<RatMatrix> rat_solve(const RatMatrix& m, const RatMatrix& b) {
  if (m.rows() != b.rows()) throw DimensionMismatch("rat_solve: row count mismatch");
  Echelon e = row_reduce(RatMatrix::hstack(m, b));
  RatMatrix x(m.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.rref(r, m.cols() + j);
  }
  return x;
}

std::optional<RatVector> rat_solve(const RatMatrix& m, std::span<const Rational> b) {
  auto x = rat_solve(m, RatMatrix::column(b));
  if (!x) return std::nullopt;
  return x->col(0);
}

RatMatrix rat_inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("rat_inverse: matrix is not square");
  Echelon e = row_reduce(RatMatrix::hstack(m, RatMatrix::identity(m.rows())));
  if (e.pivots.size() < m.rows() || (m.rows() > 0 && e.pivots.back() >= m.cols()))
    throw Error("rat_inverse: matrix is singular");
  return e.rref.block(0, m.cols(), m.rows(), m.rows());
}

std::vector<std::size_t> extending_columns(const RatMatrix& start, const RatMatrix& m) {
  return extending_columns(SparseRatMatrix::from_dense(start), m);
}

SparseRatMatrix SparseRatMatrix::from_dense(const RatMatrix& m) {
  SparseRatMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) s.data_[i].emplace_back(j, m(i, j));
  return s;
}

void SparseRatMatrix::add(std::size_t i, std::size_t j, const Rational& v) {
  if (j >= cols_) throw IndexOutOfRange("SparseRatMatrix::add: column out of range");
  if (v == 0) return;
  Row& r = data_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (it->second == 0) r.erase(it);
  } else {
    r.emplace(it, j, v);
  }
}

RatMatrix SparseRatMatrix::to_dense() const {
  RatMatrix m(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : data_[i]) m(i, j) = v;
  return m;
}

SparseRatMatrix SparseRatMatrix::hstack(const SparseRatMatrix& left, const SparseRatMatrix& right) {
  if (left.rows() != right.rows()) throw DimensionMismatch("SparseRatMatrix::hstack: row count mismatch");
  SparseRatMatrix out(left.rows(), left.cols_ + right.cols_);
  for (std::size_t i = 0; i < left.rows(); ++i) {
    out.data_[i] = left.data_[i];
    for (const auto& [j, v] : right.data_[i]) out.data_[i].emplace_back(left.cols_ + j, v);
  }
  return out;
}

SparseRatMatrix SparseRatMatrix::vstack(const SparseRatMatrix& top, const SparseRatMatrix& bottom) {
  if (top.cols_ != bottom.cols_) throw DimensionMismatch("SparseRatMatrix::vstack: column count mismatch");
  SparseRatMatrix out = top;
  out.data_.insert(out.data_.end(), bottom.data_.begin(), bottom.data_.end());
  return out;
}

SparseRatMatrix SparseRatMatrix::operator-() const {
  SparseRatMatrix out = *this;
  for (auto& r : out.data_)
    for (auto& e : r) e.second = -e.second;
  return out;
}

namespace {

using SparseRow = SparseRatMatrix::Row;

const Rational* entry_at(const SparseRow& r, std::size_t c) {
  auto it = std::lower_bound(r.begin(), r.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
  return it != r.end() && it->first == c ? &it->second : nullptr;
}

// r -= f * p
void axpy(SparseRow& r, const Rational& f, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  auto a = r.begin();
  auto b = p.begin();
  while (a != r.end() || b != p.end()) {
    if (b == p.end() || (a != r.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == r.end() || b->first < a->first) {
      out.emplace_back(b->first, -f * b->second);
      ++b;
    } else {
      Rational v = a->second - f * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  r = std::move(out);
}

struct SparseEchelon {
  std::vector<std::size_t> pivots;  // pivot columns, increasing
  std::vector<SparseRow> rows;      // pivot rows, leading entry 1
};

// Column-ordered elimination; among rows able to pivot, the shortest wins.
SparseEchelon sparse_echelon(const SparseRatMatrix& m, bool reduce) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.row(i).empty()) rows.push_back(m.row(i));
  std::vector<std::vector<std::size_t>> by_col(m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& e : rows[i]) by_col[e.first].push_back(i);
  std::vector<bool> used(rows.size(), false);
  SparseEchelon out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<std::size_t> live;
    for (auto i : by_col[c])
      if (!used[i] && entry_at(rows[i], c)) live.push_back(i);
    std::sort(live.begin(), live.end());
    live.erase(std::unique(live.begin(), live.end()), live.end());
    if (live.empty()) continue;
    auto best = *std::min_element(live.begin(), live.end(),
                                  [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
    used[best] = true;
    SparseRow& p = rows[best];
    const Rational inv = 1 / *entry_at(p, c);
    for (auto& e : p) e.second *= inv;
    for (auto i : live) {
      if (i == best) continue;
      const Rational f = *entry_at(rows[i], c);
      axpy(rows[i], f, p);
      for (const auto& e : rows[i])
        if (e.first > c) by_col[e.first].push_back(i);
    }
    out.pivots.push_back(c);
    out.rows.push_back(p);
  }
  if (reduce) {
    for (std::size_t k = out.pivots.size(); k-- > 0;)
      for (std::size_t above = 0; above < k; ++above)
        if (const Rational* f = entry_at(out.rows[above], out.pivots[k])) {
          const Rational factor = *f;
          axpy(out.rows[above], factor, out.rows[k]);
        }
  }
  return out;
}

}  // namespace

std::size_t rat_rank(const SparseRatMatrix& m) { return sparse_echelon(m, false).pivots.size(); }

RatMatrix rat_kernel(const SparseRatMatrix& m) {
  SparseEchelon e = sparse_echelon(m, true);
  std::vector<long> pivot_row(m.cols(), -1);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = static_cast<long>(r);
  std::vector<std::size_t> free_index(m.cols(), 0);
  std::size_t nfree = 0;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (pivot_row[j] < 0) free_index[j] = nfree++;
  RatMatrix k(m.cols(), nfree);
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (pivot_row[j] < 0) k(j, free_index[j]) = 1;
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (const auto& [j, v] : e.rows[r])
      if (j != e.pivots[r]) k(e.pivots[r], free_index[j]) = -v;
  return k;
}

std::vector<std::size_t> extending_columns(const SparseRatMatrix& start, const RatMatrix& m) {
  const std::size_t offset = start.cols();
  SparseRatMatrix joined = SparseRatMatrix::from_dense(m);
  if (offset > 0) {
    if (start.rows() != m.rows()) throw DimensionMismatch("extending_columns: row count mismatch");
    joined = SparseRatMatrix::hstack(start, joined);
  }
  std::vector<std::size_t> out;
  for (std::size_t p : sparse_echelon(joined, false).pivots)
    if (p >= offset) out.push_back(p - offset);
  return out;
}

std::string to_text(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

std::string to_compact(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).get_str();
    s += "]";
  }
  return s + "]";
}

IntVector zero_vector(std::size_t n) { return IntVector(n); }

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v(n);
  v.at(i) = 1;
  return v;
}

IntVector negate(std::span<const Integer> v) {
  IntVector out(v.begin(), v.end());
  for (auto& x : out) x = -x;
  return out;
}

}  // namespace cvec
