#ifndef PFRES_MATRIX_HPP
#define PFRES_MATRIX_HPP

// Dense matrices of polynomials with fraction-free elimination.

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pfres/polynomial.hpp"

namespace pfres {

template <Field F>
class PolyMatrix {
 public:
  using poly = Polynomial<F>;

  PolyMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, poly(ring_)) {}

  static PolyMatrix identity(RingPtr<F> ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = poly::constant(ring, 1);
    return m;
  }

  static PolyMatrix from_rows(RingPtr<F> ring, const std::vector<std::vector<poly>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    PolyMatrix m(ring, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static PolyMatrix from_columns(RingPtr<F> ring, std::size_t rows, const std::vector<std::vector<poly>>& cols) {
    PolyMatrix m(ring, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column has wrong length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<poly> column(std::size_t j) const {
    std::vector<poly> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }
  std::vector<poly> row(std::size_t i) const {
    return std::vector<poly>(data_.begin() + static_cast<long>(i * cols_),
                             data_.begin() + static_cast<long>((i + 1) * cols_));
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const poly& p) { return p.is_zero(); });
  }

  PolyMatrix transpose() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  PolyMatrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    PolyMatrix s(ring_, rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
    return s;
  }

  // Drops one row and one column (either may be npos).
  PolyMatrix without(std::size_t row, std::size_t col) const {
    std::vector<std::size_t> rs, cs;
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != row) rs.push_back(i);
    for (std::size_t j = 0; j < cols_; ++j)
      if (j != col) cs.push_back(j);
    return submatrix(rs, cs);
  }

  PolyMatrix map(const std::function<poly(const poly&)>& fn) const {
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = fn(data_[k]);
    return r;
  }

  PolyMatrix scaled(const typename F::value_type& c) const {
    return map([&c](const poly& p) { return p.scaled(c); });
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
    PolyMatrix r(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const poly& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    return r;
  }

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    check_shape(a, b);
    PolyMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    check_shape(a, b);
    PolyMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }
  PolyMatrix operator-() const {
    return map([](const poly& p) { return -p; });
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Matrices whose entries are all constants.
  bool is_constant() const {
    return std::all_of(data_.begin(), data_.end(), [](const poly& p) { return p.is_constant(); });
  }

 private:
  static void check_shape(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes differ");
  }

  RingPtr<F> ring_;
  std::size_t rows_, cols_;
  std::vector<poly> data_;
};

namespace detail {

// Bareiss elimination in place with full pivoting on nonzero entries.
// Returns the rank and the sign of the permutation; the last pivot is the
// determinant of the leading rank x rank block up to that sign.
template <Field F>
std::size_t bareiss(std::vector<std::vector<Polynomial<F>>>& m, int& sign, Polynomial<F>& last_pivot) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  sign = 1;
  std::size_t rank = 0;
  RingPtr<F> ring = rows && cols ? m[0][0].ring() : nullptr;
  if (!ring) return 0;
  Polynomial<F> prev = Polynomial<F>::constant(ring, 1);
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    // choose the nonzero pivot with the fewest terms in the remaining block
    std::size_t pr = rows, pc = cols, best = 0;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (!m[i][j].is_zero() && (pr == rows || m[i][j].size() < best)) {
          pr = i;
          pc = j;
          best = m[i][j].size();
        }
    if (pr == rows) break;
    if (pr != k) {
      std::swap(m[pr], m[k]);
      sign = -sign;
    }
    if (pc != k) {
      for (auto& r : m) std::swap(r[pc], r[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        Polynomial<F> v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? v.scaled(ring->field().inv(prev.leading_term().coeff)) : divide_exact(v, prev);
      }
      m[i][k] = Polynomial<F>(ring);
    }
    prev = m[k][k];
    ++rank;
  }
  last_pivot = prev;
  return rank;
}

}  // namespace detail

// Rank over the fraction field.
template <Field F>
std::size_t rank(const PolyMatrix<F>& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  std::vector<std::vector<Polynomial<F>>> m;
  for (std::size_t i = 0; i < a.rows(); ++i) m.push_back(a.row(i));
  int sign;
  Polynomial<F> piv(a.ring());
  return detail::bareiss(m, sign, piv);
}

template <Field F>
Polynomial<F> determinant(const PolyMatrix<F>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows() == 0) return Polynomial<F>::constant(a.ring(), 1);
  if (a.rows() == 1) return a(0, 0);
  if (a.rows() == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  std::vector<std::vector<Polynomial<F>>> m;
  for (std::size_t i = 0; i < a.rows(); ++i) m.push_back(a.row(i));
  int sign;
  Polynomial<F> piv(a.ring());
  std::size_t r = detail::bareiss(m, sign, piv);
  if (r < a.rows()) return Polynomial<F>(a.ring());
  return sign > 0 ? piv : -piv;
}

// Calls fn on every k-subset of {0..n-1} in lexicographic order; fn returns false to stop.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Nonzero k x k minors, made monic and deduplicated, in enumeration order.
// Stops after max_count distinct minors (0 = no limit).
template <Field F>
std::vector<Polynomial<F>> minors(const PolyMatrix<F>& a, std::size_t k, std::size_t max_count = 0) {
  std::vector<Polynomial<F>> out;
  if (k == 0) {
    out.push_back(Polynomial<F>::constant(a.ring(), 1));
    return out;
  }
  bool stop = false;
  for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cs) {
      Polynomial<F> d = determinant(a.submatrix(rs, cs)).monic();
      if (!d.is_zero() && std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
      if (max_count && out.size() >= max_count) stop = true;
      return !stop;
    });
    return !stop;
  });
  return out;
}

// Inverse of a matrix of constants over the ground field; none if singular.
template <Field F>
std::optional<PolyMatrix<F>> inverse_constant(const PolyMatrix<F>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (!a.is_constant()) throw std::invalid_argument("inverse_constant: entries must be constants");
  const F& k = a.ring()->field();
  const std::size_t n = a.rows();
  using V = typename F::value_type;
  std::vector<std::vector<V>> m(n, std::vector<V>(2 * n, k.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j).constant_coefficient();
    m[i][n + i] = k.one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && k.is_zero(m[p][c])) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    V inv = k.inv(m[c][c]);
    for (auto& x : m[c]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || k.is_zero(m[i][c])) continue;
      V f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] = k.sub(m[i][j], k.mul(f, m[c][j]));
    }
  }
  PolyMatrix<F> r(a.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = Polynomial<F>::constant(a.ring(), m[i][n + j]);
  return r;
}

// Inverse over S of a square matrix whose determinant is a nonzero constant, by the adjugate.
template <Field F>
std::optional<PolyMatrix<F>> inverse_unimodular(const PolyMatrix<F>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (a.is_constant()) return inverse_constant(a);
  Polynomial<F> det = determinant(a);
  if (det.is_zero() || !det.is_constant()) return std::nullopt;
  const auto inv = a.ring()->field().inv(det.constant_coefficient());
  const std::size_t n = a.rows();
  PolyMatrix<F> r(a.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial<F> c = determinant(a.without(i, j)).scaled(inv);
      r(j, i) = (i + j) % 2 ? -c : c;
    }
  return r;
}

}  // namespace pfres

#endif  // PFRES_MATRIX_HPP
