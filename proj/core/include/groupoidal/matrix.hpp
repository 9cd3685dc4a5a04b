#ifndef GROUPOIDAL_MATRIX_HPP_
#define GROUPOIDAL_MATRIX_HPP_

#include <initializer_list>
#include <optional>
#include <vector>

#include "groupoidal/errors.hpp"

namespace groupoidal {

// Dense matrix over an exact field F. F needs +,-,*, unary -, ==,
// construction from small integers, and the free functions is_zero and
// field_inverse.
template <class F>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, F fill = F(0))
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<F>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_) {
        throw ValidationError("ragged matrix initializer");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const F& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix shape mismatch in *");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const F& aik = a.at(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          out.at(i, j) += aik * b.at(k, j);
        }
      }
    }
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw ValidationError("matrix shape mismatch in +");
    }
    Matrix out = a;
    for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw ValidationError("matrix shape mismatch in -");
    }
    Matrix out = a;
    for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.data_.size(); ++i) {
      if (!(a.data_[i] == b.data_[i])) return false;
    }
    return true;
  }

  bool is_zero_matrix() const {
    for (const auto& v : data_) {
      if (!is_zero(v)) return false;
    }
    return true;
  }

  F trace() const {
    F t(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
  }

  std::vector<F> row(int i) const {
    return {data_.begin() + static_cast<size_t>(i) * cols_,
            data_.begin() + static_cast<size_t>(i + 1) * cols_};
  }
  std::vector<F> col(int j) const {
    std::vector<F> out;
    out.reserve(rows_);
    for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (static_cast<int>(v.size()) != cols_) {
      throw ValidationError("matrix/vector shape mismatch");
    }
    std::vector<F> out(rows_, F(0));
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        if (!is_zero(at(i, j))) out[i] += at(i, j) * v[j];
      }
    }
    return out;
  }

 private:
  int rows_, cols_;
  std::vector<F> data_;
};

// A row space kept in reduced echelon form; the workhorse for spinning,
// kernels and membership tests.
template <class F>
class RowSpace {
 public:
  explicit RowSpace(int ncols) : ncols_(ncols) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  const std::vector<std::vector<F>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Residual of v after reduction against the basis.
  std::vector<F> reduce(std::vector<F> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const F& c = v[pivots_[r]];
      if (!is_zero(c)) {
        const F factor = c;
        for (int j = 0; j < ncols_; ++j) {
          v[j] -= factor * rows_[r][j];
        }
      }
    }
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    auto res = reduce(v);
    for (const auto& c : res) {
      if (!is_zero(c)) return false;
    }
    return true;
  }

  // Returns true when v enlarged the space.
  bool add(std::vector<F> v) {
    v = reduce(std::move(v));
    int pivot = -1;
    for (int j = 0; j < ncols_; ++j) {
      if (!is_zero(v[j])) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) return false;
    const F inv = field_inverse(v[pivot]);
    for (int j = 0; j < ncols_; ++j) v[j] = v[j] * inv;
    // back-substitute into existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
      const F c = rows_[r][pivot];
      if (!is_zero(c)) {
        for (int j = 0; j < ncols_; ++j) {
          rows_[r][j] -= c * v[j];
        }
      }
    }
    size_t pos = 0;
    while (pos < rows_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, pivot);
    return true;
  }

 private:
  int ncols_;
  std::vector<std::vector<F>> rows_;
  std::vector<int> pivots_;
};

// Basis of the null space {x : m x = 0}.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  RowSpace<F> rs(m.cols());
  for (int i = 0; i < m.rows(); ++i) rs.add(m.row(i));
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : rs.pivots()) is_pivot[p] = true;
  std::vector<std::vector<F>> out;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[j] = F(1);
    for (int r = 0; r < rs.dim(); ++r) {
      v[rs.pivots()[r]] = -rs.rows()[r][j];
    }
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
int rank(const Matrix<F>& m) {
  RowSpace<F> rs(m.cols());
  for (int i = 0; i < m.rows(); ++i) rs.add(m.row(i));
  return rs.dim();
}

// One solution x of m x = b, if consistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b) {
  // augmented elimination
  RowSpace<F> rs(m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    auto row = m.row(i);
    row.push_back(b[i]);
    rs.add(std::move(row));
  }
  std::vector<F> x(m.cols(), F(0));
  for (int r = rs.dim() - 1; r >= 0; --r) {
    const int p = rs.pivots()[r];
    if (p == m.cols()) return std::nullopt;  // 0 = 1 row
    // rows are fully reduced; the solution reads off directly with free
    // variables at zero
    x[p] = rs.rows()[r][m.cols()];
  }
  return x;
}

template <class F>
Matrix<F> from_columns(const std::vector<std::vector<F>>& cols) {
  if (cols.empty()) return Matrix<F>(0, 0);
  Matrix<F> m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    for (size_t i = 0; i < cols[j].size(); ++i) {
      m.at(static_cast<int>(i), static_cast<int>(j)) = cols[j][i];
    }
  }
  return m;
}

template <class F>
std::optional<Matrix<F>> inverse_matrix(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  RowSpace<F> rs(2 * n);
  for (int i = 0; i < n; ++i) {
    std::vector<F> row = m.row(i);
    row.resize(2 * n, F(0));
    row[n + i] = F(1);
    rs.add(std::move(row));
  }
  if (rs.dim() != n) return std::nullopt;
  for (int r = 0; r < n; ++r) {
    if (rs.pivots()[r] != r) return std::nullopt;
  }
  Matrix<F> out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.at(i, j) = rs.rows()[i][n + j];
  }
  return out;
}

}  // namespace groupoidal

#endif  // GROUPOIDAL_MATRIX_HPP_
