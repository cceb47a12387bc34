#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ospkit/qsqrt2.hpp"

namespace ospkit {

/// Dense matrix over Q(sqrt 2), row-major. The weight blocks handled here
/// are at most (2n+1)-dimensional, so dense storage and plain Gauss-Jordan
/// elimination with exact field arithmetic are the right tools.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative dimension");
  }

  static ExactMatrix identity(int k) {
    ExactMatrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = QSqrt2(1);
    return m;
  }

  static ExactMatrix from_rows(const std::vector<std::vector<QSqrt2>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) {
        throw std::invalid_argument("ExactMatrix: ragged rows");
      }
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  QSqrt2& at(int i, int j) { return e_.at(static_cast<size_t>(i) * cols_ + j); }
  const QSqrt2& at(int i, int j) const { return e_.at(static_cast<size_t>(i) * cols_ + j); }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  ExactMatrix operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
    ExactMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const QSqrt2& a = at(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
      }
    }
    return out;
  }

  std::vector<QSqrt2> apply(const std::vector<QSqrt2>& x) const {
    if (static_cast<int>(x.size()) != cols_) {
      throw std::invalid_argument("ExactMatrix: shape mismatch in apply");
    }
    std::vector<QSqrt2> y(rows_, QSqrt2(0));
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    }
    return y;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<QSqrt2> e_;
};

struct RrefResult {
  ExactMatrix m;
  std::vector<int> pivot_cols;
  int rank = 0;
};

/// Reduced row-echelon form. Pivot choice is the first nonzero entry
/// scanning top to bottom (magnitude pivoting is meaningless over an exact
/// field), so the output is deterministic across runs and platforms.
inline RrefResult rref(ExactMatrix m) {
  RrefResult res;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!m.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    }
    const QSqrt2 inv = m.at(r, c).inv();
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const QSqrt2 f = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  res.m = std::move(m);
  return res;
}

inline int rank(const ExactMatrix& m) { return rref(m).rank; }

/// Exact kernel basis, one vector per free column, each normalized so its
/// first nonzero entry is 1. Always returns cols - rank vectors.
inline std::vector<std::vector<QSqrt2>> nullspace(const ExactMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<QSqrt2>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<QSqrt2> v(m.cols(), QSqrt2(0));
    v[free] = QSqrt2(1);
    for (size_t p = 0; p < r.pivot_cols.size(); ++p) {
      v[r.pivot_cols[p]] = -r.m.at(static_cast<int>(p), free);
    }
    for (auto& entry : v) {
      if (!entry.is_zero()) {
        const QSqrt2 inv = entry.inv();
        for (auto& e2 : v) e2 *= inv;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact determinant by elimination.
inline QSqrt2 det(ExactMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
  QSqrt2 result(1);
  const int k = m.rows();
  for (int c = 0; c < k; ++c) {
    int pivot = -1;
    for (int i = c; i < k; ++i) {
      if (!m.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return QSqrt2(0);
    if (pivot != c) {
      for (int j = 0; j < k; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      result = -result;
    }
    result *= m.at(c, c);
    const QSqrt2 inv = m.at(c, c).inv();
    for (int i = c + 1; i < k; ++i) {
      if (m.at(i, c).is_zero()) continue;
      const QSqrt2 f = m.at(i, c) * inv;
      for (int j = c; j < k; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return result;
}

/// Exact inverse via Gauss-Jordan on [m | I]. Throws on singular input.
inline ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const int k = m.rows();
  ExactMatrix aug(k, 2 * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, k + i) = QSqrt2(1);
  }
  RrefResult r = rref(std::move(aug));
  if (r.rank < k || r.pivot_cols[k - 1] != k - 1) {
    throw std::domain_error("inverse: singular matrix");
  }
  ExactMatrix out(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out.at(i, j) = r.m.at(i, k + j);
  }
  return out;
}

/// Arrowhead shape test: unit diagonal, zero everywhere off the diagonal
/// except row 1 and column 1.
inline bool is_arrowhead(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (i == j) {
        if (m.at(i, j) != QSqrt2(1)) return false;
      } else if (i != 0 && j != 0) {
        if (!m.at(i, j).is_zero()) return false;
      }
    }
  }
  return true;
}

inline std::string pretty(const ExactMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::vector<size_t> width(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      cells[i][j] = m.at(i, j).to_string();
      // Display width: the sqrt sign is 3 bytes of UTF-8 but one column.
      size_t w = cells[i][j].size();
      size_t pos = 0;
      while ((pos = cells[i][j].find("√", pos)) != std::string::npos) {
        w -= 2;
        pos += 3;
      }
      width[j] = std::max(width[j], w);
    }
  }
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    out += "[ ";
    for (int j = 0; j < m.cols(); ++j) {
      const std::string& cell = cells[i][j];
      size_t w = cell.size();
      size_t pos = 0;
      while ((pos = cell.find("√", pos)) != std::string::npos) {
        w -= 2;
        pos += 3;
      }
      out += std::string(width[j] - w, ' ') + cell;
      out += (j + 1 == m.cols()) ? " ]" : "  ";
    }
    out += "\n";
  }
  return out;
}

}  // namespace ospkit
