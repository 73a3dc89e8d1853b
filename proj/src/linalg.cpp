#include "twistloop/linalg.hpp"

#include "twistloop/errors.hpp"

namespace twistloop {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = CycloScalar::one();
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  Mat out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const CycloScalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j).add_mul(aik, b.at(k, j));
      }
    }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat out = a;
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) out.at(i, j) += b.at(i, j);
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat out = a;
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) out.at(i, j) -= b.at(i, j);
  return out;
}

Mat Mat::scaled(const CycloScalar& s) const {
  Mat out = *this;
  for (auto& c : out.a_) c *= s;
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

std::vector<CycloScalar> Mat::apply(const std::vector<CycloScalar>& v) const {
  std::vector<CycloScalar> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i].add_mul(at(i, j), v[j]);
    }
  return out;
}

namespace {

// Row echelon in place; returns pivot columns. Optionally carries an augmented
// right-hand side along.
std::vector<int> echelon(Mat& m, std::vector<CycloScalar>* rhs) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
      if (rhs) std::swap((*rhs)[pivot], (*rhs)[row]);
    }
    CycloScalar inv = m.at(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    if (rhs) (*rhs)[row] *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      CycloScalar factor = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) {
        CycloScalar delta = factor * m.at(row, c);
        m.at(r, c) -= delta;
      }
      if (rhs) {
        CycloScalar delta = factor * (*rhs)[row];
        (*rhs)[r] -= delta;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

int rank(Mat m) { return static_cast<int>(echelon(m, nullptr).size()); }

std::optional<std::vector<CycloScalar>> solve(Mat a, std::vector<CycloScalar> b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw Error(ErrorCode::InvalidArgument, "solve: dimension mismatch");
  int cols = a.cols();
  auto pivots = echelon(a, &b);
  // Inconsistent if a zero row has nonzero rhs.
  for (int r = static_cast<int>(pivots.size()); r < a.rows(); ++r)
    if (!b[r].is_zero()) return std::nullopt;
  std::vector<CycloScalar> x(cols);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "inverse: not square");
  int n = m.rows();
  Mat work(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) work.at(i, j) = m.at(i, j);
    work.at(i, n + i) = CycloScalar::one();
  }
  auto pivots = echelon(work, nullptr);
  if (static_cast<int>(pivots.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "inverse: singular matrix");
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = work.at(i, n + j);
  return out;
}

std::vector<std::vector<CycloScalar>> kernel_basis(Mat m) {
  int cols = m.cols();
  auto pivots = echelon(m, nullptr);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<CycloScalar>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycloScalar> v(cols);
    v[free] = CycloScalar::one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> independent_columns(Mat m) { return echelon(m, nullptr); }

} // namespace twistloop
