#pragma once

#include "twistloop/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace twistloop {

/// Dense matrix over Q(zeta_M). Small sizes only (algebra dimensions), so all
/// algorithms are plain fraction-exact Gaussian elimination with first-nonzero
/// pivoting; there is no ordering on the field and none is needed.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  CycloScalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const CycloScalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  Mat scaled(const CycloScalar& s) const;
  friend bool operator==(const Mat& a, const Mat& b);

  std::vector<CycloScalar> apply(const std::vector<CycloScalar>& v) const;

private:
  int rows_, cols_;
  std::vector<CycloScalar> a_;
};

int rank(Mat m);

/// Solves A x = b exactly; nullopt when inconsistent. For underdetermined
/// systems returns one solution (free variables set to zero).
std::optional<std::vector<CycloScalar>> solve(Mat a, std::vector<CycloScalar> b);

/// Throws Error(InvalidArgument) when singular.
Mat inverse(const Mat& m);

/// Basis of the right kernel.
std::vector<std::vector<CycloScalar>> kernel_basis(Mat m);

/// Indices of a maximal independent column subset (in increasing order).
std::vector<int> independent_columns(Mat m);

} // namespace twistloop
