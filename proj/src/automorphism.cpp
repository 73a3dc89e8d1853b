#include "twistloop/automorphism.hpp"

#include "twistloop/errors.hpp"

namespace twistloop {

std::vector<int> Grading::component(int d) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(degree.size()); ++i)
    if (degree[i] == d) out.push_back(i);
  return out;
}

int Grading::component_dim(int d) const {
  int n = 0;
  for (int x : degree)
    if (x == d) ++n;
  return n;
}

Grading trivial_grading(const LieAlgebra& L) {
  Grading g;
  g.m = 1;
  g.zeta = CycloScalar::one();
  g.degree.assign(L.dim(), 0);
  return g;
}

Automorphism make_automorphism(const LieAlgebra& L, Mat matrix, int order_cap) {
  const int n = L.dim();
  if (matrix.rows() != n || matrix.cols() != n)
    throw Error(ErrorCode::InvalidArgument, "automorphism matrix has wrong shape");

  // Homomorphism property on basis pairs: theta[x_i,x_j] = [theta x_i, theta x_j].
  std::vector<std::vector<CycloScalar>> images(n);
  for (int j = 0; j < n; ++j) {
    images[j].resize(n);
    for (int i = 0; i < n; ++i) images[j][i] = matrix.at(i, j);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<CycloScalar> lhs(n);
      for (const auto& [k, c] : L.bracket(i, j))
        for (int r = 0; r < n; ++r) lhs[r].add_mul(c, matrix.at(r, k));
      std::vector<CycloScalar> rhs = L.bracket_vectors(images[i], images[j]);
      for (int r = 0; r < n; ++r) {
        if (!(lhs[r] == rhs[r]))
          throw Error(ErrorCode::InvalidArgument,
                      "not an automorphism: fails on (" + L.label(i) + ", " + L.label(j) + ")");
      }
    }
  }

  Mat power = matrix;
  Mat id = Mat::identity(n);
  for (int m = 1; m <= order_cap; ++m) {
    if (power == id) {
      Automorphism out;
      out.matrix = std::move(matrix);
      out.order = m;
      return out;
    }
    power = power * matrix;
  }
  throw Error(ErrorCode::InvalidArgument,
              "automorphism order exceeds cap " + std::to_string(order_cap));
}

std::vector<Mat> grading_projectors(const LieAlgebra& L, const Automorphism& theta,
                                    const CycloScalar& zeta) {
  const int n = L.dim();
  const int m = theta.order;
  // zeta must be a primitive m-th root of unity.
  CycloScalar acc = CycloScalar::one();
  for (int k = 1; k < m; ++k) {
    acc *= zeta;
    if (acc.is_one())
      throw Error(ErrorCode::InvalidRoot, "zeta is not primitive of order " + std::to_string(m));
  }
  acc *= zeta;
  if (!acc.is_one())
    throw Error(ErrorCode::InvalidRoot, "zeta^m != 1 for m = " + std::to_string(m));

  std::vector<Mat> powers;
  powers.push_back(Mat::identity(n));
  for (int k = 1; k < m; ++k) powers.push_back(powers.back() * theta.matrix);

  // All powers of zeta, so coefficients are exact.
  std::vector<CycloScalar> zpow(m);
  zpow[0] = CycloScalar::one();
  for (int k = 1; k < m; ++k) zpow[k] = zpow[k - 1] * zeta;

  CycloScalar inv_m = CycloScalar(Rational(1, static_cast<unsigned long>(m)));
  std::vector<Mat> projectors;
  for (int i = 0; i < m; ++i) {
    Mat p(n, n);
    for (int k = 0; k < m; ++k) {
      long e = (((static_cast<long>(-i) * k) % m) + m) % m; // zeta^{-ik}
      p = p + powers[k].scaled(zpow[e] * inv_m);
    }
    projectors.push_back(std::move(p));
  }
  return projectors;
}

GradedAlgebra grading_from_automorphism(const LieAlgebra& L, const Automorphism& theta,
                                        const CycloScalar& zeta) {
  const int n = L.dim();
  const int m = theta.order;
  auto projectors = grading_projectors(L, theta, zeta);

  // Assemble the eigenbasis from independent projector columns.
  std::vector<std::vector<CycloScalar>> basis;
  std::vector<int> degrees;
  for (int i = 0; i < m; ++i) {
    auto cols = independent_columns(projectors[i]);
    for (int c : cols) {
      std::vector<CycloScalar> v(n);
      for (int r = 0; r < n; ++r) v[r] = projectors[i].at(r, c);
      basis.push_back(std::move(v));
      degrees.push_back(i);
    }
  }
  if (static_cast<int>(basis.size()) != n)
    throw Error(ErrorCode::InvalidRoot, "eigenspaces do not span (zeta not primitive?)");

  Mat change(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) change.at(i, j) = basis[j][i];
  Mat change_inv = inverse(change);

  // Labels: keep the original when the eigenvector is +-x_k, otherwise name by
  // component.
  std::vector<std::string> labels(n);
  std::vector<int> count_in_degree(m, 0);
  for (int j = 0; j < n; ++j) {
    int hit = -1;
    bool clean = true;
    for (int i = 0; i < n; ++i) {
      if (basis[j][i].is_zero()) continue;
      if (hit >= 0) {
        clean = false;
        break;
      }
      hit = i;
      if (!(basis[j][i].is_one() || (-basis[j][i]).is_one())) clean = false;
    }
    if (clean && hit >= 0)
      labels[j] = L.label(hit);
    else
      labels[j] = "g" + std::to_string(degrees[j]) + "_" + std::to_string(count_in_degree[degrees[j]]);
    ++count_in_degree[degrees[j]];
  }

  int field_order = lcm_order(L.cyclotomic_order(), m);
  LieAlgebra out(L.name(), labels, field_order);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::vector<CycloScalar> v = L.bracket_vectors(basis[a], basis[b]);
      std::vector<CycloScalar> coords = change_inv.apply(v);
      BracketTerms terms;
      for (int k = 0; k < n; ++k)
        if (!coords[k].is_zero()) terms.emplace_back(k, coords[k]);
      out.set_bracket(a, b, std::move(terms));
    }
  }

  GradedAlgebra result;
  result.algebra = std::move(out);
  result.grading.m = m;
  result.grading.zeta = zeta;
  result.grading.degree = std::move(degrees);
  result.change = std::move(change);
  result.change_inv = std::move(change_inv);

  auto law = check_grading(result.algebra, result.grading);
  if (!law.ok)
    throw Error(ErrorCode::InvalidRoot, "eigenbasis violates the grading law: " + law.message);
  return result;
}

StructureCheck check_grading(const LieAlgebra& L, const Grading& grading) {
  StructureCheck result;
  const int n = L.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int want = grading.degree_sum(i, j);
      for (const auto& [k, c] : L.bracket(i, j)) {
        if (grading.degree[k] != want) {
          result.ok = false;
          result.failing_pair = {i, j};
          result.message = "[q_" + std::to_string(grading.degree[i]) + ", q_" +
                           std::to_string(grading.degree[j]) + "] escapes q_" +
                           std::to_string(want) + " on (" + L.label(i) + ", " + L.label(j) + ")";
          return result;
        }
      }
    }
  }
  return result;
}

Automorphism cyclic_twist(const LieAlgebra& L, const Automorphism& theta, int copies) {
  if (copies < 1) throw Error(ErrorCode::InvalidArgument, "cyclic_twist: copies must be >= 1");
  const int d = L.dim();
  LieAlgebra big = direct_sum(L, copies);
  Mat mat(d * copies, d * copies);
  // copy 0 -> copy 1 through theta; copy c -> copy c+1; copy n-1 -> copy 0.
  for (int j = 0; j < d; ++j) {
    if (copies == 1) {
      for (int i = 0; i < d; ++i) mat.at(i, j) = theta.matrix.at(i, j);
      continue;
    }
    for (int i = 0; i < d; ++i) mat.at(d + i, j) = theta.matrix.at(i, j);
    for (int c = 1; c < copies - 1; ++c) mat.at((c + 1) * d + j, c * d + j) = CycloScalar::one();
    mat.at(j, (copies - 1) * d + j) = CycloScalar::one();
  }
  return make_automorphism(big, std::move(mat), std::max(24, copies * theta.order + 1));
}

Subalgebra fixed_point_subalgebra(const LieAlgebra& L, const Grading& grading) {
  Subalgebra out;
  out.parent_index = grading.component(0);
  const auto& idx = out.parent_index;
  std::vector<int> back(L.dim(), -1);
  for (size_t i = 0; i < idx.size(); ++i) back[idx[i]] = static_cast<int>(i);
  std::vector<std::string> labels;
  for (int i : idx) labels.push_back(L.label(i));
  LieAlgebra sub(L.name() + ".g0", labels, L.cyclotomic_order());
  for (size_t a = 0; a < idx.size(); ++a) {
    for (size_t b = a + 1; b < idx.size(); ++b) {
      BracketTerms terms;
      for (const auto& [k, c] : L.bracket(idx[a], idx[b])) {
        if (back[k] < 0)
          throw Error(ErrorCode::InvalidArgument, "degree-0 component is not a subalgebra");
        terms.emplace_back(back[k], c);
      }
      sub.set_bracket(static_cast<int>(a), static_cast<int>(b), std::move(terms));
    }
  }
  out.algebra = std::move(sub);
  return out;
}

} // namespace twistloop
