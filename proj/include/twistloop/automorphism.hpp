#pragma once

#include "twistloop/lie_algebra.hpp"

namespace twistloop {

/// Finite-order Lie algebra automorphism, as a matrix in the algebra's basis:
/// theta(x_j) = sum_i M(i,j) x_i. The order is minimal.
struct Automorphism {
  Mat matrix;
  int order = 1;
};

/// Validates theta([x,y]) = [theta x, theta y] on all basis pairs and computes
/// the minimal order by iterating the matrix (bounded by order_cap).
Automorphism make_automorphism(const LieAlgebra& L, Mat matrix, int order_cap = 24);

/// A periodic (Z_m-)grading in an eigenbasis: basis vector i sits in the
/// zeta^{degree[i]}-eigenspace of theta, degrees in {0..m-1}.
struct Grading {
  int m = 1;
  CycloScalar zeta = CycloScalar::one(); // the primitive m-th root used
  std::vector<int> degree;               // per basis index

  int degree_sum(int i, int j) const { return (degree[i] + degree[j]) % m; }
  std::vector<int> component(int d) const;
  int component_dim(int d) const;
};

/// Trivial grading (m = 1) on any algebra.
Grading trivial_grading(const LieAlgebra& L);

/// Result of diagonalising a finite-order automorphism: the same algebra
/// rewritten in a theta-eigenbasis, the grading, and the basis change
/// (columns of `change` are the new basis vectors in old coordinates).
struct GradedAlgebra {
  LieAlgebra algebra;
  Grading grading;
  Mat change;
  Mat change_inv;
};

/// Computes the eigenspace decomposition via the projectors
/// P_i = (1/m) sum_k zeta^{-ik} theta^k and rewrites the structure constants
/// in the eigenbasis. Throws Error(InvalidRoot) unless zeta is a primitive
/// m-th root of unity for m = order of theta.
GradedAlgebra grading_from_automorphism(const LieAlgebra& L, const Automorphism& theta,
                                        const CycloScalar& zeta);

/// The projectors themselves (index i -> P_i), exposed for the projector
/// identity checks.
std::vector<Mat> grading_projectors(const LieAlgebra& L, const Automorphism& theta,
                                    const CycloScalar& zeta);

/// Validates [q_i, q_j] subset q_{i+j mod m} for an algebra already in an
/// eigenbasis; returns the first offending pair if any.
StructureCheck check_grading(const LieAlgebra& L, const Grading& grading);

/// theta~ on q^{(+)n}: (y_1,...,y_n) -> (y_n, theta(y_1), y_2, ..., y_{n-1}).
/// Returns the automorphism of direct_sum(L, n); its order is n * order(theta).
Automorphism cyclic_twist(const LieAlgebra& L, const Automorphism& theta, int copies);

/// Extracts the degree-0 component as a standalone subalgebra, together with
/// the index map from subalgebra basis to parent basis.
struct Subalgebra {
  LieAlgebra algebra;
  std::vector<int> parent_index;
};
Subalgebra fixed_point_subalgebra(const LieAlgebra& L, const Grading& grading);

} // namespace twistloop
