#pragma once

#include "twistloop/automorphism.hpp"
#include "twistloop/poly.hpp"

#include <cstdint>
#include <optional>

namespace twistloop {

/// A homogeneous generator of S(g)^g, optionally with theta-eigendata.
struct InvariantGenerator {
  std::string name;
  Poly poly; // t = 0 variables of the owning algebra
  int degree = 0;
  int theta_exp = -1;      // l_i with theta(F) = zeta^{l_i} F; -1 = not attached
  int phi_top_degree = -1; // d_i^bullet: maximal phi-degree, set on attach
};

struct InvariantFamily {
  std::vector<InvariantGenerator> gens;
};

/// F = sum B^{ij} x_i x_j with B the inverse Gram matrix. Checks that the form
/// is invariant (form([x,y],z) + form(y,[x,z]) = 0) and nondegenerate, and
/// that {F, x} = 0 for every basis x.
Poly casimir(const LieAlgebra& L, const Mat& gram);

/// Characteristic-polynomial coefficient invariants of a faithful traceless
/// matrix representation (degrees 2..n), via exact Newton identities on
/// tr(X^k) for the generic matrix X = sum x_b rep[b].
std::vector<Poly> charpoly_invariants(const std::vector<Mat>& rep);

/// Gram matrix tr(rep_i rep_j).
Mat trace_form(const std::vector<Mat>& rep);

/// Basis of {F in S^degree(L) : {F, x_i} = 0 for all i}, by exact kernel
/// computation on the monomial basis.
std::vector<Poly> invariants_by_degree(const LieAlgebra& L, int degree);

/// Greedy generator selection: center elements first, then solver output per
/// degree, keeping candidates that raise the Jacobian rank, until it reaches
/// target_rank. Throws Error(ResolutionFailed) when max_degree does not
/// suffice (no generating set known; refuse rather than approximate).
InvariantFamily invariant_family_by_solver(const LieAlgebra& L, int target_rank, int max_degree,
                                           std::uint64_t seed);

/// Replaces each generator by theta-eigencomponents, re-selecting an
/// independent family of the same size, and records l_i and the top
/// phi-degree. theta acts diagonally through the grading's eigenbasis.
InvariantFamily attach_automorphism(const InvariantFamily& family, const Grading& grading,
                                    std::uint64_t seed);

/// Linear center of an algebra (basis of {x : [x, y] = 0 for all y}).
std::vector<Poly> center_elements(const LieAlgebra& L);

} // namespace twistloop
