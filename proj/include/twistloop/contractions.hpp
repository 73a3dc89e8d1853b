#pragma once

#include "twistloop/automorphism.hpp"

namespace twistloop {

/// [q_i,q_j]_0 = [q_i,q_j] when i+j < m (representatives in {0..m-1}), else 0.
LieAlgebra contract_zero(const LieAlgebra& L, const Grading& grading);

/// [q_i,q_j]_inf = [q_i,q_j] when i+j >= m, else 0. Nilpotent; q_0 is central.
LieAlgebra contract_infinity(const LieAlgebra& L, const Grading& grading);

/// a[,] + b[,]_0 (compatible pencil).
LieAlgebra bracket_pencil(const LieAlgebra& L, const Grading& grading, const CycloScalar& a,
                          const CycloScalar& b);

/// phi_s acts diagonally with integer exponents on the basis; the zero limit
/// of phi_s^{-1}[phi_s x, phi_s y]. Throws Error(NonexistentLimit) naming the
/// offending pair when a structure constant carries a negative s-exponent.
LieAlgebra contract_via_map(const LieAlgebra& L, const std::vector<int>& exponents);

/// g~ = g_0 |x g_(inf): the fixed-point subalgebra acting on the infinity
/// contraction as on a g_0-module. Basis: primed g_0 copy first, then the
/// ideal. Returns the algebra with its inherited grading.
struct SemidirectResult {
  LieAlgebra algebra;
  Grading grading;
  int g0_dim = 0; // leading basis vectors form the acting copy
};
SemidirectResult semidirect_g0(const LieAlgebra& L, const Grading& grading);

} // namespace twistloop
