#pragma once

#include "twistloop/invariants.hpp"
#include "twistloop/window.hpp"

namespace twistloop {

struct GeneratorEntry {
  enum class Kind { G0Invariant, Polarisation, PhiComponent, HGenerator };
  std::string name;
  Poly poly;
  Kind kind = Kind::Polarisation;
  int inv_index = -1; // which F_i (index into the family), -1 for h_u
  int pol_index = 0;  // polarisation index k / phi-degree j / generator slot j
};

struct GeneratorSet {
  std::vector<GeneratorEntry> entries;
  int level = 0; // maximal polarisation index included
};

/// Thm 2.6 truncation of Z(q^theta_-, [0]): the g_0 invariants h_u together
/// with the nonzero polarisations (F_i)_{[l_i + jm]} (j >= 1 when theta fixes
/// F_i, j >= 0 otherwise) of index at most `level`. All family members must
/// carry eigendata.
GeneratorSet generators_Z0(const InvariantFamily& family, const std::vector<Poly>& g0_gens,
                           const Grading& grading, int level);

/// Z_x(g, theta): all nonzero phi-components F_{i,j}.
GeneratorSet generators_Zx(const InvariantFamily& family, const Grading& grading);

/// Thm 3.2 side: G_{i,j} = proj (F_i)_{[-b_i + jm]} for j = 0, -1, ...,
/// -(depth-1), where b_i = m d_i - d_i^bullet and proj kills t^0 variables.
GeneratorSet generators_Zt(const InvariantFamily& family, const Grading& grading, int depth);

/// Eq. (ir): H_{rj+i} = (1/n) sum_k omega^{jk} zt^{-k l_i} theta~^k(F_i), with
/// F_i embedded in the first summand of r = g^{(+)n} and omega = zt^m.
/// Throws Error(BadRoot) unless zt^n equals the grading root zeta.
struct HGeneratorSet {
  std::vector<GeneratorEntry> entries; // inv_index = i, pol_index = j
  std::vector<CycloScalar> eigenvalue; // claimed zt^{l_i - mj} per entry
  int copies = 0;
  CycloScalar zeta_tilde;
};
HGeneratorSet build_H_generators(const InvariantFamily& family, const Grading& grading,
                                 const LieAlgebra& sum, const Automorphism& theta_tilde,
                                 int copies, const CycloScalar& zeta_tilde);

} // namespace twistloop
