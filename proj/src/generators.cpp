#include "twistloop/generators.hpp"

#include "twistloop/errors.hpp"
#include "twistloop/polarisation.hpp"
#include "twistloop/poly_split.hpp"

namespace twistloop {

GeneratorSet generators_Z0(const InvariantFamily& family, const std::vector<Poly>& g0_gens,
                           const Grading& grading, int level) {
  GeneratorSet out;
  out.level = level;
  for (size_t u = 0; u < g0_gens.size(); ++u) {
    GeneratorEntry e;
    e.name = "h" + std::to_string(u + 1);
    e.poly = g0_gens[u];
    e.kind = GeneratorEntry::Kind::G0Invariant;
    out.entries.push_back(std::move(e));
  }
  const int m = grading.m;
  for (size_t i = 0; i < family.gens.size(); ++i) {
    const auto& gen = family.gens[i];
    if (gen.theta_exp < 0)
      throw Error(ErrorCode::ResolutionFailed,
                  "generator " + gen.name + " carries no theta-eigendata; run attach first");
    int start = gen.theta_exp == 0 ? m : gen.theta_exp;
    for (int k = start; k <= level; k += m) {
      Poly p = t_polarisation(gen.poly, k, grading, level);
      if (p.is_zero()) continue;
      GeneratorEntry e;
      e.name = gen.name + "[" + std::to_string(k) + "]";
      e.poly = std::move(p);
      e.kind = GeneratorEntry::Kind::Polarisation;
      e.inv_index = static_cast<int>(i);
      e.pol_index = k;
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

GeneratorSet generators_Zx(const InvariantFamily& family, const Grading& grading) {
  GeneratorSet out;
  for (size_t i = 0; i < family.gens.size(); ++i) {
    for (auto& [j, comp] : phi_split(family.gens[i].poly, grading)) {
      GeneratorEntry e;
      e.name = family.gens[i].name + ",{" + std::to_string(j) + "}";
      e.poly = std::move(comp);
      e.kind = GeneratorEntry::Kind::PhiComponent;
      e.inv_index = static_cast<int>(i);
      e.pol_index = j;
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

GeneratorSet generators_Zt(const InvariantFamily& family, const Grading& grading, int depth) {
  GeneratorSet out;
  const int m = grading.m;
  for (size_t i = 0; i < family.gens.size(); ++i) {
    const auto& gen = family.gens[i];
    if (gen.theta_exp < 0 || gen.phi_top_degree < 0)
      throw Error(ErrorCode::ResolutionFailed,
                  "generator " + gen.name + " carries no eigendata; run attach first");
    int b_i = m * gen.degree - gen.phi_top_degree;
    for (int j = 0; j > -depth; --j) {
      int k = -b_i + j * m;
      Poly p = drop_t0_terms(t_polarisation(gen.poly, k, grading, -k + m));
      if (p.is_zero()) continue;
      GeneratorEntry e;
      e.name = gen.name + "[" + std::to_string(k) + "]";
      e.poly = std::move(p);
      e.kind = GeneratorEntry::Kind::Polarisation;
      e.inv_index = static_cast<int>(i);
      e.pol_index = k;
      out.entries.push_back(std::move(e));
    }
  }
  out.level = depth;
  return out;
}

HGeneratorSet build_H_generators(const InvariantFamily& family, const Grading& grading,
                                 const LieAlgebra& sum, const Automorphism& theta_tilde,
                                 int copies, const CycloScalar& zeta_tilde) {
  // zt^n must recover the base root zeta.
  CycloScalar zt_pow = CycloScalar::one();
  for (int k = 0; k < copies; ++k) zt_pow *= zeta_tilde;
  if (!(zt_pow == grading.zeta))
    throw Error(ErrorCode::BadRoot, "zeta_tilde^n does not equal zeta");

  const int N = copies * grading.m;
  std::vector<CycloScalar> ztp(2 * N);
  ztp[0] = CycloScalar::one();
  for (int k = 1; k < 2 * N; ++k) ztp[k] = ztp[k - 1] * zeta_tilde;
  auto zt = [&](long e) {
    long r = ((e % N) + N) % N;
    return ztp[r];
  };
  CycloScalar omega = zt(grading.m);

  HGeneratorSet out;
  out.copies = copies;
  out.zeta_tilde = zeta_tilde;
  CycloScalar inv_n = CycloScalar(Rational(1, static_cast<unsigned long>(copies)));
  for (size_t i = 0; i < family.gens.size(); ++i) {
    const auto& gen = family.gens[i];
    if (gen.theta_exp < 0)
      throw Error(ErrorCode::ResolutionFailed, "H generators need theta-eigendata");
    // theta~^k(F_i), F_i in the first summand.
    std::vector<Poly> orbit;
    orbit.push_back(gen.poly);
    for (int k = 1; k < copies; ++k)
      orbit.push_back(apply_linear_map(orbit.back(), theta_tilde.matrix));
    (void)sum;
    for (int j = 0; j < copies; ++j) {
      PolyBuilder acc;
      for (int k = 0; k < copies; ++k) {
        // omega^{jk} zt^{-k l_i}
        CycloScalar coeff =
            zt(static_cast<long>(grading.m) * j * k - static_cast<long>(k) * gen.theta_exp) *
            inv_n;
        acc.add_poly(orbit[k], coeff);
      }
      GeneratorEntry e;
      e.name = "H(" + gen.name + ",j=" + std::to_string(j) + ")";
      e.poly = acc.build();
      e.kind = GeneratorEntry::Kind::HGenerator;
      e.inv_index = static_cast<int>(i);
      e.pol_index = j;
      out.entries.push_back(std::move(e));
      out.eigenvalue.push_back(zt(gen.theta_exp - static_cast<long>(grading.m) * j));
    }
  }
  return out;
}

} // namespace twistloop
