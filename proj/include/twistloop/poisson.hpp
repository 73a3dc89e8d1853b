#pragma once

#include "twistloop/automorphism.hpp"
#include "twistloop/poly.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

namespace twistloop {

/// Supplies {u, v} for variables; the Lie-Poisson structure behind
/// poisson_bracket. Implementations cache the small bracket polynomials.
class PoissonStructure {
public:
  virtual ~PoissonStructure() = default;
  /// nullptr when {u, v} = 0. The returned pointer stays valid for the
  /// lifetime of the structure.
  virtual const Poly* var_bracket(Var u, Var v) const = 0;
};

/// Plain S(q): variables are basis indices with t = 0.
class FiniteDimPoisson : public PoissonStructure {
public:
  explicit FiniteDimPoisson(const LieAlgebra& L) : L_(&L) {}
  const Poly* var_bracket(Var u, Var v) const override;

private:
  const LieAlgebra* L_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, std::unique_ptr<Poly>> cache_;
};

/// The twisted loop algebra on a finite t-exponent window:
/// [x t^a, y t^b] = [x,y] t^{a+b}. Brackets that would leave the window throw
/// Error(WindowOverflow); inputs supported well inside the window never do.
class LoopPoisson : public PoissonStructure {
public:
  LoopPoisson(const LieAlgebra& L, const Grading& grading, int t_min, int t_max)
      : L_(&L), grading_(&grading), t_min_(t_min), t_max_(t_max) {}
  const Poly* var_bracket(Var u, Var v) const override;

private:
  const LieAlgebra* L_;
  const Grading* grading_;
  int t_min_, t_max_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, std::unique_ptr<Poly>> cache_;
};

/// The cyclic quotient by t^{-N} - 1: t-exponents live in (-N, 0] and wrap.
class CyclicLoopPoisson : public PoissonStructure {
public:
  CyclicLoopPoisson(const LieAlgebra& L, const Grading& grading, int N);
  const Poly* var_bracket(Var u, Var v) const override;
  int period() const { return N_; }
  /// Normalizes a t-exponent into (-N, 0].
  int normalize(int t) const;

private:
  const LieAlgebra* L_;
  const Grading* grading_;
  int N_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, std::unique_ptr<Poly>> cache_;
};

/// {f, g} by the bilinear Leibniz double loop over the variable pairs actually
/// present in f and g.
Poly poisson_bracket(const PoissonStructure& ctx, const Poly& f, const Poly& g);

} // namespace twistloop
