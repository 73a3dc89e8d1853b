#pragma once

#include "twistloop/automorphism.hpp"
#include "twistloop/poisson.hpp"
#include "twistloop/poly.hpp"

namespace twistloop {

/// A finite-dimensional slice of the twisted loop algebra
/// q^theta = (+)_k q_{k mod m} t^{-k}. Convention: x t^{-k} is present iff
/// deg(x) = k mod m.
struct TwistedWindow {
  enum class Side {
    WN,       // (q t^{-N+1} (+) ... (+) q t^{-1})^Theta (+) q_0: t in [k_min, 0]
    Positive, // truncation of q^theta_+ with strictly positive powers
    Cyclic,   // quotient by t^{-N} - 1
  };
  const LieAlgebra* base = nullptr;
  const Grading* grading = nullptr;
  Side side = Side::WN;
  int k_min = 0; // variable t-exponents lie in [k_min, k_max]
  int k_max = 0;
  int N = 0; // for Side::Cyclic

  bool holds_var(Var v) const;
  std::vector<Var> variables() const;
  bool holds(const Poly& p) const;
};

/// W-side window hosting t-exponents in [-max_k, 0].
TwistedWindow window_nonpositive(const LieAlgebra& L, const Grading& grading, int max_k);
/// Strictly positive powers t in [1, max_t].
TwistedWindow window_positive(const LieAlgebra& L, const Grading& grading, int max_t);

/// The quotient q[t,t^{-1}]^theta / (t^{-N} - 1), N = nm: a genuine Lie
/// algebra of dimension n * dim(q), isomorphic to q^{(+)n}. Basis ordering is
/// k-major: slot k in [0, N) holds the q_{k mod m} eigenvectors.
struct CyclicQuotient {
  LieAlgebra algebra;
  int N = 0;
  std::vector<std::pair<int, int>> origin; // quotient index -> (base index, k)
  std::vector<int> lookup;                 // k * dim + base -> quotient index (-1 if absent)

  int var_index(int base, int k) const;
  /// Rewrites a loop polynomial (variables x t^j) into quotient variables.
  Poly to_quotient_vars(const Poly& p) const;
};
CyclicQuotient build_cyclic_quotient(const LieAlgebra& L, const Grading& grading, int N);

/// The evaluation map x t^{-k} -> (tau_c^{-k} x)_{c=0..n-1} with
/// tau_c = zeta_N^c: an explicit Lie algebra isomorphism onto q^{(+)n} over
/// Q(zeta_N) (the discrete Fourier transform of the quotient). Columns follow
/// the quotient basis; rows the direct-sum basis.
Mat cyclic_quotient_dft(const CyclicQuotient& Q, const LieAlgebra& base, const Grading& grading);

/// t -> t^{-1}: maps the theta-twisted loop onto the theta^{-1}-twisted one.
Poly mirror_t(const Poly& p);
/// The grading of theta^{-1} on the same eigenbasis: deg'(x) = (m - deg(x)) mod m.
Grading mirror_grading(const Grading& grading);

/// psi: x t^j -> x, the quotient by (t^m - 1) composed with
/// q[t,t^{-1}]^theta/(t^m-1) ~ q. Validates that each variable's base element
/// lies in the grading component matching its t-exponent.
Poly psi_quotient(const Poly& p, const Grading& grading);

} // namespace twistloop
