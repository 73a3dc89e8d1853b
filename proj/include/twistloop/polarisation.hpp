#pragma once

#include "twistloop/automorphism.hpp"
#include "twistloop/poly.hpp"

namespace twistloop {

/// F_{[k]}: the s^k coefficient of F under the substitution spreading each
/// variable x of grading degree i over its allowed t-exponents,
///   k > 0: x -> sum_{j>=0} x t^{-(i+jm)} s^{i+jm}     (W-side, Z(q^theta_-,[0]))
///   k < 0: x -> sum x t^{+(m-i+jm)} s^{-(m-i+jm)}, plus the t^0 slot for i = 0
///          (computed as the mirror of the positive side for theta^{-1}).
/// k = 0 picks the barred phi-degree-0 part. Throws Error(WindowOverflow) when
/// a produced t-exponent exceeds max_abs_t in absolute value.
Poly t_polarisation(const Poly& F, int k, const Grading& grading, int max_abs_t);
Poly t_polarisation(const Poly& F, int k, const Grading& grading);

/// Independent oracle: per monomial X = x_1...x_d of phi-degree l, X_{[l+jm]}
/// is the sum over ordered tuples alpha in Z_{>=0}^d with sum alpha = j of
/// x_1 t^{-(deg_1+alpha_1 m)} ... x_d t^{-(deg_d+alpha_d m)} (direct
/// composition enumeration; k >= 0). Negative k mirrors.
Poly polarisation_oracle(const Poly& F, int k, const Grading& grading);

/// Drops every monomial containing a t = 0 variable: the projection
/// S(q[t]^theta) -> S((t q[t])^Theta) used on the Z(q^theta, t) side.
Poly drop_t0_terms(const Poly& F);

} // namespace twistloop
