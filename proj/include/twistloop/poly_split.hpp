#pragma once

#include "twistloop/automorphism.hpp"
#include "twistloop/poly.hpp"

#include <map>

namespace twistloop {

/// phi-degree of a monomial in t = 0 variables: the sum of grading degrees
/// (integer representatives in {0..m-1}) over its factors.
int phi_degree(const Monomial& m, const Grading& grading);

/// F = sum_j F_j with phi_s(F_j) = s^j F_j; reconstruction is exact by
/// construction. Keys are the occurring phi-degrees.
std::map<int, Poly> phi_split(const Poly& f, const Grading& grading);

/// Splits by an arbitrary integer weight on variables (used for contractions
/// whose scaling map is not the grading one).
std::map<int, Poly> weight_split(const Poly& f, const std::function<int(Var)>& weight);

/// The nonzero phi-component of maximal phi-degree. Throws Error(EmptyInput)
/// on the zero polynomial.
Poly highest_component(const Poly& f, const Grading& grading);

/// Substitutes x_j -> sum_i M(i,j) x_i on the base index, preserving t.
Poly apply_linear_map(const Poly& f, const Mat& matrix);

/// F = sum of theta-eigencomponents computed by the projectors
/// (1/m) sum_k zeta^{-uk} theta^k on S(q); returns (u, component) pairs with
/// nonzero components, theta(component) = zeta^u component.
std::vector<std::pair<int, Poly>> theta_eigen_split(const Poly& f, const Automorphism& theta,
                                                    const CycloScalar& zeta);

} // namespace twistloop
