#pragma once

#include "twistloop/poly.hpp"

#include <cstdint>

namespace twistloop {

/// Rank over Q(zeta) of the matrix (dF_a/dx_v)(point), columns indexed by the
/// variables occurring in the family.
int jacobian_rank(const std::vector<Poly>& polys, const std::function<CycloScalar(Var)>& point);

/// Randomized wrapper: integer points from [-7,7]^n first, box doubling on
/// each retry; returns the maximal rank seen (a lower bound certificate for
/// the generic rank, exact at any witness).
struct JacobianCertificate {
  int rank = 0;
  std::uint64_t seed = 0;
  int attempts = 0;
};
JacobianCertificate jacobian_rank_randomized(const std::vector<Poly>& polys, std::uint64_t seed,
                                             int retries = 3);

/// Membership in the ideal generated by the given variables: true iff every
/// monomial of f contains at least one of them. Exact for ideals generated by
/// a coordinate subspace.
bool is_in_linear_ideal(const Poly& f, const std::vector<Var>& subspace);

} // namespace twistloop
