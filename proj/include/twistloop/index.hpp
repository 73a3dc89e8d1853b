#pragma once

#include "twistloop/automorphism.hpp"

#include <cstdint>

namespace twistloop {

using Covector = std::vector<CycloScalar>;

/// B(xi)_{ij} = xi([x_i, x_j]).
Mat structure_pairing(const LieAlgebra& L, const Covector& xi);

/// dim q^xi = dim - rank B(xi).
int stabiliser_dim(const LieAlgebra& L, const Covector& xi);

/// Randomized index certificate: ind q <= dim - max sampled rank, with
/// equality on a dense open set. Samples integer covectors from boxes
/// [-B, B] with B doubling every few rounds; the seed makes runs reproducible.
struct IndexEstimate {
  int index_upper = 0; // dim - max_rank; almost surely exact
  int max_rank = 0;
  Covector witness; // a covector attaining max_rank
  std::uint64_t seed = 0;
  int trials = 0;
};
IndexEstimate index_estimate(const LieAlgebra& L, int trials, std::uint64_t seed);

/// dim - rank B(xi) == ind_value.
bool is_regular(const LieAlgebra& L, const Covector& xi, int ind_value);

/// Searches q_0^* (the annihilator of the positive components, i.e. covectors
/// supported on degree-0 coordinates) for a regular element. A `true` comes
/// with an exhibited witness; `false` after all trials is inconclusive.
struct RegularIntersection {
  bool found = false;
  Covector witness;
  int ind_used = 0;
  std::uint64_t seed = 0;
  int trials = 0;
};
RegularIntersection check_q0_regular_intersection(const LieAlgebra& L, const Grading& grading,
                                                  int trials, std::uint64_t seed);

} // namespace twistloop
