#include "twistloop/index.hpp"

#include <random>

namespace twistloop {

Mat structure_pairing(const LieAlgebra& L, const Covector& xi) {
  const int n = L.dim();
  Mat b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      CycloScalar v;
      for (const auto& [k, c] : L.bracket(i, j)) v.add_mul(c, xi[k]);
      b.at(j, i) = -v;
      b.at(i, j) = std::move(v);
    }
  }
  return b;
}

int stabiliser_dim(const LieAlgebra& L, const Covector& xi) {
  return L.dim() - rank(structure_pairing(L, xi));
}

IndexEstimate index_estimate(const LieAlgebra& L, int trials, std::uint64_t seed) {
  IndexEstimate out;
  out.seed = seed;
  out.trials = trials;
  const int n = L.dim();
  std::mt19937_64 rng(seed);
  long box = 3;
  int since_growth = 0;
  const int grow_every = std::max(1, trials / 4);
  for (int t = 0; t < trials; ++t) {
    Covector xi(n);
    std::uniform_int_distribution<long> dist(-box, box);
    for (int i = 0; i < n; ++i) xi[i] = CycloScalar(dist(rng));
    int r = rank(structure_pairing(L, xi));
    if (r > out.max_rank) {
      out.max_rank = r;
      out.witness = std::move(xi);
    }
    if (++since_growth >= grow_every) {
      box *= 2;
      since_growth = 0;
    }
  }
  out.index_upper = n - out.max_rank;
  if (out.witness.empty()) out.witness.assign(n, CycloScalar::zero());
  return out;
}

bool is_regular(const LieAlgebra& L, const Covector& xi, int ind_value) {
  return stabiliser_dim(L, xi) == ind_value;
}

RegularIntersection check_q0_regular_intersection(const LieAlgebra& L, const Grading& grading,
                                                  int trials, std::uint64_t seed) {
  RegularIntersection out;
  out.seed = seed;
  out.trials = trials;
  const int n = L.dim();
  auto ind = index_estimate(L, trials, seed);
  out.ind_used = ind.index_upper;
  auto q0 = grading.component(0);

  auto try_xi = [&](const Covector& xi) {
    if (is_regular(L, xi, out.ind_used)) {
      out.found = true;
      out.witness = xi;
      return true;
    }
    return false;
  };

  // Deterministic small candidates first: dual basis vectors and all-ones.
  for (int i : q0) {
    Covector xi(n);
    xi[i] = CycloScalar::one();
    if (try_xi(xi)) return out;
  }
  {
    Covector xi(n);
    for (int i : q0) xi[i] = CycloScalar::one();
    if (try_xi(xi)) return out;
  }

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  long box = 3;
  int since_growth = 0;
  const int grow_every = std::max(1, trials / 4);
  for (int t = 0; t < trials; ++t) {
    Covector xi(n);
    std::uniform_int_distribution<long> dist(-box, box);
    for (int i : q0) xi[i] = CycloScalar(dist(rng));
    if (try_xi(xi)) return out;
    if (++since_growth >= grow_every) {
      box *= 2;
      since_growth = 0;
    }
  }
  return out;
}

} // namespace twistloop
