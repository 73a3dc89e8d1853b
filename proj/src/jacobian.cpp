#include "twistloop/jacobian.hpp"

#include "twistloop/linalg.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace twistloop {

int jacobian_rank(const std::vector<Poly>& polys,
                  const std::function<CycloScalar(Var)>& point) {
  std::vector<Var> vars;
  for (const auto& p : polys) {
    auto pv = p.variables();
    vars.insert(vars.end(), pv.begin(), pv.end());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  Mat jac(static_cast<int>(polys.size()), static_cast<int>(vars.size()));
  for (size_t a = 0; a < polys.size(); ++a) {
    for (size_t v = 0; v < vars.size(); ++v) {
      Poly d = polys[a].derivative(vars[v]);
      if (!d.is_zero()) jac.at(static_cast<int>(a), static_cast<int>(v)) = d.evaluate(point);
    }
  }
  return rank(std::move(jac));
}

JacobianCertificate jacobian_rank_randomized(const std::vector<Poly>& polys, std::uint64_t seed,
                                             int retries) {
  JacobianCertificate out;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  long box = 7;
  int max_possible = static_cast<int>(polys.size());
  for (int attempt = 0; attempt <= retries; ++attempt) {
    ++out.attempts;
    std::map<std::uint64_t, CycloScalar> assignment;
    std::uniform_int_distribution<long> dist(-box, box);
    auto point = [&](Var v) -> CycloScalar {
      auto it = assignment.find(v.key());
      if (it == assignment.end()) it = assignment.emplace(v.key(), CycloScalar(dist(rng))).first;
      return it->second;
    };
    out.rank = std::max(out.rank, jacobian_rank(polys, point));
    if (out.rank == max_possible) break;
    box *= 2;
  }
  return out;
}

bool is_in_linear_ideal(const Poly& f, const std::vector<Var>& subspace) {
  for (const auto& [m, c] : f.terms()) {
    bool hit = false;
    for (Var v : subspace) {
      if (m.contains(v)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

} // namespace twistloop
