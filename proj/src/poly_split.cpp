#include "twistloop/poly_split.hpp"

#include "twistloop/errors.hpp"

namespace twistloop {

int phi_degree(const Monomial& m, const Grading& grading) {
  int d = 0;
  for (const auto& f : m.factors()) {
    if (f.v.t != 0)
      throw Error(ErrorCode::UnknownVariable, "phi_degree expects t = 0 variables");
    d += grading.degree[f.v.base] * f.e;
  }
  return d;
}

std::map<int, Poly> phi_split(const Poly& f, const Grading& grading) {
  return weight_split(f, [&grading](Var v) {
    if (v.t != 0) throw Error(ErrorCode::UnknownVariable, "phi_split expects t = 0 variables");
    return grading.degree[v.base];
  });
}

std::map<int, Poly> weight_split(const Poly& f, const std::function<int(Var)>& weight) {
  std::map<int, std::vector<Poly::Term>> buckets;
  for (const auto& [m, c] : f.terms()) {
    int w = 0;
    for (const auto& fac : m.factors()) w += weight(fac.v) * fac.e;
    buckets[w].emplace_back(m, c);
  }
  std::map<int, Poly> out;
  for (auto& [w, terms] : buckets) out.emplace(w, Poly::from_terms(std::move(terms)));
  return out;
}

Poly highest_component(const Poly& f, const Grading& grading) {
  if (f.is_zero()) throw Error(ErrorCode::EmptyInput, "highest component of 0");
  auto split = phi_split(f, grading);
  return split.rbegin()->second;
}

Poly apply_linear_map(const Poly& f, const Mat& matrix) {
  const int n = matrix.rows();
  // Precompute images of the base indices that occur.
  std::map<int, Poly> images;
  for (Var v : f.variables()) {
    if (images.count(v.base)) continue;
    if (v.base < 0 || v.base >= n)
      throw Error(ErrorCode::UnknownVariable, "variable outside the map's domain");
    std::vector<Poly::Term> terms;
    for (int i = 0; i < n; ++i)
      if (!matrix.at(i, v.base).is_zero())
        terms.emplace_back(Monomial(Var{i, 0}), matrix.at(i, v.base));
    images.emplace(v.base, Poly::from_terms(std::move(terms)));
  }
  // t-exponents ride along unchanged.
  std::map<std::pair<int, int>, Poly> shifted;
  auto get_image = [&](Var v) -> const Poly* {
    auto key = std::make_pair(v.base, static_cast<int>(v.t));
    auto it = shifted.find(key);
    if (it == shifted.end()) {
      Poly img = images.at(v.base).map_vars([&](Var w) { return Var{w.base, v.t}; });
      it = shifted.emplace(key, std::move(img)).first;
    }
    return &it->second;
  };
  return f.substitute(get_image);
}

std::vector<std::pair<int, Poly>> theta_eigen_split(const Poly& f, const Automorphism& theta,
                                                    const CycloScalar& zeta) {
  const int m = theta.order;
  std::vector<Poly> powers; // theta^k(f)
  powers.push_back(f);
  for (int k = 1; k < m; ++k) powers.push_back(apply_linear_map(powers.back(), theta.matrix));

  std::vector<CycloScalar> zpow(m);
  zpow[0] = CycloScalar::one();
  for (int k = 1; k < m; ++k) zpow[k] = zpow[k - 1] * zeta;

  CycloScalar inv_m = CycloScalar(Rational(1, static_cast<unsigned long>(m)));
  std::vector<std::pair<int, Poly>> out;
  for (int u = 0; u < m; ++u) {
    PolyBuilder acc;
    for (int k = 0; k < m; ++k) {
      long e = (((static_cast<long>(-u) * k) % m) + m) % m;
      acc.add_poly(powers[k], zpow[e] * inv_m);
    }
    Poly comp = acc.build();
    if (!comp.is_zero()) out.emplace_back(u, std::move(comp));
  }
  return out;
}

} // namespace twistloop
