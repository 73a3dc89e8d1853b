#include "twistloop/contractions.hpp"

#include "twistloop/errors.hpp"

namespace twistloop {

namespace {

enum class Keep { Low, High };

LieAlgebra filter_by_degree(const LieAlgebra& L, const Grading& grading, Keep keep,
                            const char* suffix) {
  LieAlgebra out(L.name() + suffix, L.labels(), L.cyclotomic_order());
  for (int i = 0; i < L.dim(); ++i) {
    for (int j = i + 1; j < L.dim(); ++j) {
      bool low = grading.degree[i] + grading.degree[j] < grading.m;
      if ((keep == Keep::Low) == low) out.set_bracket(i, j, L.bracket(i, j));
    }
  }
  return out;
}

} // namespace

LieAlgebra contract_zero(const LieAlgebra& L, const Grading& grading) {
  return filter_by_degree(L, grading, Keep::Low, "_(0)");
}

LieAlgebra contract_infinity(const LieAlgebra& L, const Grading& grading) {
  return filter_by_degree(L, grading, Keep::High, "_(inf)");
}

LieAlgebra bracket_pencil(const LieAlgebra& L, const Grading& grading, const CycloScalar& a,
                          const CycloScalar& b) {
  LieAlgebra out(L.name() + "_pencil", L.labels(), L.cyclotomic_order());
  for (int i = 0; i < L.dim(); ++i) {
    for (int j = i + 1; j < L.dim(); ++j) {
      bool low = grading.degree[i] + grading.degree[j] < grading.m;
      CycloScalar factor = low ? a + b : a;
      if (factor.is_zero()) continue;
      BracketTerms terms = L.bracket(i, j);
      for (auto& t : terms) t.second *= factor;
      out.set_bracket(i, j, std::move(terms));
    }
  }
  return out;
}

LieAlgebra contract_via_map(const LieAlgebra& L, const std::vector<int>& exponents) {
  if (static_cast<int>(exponents.size()) != L.dim())
    throw Error(ErrorCode::InvalidArgument, "contract_via_map: exponent list has wrong length");
  LieAlgebra out(L.name() + "_(phi)", L.labels(), L.cyclotomic_order());
  for (int i = 0; i < L.dim(); ++i) {
    for (int j = i + 1; j < L.dim(); ++j) {
      BracketTerms terms;
      for (const auto& [k, c] : L.bracket(i, j)) {
        int w = exponents[i] + exponents[j] - exponents[k];
        if (w < 0)
          throw Error(ErrorCode::NonexistentLimit,
                      "limit s->0 does not exist on (" + L.label(i) + ", " + L.label(j) +
                          "): s-exponent " + std::to_string(w) + " at " + L.label(k));
        if (w == 0) terms.emplace_back(k, c);
      }
      out.set_bracket(i, j, std::move(terms));
    }
  }
  return out;
}

SemidirectResult semidirect_g0(const LieAlgebra& L, const Grading& grading) {
  auto g0 = fixed_point_subalgebra(L, grading);
  const int d0 = g0.algebra.dim();
  const int d = L.dim();
  std::vector<std::string> labels;
  for (int i = 0; i < d0; ++i) labels.push_back(g0.algebra.label(i) + "'");
  for (int i = 0; i < d; ++i) labels.push_back(L.label(i));
  LieAlgebra out(L.name() + "_semi", labels, L.cyclotomic_order());

  // Acting copy brackets.
  for (int a = 0; a < d0; ++a) {
    for (int b = a + 1; b < d0; ++b) {
      BracketTerms terms = g0.algebra.bracket(a, b);
      out.set_bracket(a, b, std::move(terms));
    }
  }
  // Action on the ideal: the original bracket of a g_0 element with anything
  // (the module structure is insensitive to the contraction).
  for (int a = 0; a < d0; ++a) {
    int pa = g0.parent_index[a];
    for (int j = 0; j < d; ++j) {
      if (pa == j) continue;
      BracketTerms terms = L.bracket(pa, j);
      for (auto& t : terms) t.first += d0;
      out.set_bracket(a, d0 + j, std::move(terms));
    }
  }
  // Ideal brackets: the infinity contraction.
  LieAlgebra inf = contract_infinity(L, grading);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      BracketTerms terms = inf.bracket(i, j);
      for (auto& t : terms) t.first += d0;
      out.set_bracket(d0 + i, d0 + j, std::move(terms));
    }
  }

  SemidirectResult result;
  result.algebra = std::move(out);
  result.grading.m = grading.m;
  result.grading.zeta = grading.zeta;
  result.grading.degree.assign(d0, 0);
  for (int i = 0; i < d; ++i) result.grading.degree.push_back(grading.degree[i]);
  result.g0_dim = d0;
  return result;
}

} // namespace twistloop
