#include "twistloop/invariants.hpp"

#include "twistloop/errors.hpp"
#include "twistloop/jacobian.hpp"
#include "twistloop/linalg.hpp"
#include "twistloop/poisson.hpp"
#include "twistloop/poly_split.hpp"

#include <algorithm>
#include <map>

namespace twistloop {

Poly casimir(const LieAlgebra& L, const Mat& gram) {
  const int n = L.dim();
  if (gram.rows() != n || gram.cols() != n)
    throw Error(ErrorCode::InvalidArgument, "Gram matrix has wrong shape");

  // Invariance of the form: ([x_i, x_j], x_k) + (x_j, [x_i, x_k]) = 0.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        CycloScalar total;
        for (const auto& [l, c] : L.bracket(i, j)) total.add_mul(c, gram.at(l, k));
        for (const auto& [l, c] : L.bracket(i, k)) total.add_mul(c, gram.at(j, l));
        if (!total.is_zero())
          throw Error(ErrorCode::DegenerateForm, "form is not invariant at (" + L.label(i) +
                                                     ", " + L.label(j) + ", " + L.label(k) + ")");
      }
    }
  }

  Mat inv;
  try {
    inv = inverse(gram);
  } catch (const Error&) {
    throw Error(ErrorCode::DegenerateForm, "form is degenerate");
  }

  PolyBuilder acc;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      acc.add(Monomial(Var{i, 0}).times_var(Var{j, 0}), inv.at(i, j));
  Poly f = acc.build();

  FiniteDimPoisson ctx(L);
  for (int b = 0; b < n; ++b) {
    Poly br = poisson_bracket(ctx, f, Poly::variable(Var{b, 0}));
    if (!br.is_zero())
      throw Error(ErrorCode::DegenerateForm,
                  "casimir candidate fails invariance against " + L.label(b));
  }
  return f;
}

Mat trace_form(const std::vector<Mat>& rep) {
  const int d = static_cast<int>(rep.size());
  const int n = rep.empty() ? 0 : rep[0].rows();
  Mat gram(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      CycloScalar tr;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) tr.add_mul(rep[i].at(a, b), rep[j].at(b, a));
      gram.at(j, i) = tr;
      gram.at(i, j) = std::move(tr);
    }
  }
  return gram;
}

std::vector<Poly> charpoly_invariants(const std::vector<Mat>& rep) {
  const int d = static_cast<int>(rep.size());
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "empty representation");
  const int n = rep[0].rows();

  // Elements of S(g) are functions on g*, so the generic matrix must pair
  // coordinates with the trace-form dual basis: X(xi) = sum_b xi_b rho^b with
  // rho^b = sum_c (G^{-1})_{bc} rho_c. Without the dual correction the
  // coefficients are not Poisson-invariant.
  Mat ginv;
  try {
    ginv = inverse(trace_form(rep));
  } catch (const Error&) {
    throw Error(ErrorCode::DegenerateForm, "trace form is degenerate");
  }
  std::vector<Mat> dual;
  for (int b = 0; b < d; ++b) {
    Mat m(n, n);
    for (int c = 0; c < d; ++c) {
      if (ginv.at(b, c).is_zero()) continue;
      m = m + rep[c].scaled(ginv.at(b, c));
    }
    dual.push_back(std::move(m));
  }

  std::vector<std::vector<Poly>> X(n, std::vector<Poly>(n));
  for (int b = 0; b < d; ++b)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!dual[b].at(i, j).is_zero())
          X[i][j] += Poly::variable(Var{b, 0}).scaled(dual[b].at(i, j));

  auto matmul = [n](const std::vector<std::vector<Poly>>& a,
                    const std::vector<std::vector<Poly>>& b) {
    std::vector<std::vector<Poly>> out(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (a[i][k].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          if (b[k][j].is_zero()) continue;
          out[i][j] += a[i][k] * b[k][j];
        }
      }
    return out;
  };
  auto trace = [n](const std::vector<std::vector<Poly>>& a) {
    Poly t;
    for (int i = 0; i < n; ++i) t += a[i][i];
    return t;
  };

  std::vector<Poly> power_sums(n + 1); // p_k = tr(X^k)
  auto Xk = X;
  power_sums[1] = trace(Xk);
  for (int k = 2; k <= n; ++k) {
    Xk = matmul(Xk, X);
    power_sums[k] = trace(Xk);
  }

  // Newton: e_k = (1/k) sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i, with e_0 = 1.
  std::vector<Poly> e(n + 1);
  e[0] = Poly::constant(CycloScalar::one());
  for (int k = 1; k <= n; ++k) {
    Poly sum;
    for (int i = 1; i <= k; ++i) {
      Poly term = e[k - i] * power_sums[i];
      if (i % 2 == 0) term = -term;
      sum += term;
    }
    e[k] = sum.scaled(CycloScalar(Rational(1, static_cast<unsigned long>(k))));
  }

  std::vector<Poly> out;
  for (int k = 2; k <= n; ++k) {
    if (e[k].is_zero())
      throw Error(ErrorCode::ResolutionFailed, "charpoly coefficient of degree " +
                                                   std::to_string(k) + " vanishes identically");
    out.push_back(e[k]);
  }
  return out;
}

namespace {

void monomials_of_degree(int dim, int degree, int from, Monomial cur,
                         std::vector<Monomial>& out) {
  if (degree == 0) {
    out.push_back(cur);
    return;
  }
  for (int b = from; b < dim; ++b)
    monomials_of_degree(dim, degree - 1, b, cur.times_var(Var{b, 0}), out);
}

} // namespace

std::vector<Poly> invariants_by_degree(const LieAlgebra& L, int degree) {
  const int n = L.dim();
  std::vector<Monomial> basis;
  monomials_of_degree(n, degree, 0, Monomial(), basis);
  std::map<std::pair<int, Monomial>, int> row_of; // (acting index, output monomial)

  FiniteDimPoisson ctx(L);
  // Column j = coefficients of {x_b, m_j} stacked over b.
  std::vector<std::vector<std::pair<int, CycloScalar>>> cols(basis.size());
  int rows = 0;
  for (size_t j = 0; j < basis.size(); ++j) {
    for (int b = 0; b < n; ++b) {
      Poly br = poisson_bracket(ctx, Poly::variable(Var{b, 0}),
                                Poly::term(basis[j], CycloScalar::one()));
      for (const auto& [m, c] : br.terms()) {
        auto it = row_of.find({b, m});
        if (it == row_of.end()) it = row_of.emplace(std::make_pair(b, m), rows++).first;
        cols[j].emplace_back(it->second, c);
      }
    }
  }
  Mat mat(rows, static_cast<int>(basis.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, c] : cols[j]) mat.at(r, static_cast<int>(j)) += c;

  std::vector<Poly> out;
  for (const auto& v : kernel_basis(std::move(mat))) {
    std::vector<Poly::Term> terms;
    for (size_t j = 0; j < basis.size(); ++j)
      if (!v[j].is_zero()) terms.emplace_back(basis[j], v[j]);
    out.push_back(Poly::from_terms(std::move(terms)));
  }
  return out;
}

std::vector<Poly> center_elements(const LieAlgebra& L) {
  const int n = L.dim();
  Mat mat(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : L.bracket(i, j)) mat.at(j * n + k, i) += c;
  std::vector<Poly> out;
  for (const auto& v : kernel_basis(std::move(mat))) {
    std::vector<Poly::Term> terms;
    for (int i = 0; i < n; ++i)
      if (!v[i].is_zero()) terms.emplace_back(Monomial(Var{i, 0}), v[i]);
    out.push_back(Poly::from_terms(std::move(terms)));
  }
  return out;
}

InvariantFamily invariant_family_by_solver(const LieAlgebra& L, int target_rank, int max_degree,
                                           std::uint64_t seed) {
  InvariantFamily family;
  std::vector<Poly> picked;
  auto current_rank = [&]() {
    if (picked.empty()) return 0;
    return jacobian_rank_randomized(picked, seed).rank;
  };
  auto consider = [&](Poly cand, int degree) {
    if (static_cast<int>(picked.size()) >= target_rank) return;
    std::vector<Poly> trial = picked;
    trial.push_back(cand);
    if (jacobian_rank_randomized(trial, seed).rank > current_rank()) {
      picked.push_back(cand);
      InvariantGenerator gen;
      gen.name = "F" + std::to_string(family.gens.size() + 1);
      gen.poly = std::move(cand);
      gen.degree = degree;
      family.gens.push_back(std::move(gen));
    }
  };
  for (Poly& z : center_elements(L)) consider(std::move(z), 1);
  for (int d = 1; d <= max_degree && static_cast<int>(picked.size()) < target_rank; ++d) {
    for (Poly& cand : invariants_by_degree(L, d)) consider(std::move(cand), d);
  }
  if (static_cast<int>(picked.size()) < target_rank)
    throw Error(ErrorCode::ResolutionFailed,
                "no generating set found up to degree " + std::to_string(max_degree) + " for " +
                    L.name() + "; refusing to approximate");
  return family;
}

InvariantFamily attach_automorphism(const InvariantFamily& family, const Grading& grading,
                                    std::uint64_t seed) {
  const int m = grading.m;
  // In the eigenbasis theta scales each monomial by zeta^{phi-degree mod m},
  // so the eigencomponents are regroupings of the phi-split.
  struct Candidate {
    Poly poly;
    int degree;
    int ell;
    int top;
    std::string name;
  };
  std::vector<Candidate> cands;
  std::vector<Candidate> singles; // generators that were already eigenvectors
  for (const auto& gen : family.gens) {
    auto split = phi_split(gen.poly, grading);
    std::map<int, Poly> by_residue;
    for (auto& [w, comp] : split) {
      auto it = by_residue.find(w % m);
      if (it == by_residue.end())
        by_residue.emplace(w % m, comp);
      else
        it->second += comp;
    }
    bool single = by_residue.size() == 1;
    for (auto& [u, comp] : by_residue) {
      Candidate c;
      c.poly = std::move(comp);
      c.degree = gen.degree;
      c.ell = u;
      c.top = phi_split(c.poly, grading).rbegin()->first;
      c.name = single ? gen.name : gen.name + "_u" + std::to_string(u);
      (single ? singles : cands).push_back(std::move(c));
    }
  }

  InvariantFamily out;
  std::vector<Poly> picked;
  auto take = [&](Candidate& c) {
    picked.push_back(c.poly);
    InvariantGenerator gen;
    gen.name = std::move(c.name);
    gen.poly = std::move(c.poly);
    gen.degree = c.degree;
    gen.theta_exp = c.ell;
    gen.phi_top_degree = c.top;
    out.gens.push_back(std::move(gen));
  };
  for (auto& c : singles) take(c);
  const int target = static_cast<int>(family.gens.size());
  if (static_cast<int>(picked.size()) < target) {
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) { return a.degree < b.degree; });
    int rank = picked.empty() ? 0 : jacobian_rank_randomized(picked, seed).rank;
    for (auto& c : cands) {
      if (static_cast<int>(picked.size()) >= target) break;
      std::vector<Poly> trial = picked;
      trial.push_back(c.poly);
      int r = jacobian_rank_randomized(trial, seed).rank;
      if (r > rank) {
        rank = r;
        take(c);
      }
    }
  }
  if (static_cast<int>(out.gens.size()) != target)
    throw Error(ErrorCode::ResolutionFailed,
                "eigencomponents fail independence at sampled points");
  return out;
}

} // namespace twistloop
