#include "twistloop/catalog.hpp"

#include "twistloop/errors.hpp"
#include "twistloop/index.hpp"
#include "twistloop/poly_split.hpp"

#include <algorithm>
#include <sstream>

namespace twistloop {

namespace {

Mat unit_matrix(int n, int i, int j) {
  Mat m(n, n);
  m.at(i, j) = CycloScalar::one();
  return m;
}

// Flattens rep matrices into columns and solves for coordinates.
struct RepSpan {
  int n = 0;
  Mat flat; // n*n x dim
  explicit RepSpan(const std::vector<Mat>& rep) {
    n = rep[0].rows();
    flat = Mat(n * n, static_cast<int>(rep.size()));
    for (size_t b = 0; b < rep.size(); ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat.at(i * n + j, static_cast<int>(b)) = rep[b].at(i, j);
  }
  std::vector<CycloScalar> coords(const Mat& m) const {
    std::vector<CycloScalar> v(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[i * n + j] = m.at(i, j);
    auto sol = solve(flat, std::move(v));
    if (!sol)
      throw Error(ErrorCode::InvalidArgument, "matrix does not lie in the representation span");
    return *sol;
  }
};

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

LieAlgebra algebra_from_rep(const std::string& name, const std::vector<Mat>& rep,
                            std::vector<std::string> labels) {
  RepSpan span(rep);
  LieAlgebra L(name, std::move(labels), 1);
  for (int i = 0; i < L.dim(); ++i) {
    for (int j = i + 1; j < L.dim(); ++j) {
      auto coords = span.coords(commutator(rep[i], rep[j]));
      BracketTerms terms;
      for (int k = 0; k < L.dim(); ++k)
        if (!coords[k].is_zero()) terms.emplace_back(k, coords[k]);
      L.set_bracket(i, j, std::move(terms));
    }
  }
  return L;
}

CatalogAlgebra build_sl(int n) {
  std::vector<Mat> rep;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      rep.push_back(unit_matrix(n, i, j));
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    Mat h(n, n);
    h.at(i, i) = CycloScalar::one();
    h.at(i + 1, i + 1) = -CycloScalar::one();
    rep.push_back(std::move(h));
    labels.push_back("h" + std::to_string(i + 1));
  }
  CatalogAlgebra out;
  out.id = "sl" + std::to_string(n);
  out.description = "traceless " + std::to_string(n) + "x" + std::to_string(n) + " matrices";
  out.algebra = algebra_from_rep(out.id, rep, labels);
  out.rep = std::move(rep);
  out.rank = n - 1;
  out.reductive = true;
  out.automorphisms = {"id", "outer:negtranspose"};
  if (n == 2) out.automorphisms.push_back("inner:diag(1,-1)");
  if (n == 3) out.automorphisms.push_back("inner:diag(1,1,-1)");
  if (n == 4) out.automorphisms.push_back("inner:diag(1,1,1,-1)");
  return out;
}

CatalogAlgebra build_sl2() {
  // Chevalley basis e, f, h with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
  std::vector<Mat> rep;
  rep.push_back(unit_matrix(2, 0, 1)); // e
  rep.push_back(unit_matrix(2, 1, 0)); // f
  Mat h(2, 2);
  h.at(0, 0) = CycloScalar::one();
  h.at(1, 1) = -CycloScalar::one();
  rep.push_back(std::move(h));
  CatalogAlgebra out;
  out.id = "sl2";
  out.description = "sl(2) in the Chevalley basis e, f, h";
  out.algebra = algebra_from_rep("sl2", rep, {"e", "f", "h"});
  out.rep = std::move(rep);
  out.rank = 1;
  out.reductive = true;
  out.automorphisms = {"id", "inner:diag(1,-1)", "outer:negtranspose"};
  return out;
}

CatalogAlgebra build_heisenberg3() {
  std::vector<Mat> rep;
  rep.push_back(unit_matrix(3, 0, 1)); // e
  rep.push_back(unit_matrix(3, 1, 2)); // f
  rep.push_back(unit_matrix(3, 0, 2)); // z
  CatalogAlgebra out;
  out.id = "heisenberg3";
  out.description = "3-dimensional Heisenberg algebra [e,f] = z";
  out.algebra = algebra_from_rep("heisenberg3", rep, {"e", "f", "z"});
  out.rep = std::move(rep);
  out.rank = -1;
  out.reductive = false;
  out.automorphisms = {"id", "inner:diag(1,-1,1)"};
  return out;
}

CatalogAlgebra build_sl2xsl2() {
  CatalogAlgebra sl2 = build_sl2();
  const int n = 2;
  std::vector<Mat> rep;
  std::vector<std::string> labels;
  for (int copy = 0; copy < 2; ++copy) {
    for (size_t b = 0; b < sl2.rep.size(); ++b) {
      Mat big(2 * n, 2 * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) big.at(copy * n + i, copy * n + j) = sl2.rep[b].at(i, j);
      rep.push_back(std::move(big));
      labels.push_back(sl2.algebra.label(static_cast<int>(b)) + "@" + std::to_string(copy));
    }
  }
  CatalogAlgebra out;
  out.id = "sl2xsl2";
  out.description = "sl(2) + sl(2), block-diagonal representation";
  out.algebra = algebra_from_rep("sl2xsl2", rep, labels);
  out.rep = std::move(rep);
  out.rank = 2;
  out.reductive = true;
  out.automorphisms = {"id", "swap"};
  return out;
}

} // namespace

std::vector<std::string> catalog_ids() {
  return {"sl2", "sl3", "sl4", "heisenberg3", "sl2xsl2"};
}

bool catalog_has(const std::string& id) {
  auto ids = catalog_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

CatalogAlgebra catalog_build(const std::string& id) {
  if (id == "sl2") return build_sl2();
  if (id == "sl3") return build_sl(3);
  if (id == "sl4") return build_sl(4);
  if (id == "heisenberg3") return build_heisenberg3();
  if (id == "sl2xsl2") return build_sl2xsl2();
  if (id == "e6")
    throw Error(ErrorCode::ResolutionFailed,
                "e6 is catalog metadata only (dim 78); no symbolic generators are shipped");
  throw Error(ErrorCode::ParseError, "unknown catalog algebra '" + id + "'");
}

Mat parse_automorphism(const CatalogAlgebra& entry, const std::string& spec) {
  const int d = entry.algebra.dim();
  if (spec == "id") return Mat::identity(d);
  if (spec == "swap") {
    if (entry.id != "sl2xsl2")
      throw Error(ErrorCode::ParseError, "swap is only defined for sl2xsl2");
    Mat m(d, d);
    int half = d / 2;
    for (int i = 0; i < half; ++i) {
      m.at(half + i, i) = CycloScalar::one();
      m.at(i, half + i) = CycloScalar::one();
    }
    return m;
  }
  if (spec.rfind("inner:diag(", 0) == 0 && spec.back() == ')') {
    if (entry.rep.empty())
      throw Error(ErrorCode::ParseError, "inner automorphism needs a representation");
    std::string body = spec.substr(11, spec.size() - 12);
    std::vector<Rational> diag;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) diag.push_back(rational_from_string(item));
    const int n = entry.rep[0].rows();
    if (static_cast<int>(diag.size()) != n)
      throw Error(ErrorCode::ParseError,
                  "diag(...) needs " + std::to_string(n) + " entries for " + entry.id);
    RepSpan span(entry.rep);
    Mat out(d, d);
    for (int b = 0; b < d; ++b) {
      Mat conj = entry.rep[b];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (conj.at(i, j).is_zero()) continue;
          conj.at(i, j) *= CycloScalar(diag[i] / diag[j]);
        }
      auto coords = span.coords(conj);
      for (int k = 0; k < d; ++k) out.at(k, b) = coords[k];
    }
    return out;
  }
  if (spec == "outer:negtranspose") {
    if (entry.rep.empty())
      throw Error(ErrorCode::ParseError, "outer:negtranspose needs a representation");
    const int n = entry.rep[0].rows();
    RepSpan span(entry.rep);
    Mat out(d, d);
    for (int b = 0; b < d; ++b) {
      Mat neg(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) neg.at(i, j) = -entry.rep[b].at(j, i);
      auto coords = span.coords(neg);
      for (int k = 0; k < d; ++k) out.at(k, b) = coords[k];
    }
    return out;
  }
  throw Error(ErrorCode::ParseError, "cannot parse automorphism spec '" + spec + "'");
}

namespace {

std::vector<Poly> g0_generators_for(const CatalogCase& c, std::uint64_t seed) {
  const Grading& gr = c.graded.grading;
  if (gr.m == 1) {
    // g_0 = g: the family itself generates S(g_0)^{g_0}.
    std::vector<Poly> out;
    for (const auto& gen : c.family.gens) out.push_back(gen.poly);
    return out;
  }
  auto sub = fixed_point_subalgebra(c.graded.algebra, gr);
  const int d0 = sub.algebra.dim();
  auto to_parent = [&](const Poly& p) {
    return p.map_vars([&](Var v) { return Var{sub.parent_index[v.base], v.t}; });
  };

  bool abelian = true;
  for (int i = 0; i < d0 && abelian; ++i)
    for (int j = i + 1; j < d0; ++j)
      if (!sub.algebra.bracket(i, j).empty()) {
        abelian = false;
        break;
      }
  std::vector<Poly> out;
  if (abelian) {
    for (int i = 0; i < d0; ++i) out.push_back(Poly::variable(Var{sub.parent_index[i], 0}));
    return out;
  }
  int target = index_estimate(sub.algebra, 40, seed).index_upper;
  InvariantFamily fam = invariant_family_by_solver(sub.algebra, target, 4, seed);
  for (const auto& gen : fam.gens) out.push_back(to_parent(gen.poly));
  return out;
}

InvariantFamily family_for(const CatalogAlgebra& source, const GradedAlgebra& graded,
                           std::uint64_t seed) {
  InvariantFamily base;
  if (source.reductive && !source.rep.empty() && source.id != "sl2xsl2") {
    auto polys = charpoly_invariants(source.rep);
    for (size_t k = 0; k < polys.size(); ++k) {
      InvariantGenerator gen;
      gen.name = "F" + std::to_string(k + 2);
      gen.degree = static_cast<int>(k) + 2;
      gen.poly = std::move(polys[k]);
      base.gens.push_back(std::move(gen));
    }
  } else if (source.id == "sl2xsl2") {
    CatalogAlgebra sl2 = build_sl2();
    auto polys = charpoly_invariants(sl2.rep);
    for (int copy = 0; copy < 2; ++copy) {
      InvariantGenerator gen;
      gen.name = "C" + std::to_string(copy + 1);
      gen.degree = 2;
      gen.poly = polys[0].map_vars([&](Var v) { return Var{v.base + copy * 3, v.t}; });
      base.gens.push_back(std::move(gen));
    }
  } else {
    int target = index_estimate(source.algebra, 40, seed).index_upper;
    base = invariant_family_by_solver(source.algebra, target, 3, seed);
  }
  // Rewrite in the eigenbasis and attach eigendata.
  for (auto& gen : base.gens) gen.poly = apply_linear_map(gen.poly, graded.change_inv);
  return attach_automorphism(base, graded.grading, seed);
}

} // namespace

CatalogCase build_case(const std::string& algebra_id, const std::string& auto_spec,
                       std::uint64_t seed) {
  CatalogCase out;
  out.algebra_id = algebra_id;
  out.auto_spec = auto_spec;
  out.source = catalog_build(algebra_id);
  Mat mat = parse_automorphism(out.source, auto_spec);
  Automorphism theta = make_automorphism(out.source.algebra, std::move(mat));
  CycloScalar zeta = CycloScalar::zeta(theta.order);
  out.graded = grading_from_automorphism(out.source.algebra, theta, zeta);
  // theta is diagonal in the eigenbasis.
  Mat diag(out.graded.algebra.dim(), out.graded.algebra.dim());
  for (int i = 0; i < diag.rows(); ++i)
    diag.at(i, i) = CycloScalar::zeta_power(theta.order, out.graded.grading.degree[i]);
  out.theta = make_automorphism(out.graded.algebra, std::move(diag),
                                std::max(24, theta.order + 1));
  out.family = family_for(out.source, out.graded, seed);
  out.known_rank = out.source.rank;
  out.reductive = out.source.reductive;
  out.g0_gens = g0_generators_for(out, seed);
  return out;
}

CatalogCase build_infinity_case(const CatalogCase& base, std::uint64_t seed) {
  CatalogCase out;
  out.algebra_id = base.algebra_id + ".g_inf";
  out.auto_spec = base.auto_spec;
  out.reductive = false;
  out.known_rank = -1;
  out.graded.algebra = contract_infinity(base.graded.algebra, base.graded.grading);
  out.graded.grading = base.graded.grading;
  out.theta = base.theta;
  int target = index_estimate(out.graded.algebra, 40, seed).index_upper;
  InvariantFamily fam = invariant_family_by_solver(out.graded.algebra, target, 3, seed);
  out.family = attach_automorphism(fam, out.graded.grading, seed);
  CatalogCase probe = out;
  out.g0_gens = g0_generators_for(probe, seed);
  return out;
}

CatalogCase build_semidirect_case(const CatalogCase& base, std::uint64_t seed) {
  CatalogCase out;
  out.algebra_id = base.algebra_id + ".g_semi";
  out.auto_spec = base.auto_spec;
  out.reductive = false;
  out.known_rank = -1;
  auto semi = semidirect_g0(base.graded.algebra, base.graded.grading);
  out.graded.algebra = std::move(semi.algebra);
  out.graded.grading = std::move(semi.grading);
  Mat diag(out.graded.algebra.dim(), out.graded.algebra.dim());
  for (int i = 0; i < diag.rows(); ++i)
    diag.at(i, i) =
        CycloScalar::zeta_power(out.graded.grading.m, out.graded.grading.degree[i]);
  out.theta = make_automorphism(out.graded.algebra, std::move(diag),
                                std::max(24, out.graded.grading.m + 1));
  int target = index_estimate(out.graded.algebra, 40, seed).index_upper;
  InvariantFamily fam = invariant_family_by_solver(out.graded.algebra, target, 3, seed);
  out.family = attach_automorphism(fam, out.graded.grading, seed);
  CatalogCase probe = out;
  out.g0_gens = g0_generators_for(probe, seed);
  return out;
}

const E6Metadata& e6_metadata() {
  static const E6Metadata meta{
      {2, 5, 6, 8, 9, 12}, {1, 2, 4, 5, 6, 8}, "so(10) + so(2)", false, 78, 6};
  return meta;
}

} // namespace twistloop
