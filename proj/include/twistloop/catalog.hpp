#pragma once

#include "twistloop/contractions.hpp"
#include "twistloop/invariants.hpp"

#include <cstdint>

namespace twistloop {

/// A catalog algebra in its defining basis, with a faithful matrix
/// representation when one is available (used for trace forms, charpoly
/// invariants and inner automorphisms).
struct CatalogAlgebra {
  std::string id;
  std::string description;
  LieAlgebra algebra;
  std::vector<Mat> rep; // empty when no distinguished representation
  int rank = -1;        // trdeg S(g)^g for reductive entries, -1 otherwise
  bool reductive = false;
  std::vector<std::string> automorphisms; // named specs valid for this entry
};

std::vector<std::string> catalog_ids();
bool catalog_has(const std::string& id);
CatalogAlgebra catalog_build(const std::string& id);

/// Parses "id", "inner:diag(a,b,...)" (conjugation in the defining
/// representation), "outer:negtranspose" (x -> -x^T, sl_n) or "swap"
/// (exchange of the two summands of a product) into a matrix on the defining
/// basis.
Mat parse_automorphism(const CatalogAlgebra& entry, const std::string& spec);

/// A fully prepared (algebra, automorphism) pair: eigenbasis algebra and
/// grading, the attached invariant family, and generators of S(g_0)^{g_0}.
struct CatalogCase {
  std::string algebra_id;
  std::string auto_spec;
  CatalogAlgebra source;
  GradedAlgebra graded;
  Automorphism theta; // in the eigenbasis (diagonal)
  InvariantFamily family;
  std::vector<Poly> g0_gens;
  int known_rank = -1;
  bool reductive = false;
};
CatalogCase build_case(const std::string& algebra_id, const std::string& auto_spec,
                       std::uint64_t seed);

/// Derived non-reductive cases: q = g_(inf) and g~ = g_0 |x g_(inf) of a base
/// case, with invariant families found by the exact solver and the inherited
/// automorphism.
CatalogCase build_infinity_case(const CatalogCase& base, std::uint64_t seed);
CatalogCase build_semidirect_case(const CatalogCase& base, std::uint64_t seed);

/// Example 3.4 metadata: recorded without symbolic polynomials, to document
/// why E6 is out of computational scope.
struct E6Metadata {
  std::vector<int> invariant_degrees;    // S(g)^g
  std::vector<int> g0_invariant_degrees; // S(g_0)^{g_0}
  std::string g0_description;
  bool has_ggs;
  int dim;
  int rank;
};
const E6Metadata& e6_metadata();

} // namespace twistloop
