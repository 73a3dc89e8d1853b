#pragma once

#include "twistloop/linalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace twistloop {

/// Sparse term list of a bracket value: sum of coeff * x_k.
using BracketTerms = std::vector<std::pair<int, CycloScalar>>;

/// A finite-dimensional Lie algebra given by structure constants over
/// Q(zeta_M). Both orientations of each bracket are stored, so antisymmetry is
/// structural for algebras built through set_bracket; loaded tables are
/// re-validated by check_structure.
class LieAlgebra {
public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> labels, int cyclotomic_order = 1);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  int dim() const { return static_cast<int>(labels_.size()); }
  int cyclotomic_order() const { return cyclotomic_order_; }
  void set_cyclotomic_order(int m) { cyclotomic_order_ = m; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  /// Sets [x_i, x_j] = terms and [x_j, x_i] = -terms. Zero coefficients are
  /// dropped; i == j requires empty terms.
  void set_bracket(int i, int j, BracketTerms terms);

  const BracketTerms& bracket(int i, int j) const {
    return table_[static_cast<size_t>(i) * dim() + j];
  }

  /// [x, y] for coordinate vectors.
  std::vector<CycloScalar> bracket_vectors(const std::vector<CycloScalar>& x,
                                           const std::vector<CycloScalar>& y) const;

private:
  std::string name_;
  std::vector<std::string> labels_;
  int cyclotomic_order_ = 1;
  std::vector<BracketTerms> table_;
};

struct StructureCheck {
  bool ok = true;
  std::optional<std::array<int, 3>> failing_triple; // Jacobi
  std::optional<std::array<int, 2>> failing_pair;   // antisymmetry
  long triples_checked = 0;
  std::string message;
};

/// Exact Jacobi + antisymmetry over all basis triples/pairs.
StructureCheck check_jacobi(const LieAlgebra& L);

/// q^{(+)n} with component-wise brackets; labels are suffixed "@c".
LieAlgebra direct_sum(const LieAlgebra& L, int copies);

} // namespace twistloop
