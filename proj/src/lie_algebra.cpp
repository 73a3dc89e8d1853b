#include "twistloop/lie_algebra.hpp"

#include "twistloop/errors.hpp"

#include <algorithm>

namespace twistloop {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, int cyclotomic_order)
    : name_(std::move(name)), labels_(std::move(labels)), cyclotomic_order_(cyclotomic_order) {
  table_.resize(static_cast<size_t>(dim()) * dim());
}

void LieAlgebra::set_bracket(int i, int j, BracketTerms terms) {
  terms.erase(std::remove_if(terms.begin(), terms.end(),
                             [](const auto& t) { return t.second.is_zero(); }),
              terms.end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (i == j) {
    if (!terms.empty()) throw Error(ErrorCode::InvalidArgument, "[x,x] must vanish");
    return;
  }
  BracketTerms negated = terms;
  for (auto& t : negated) t.second = -t.second;
  table_[static_cast<size_t>(i) * dim() + j] = std::move(terms);
  table_[static_cast<size_t>(j) * dim() + i] = std::move(negated);
}

std::vector<CycloScalar> LieAlgebra::bracket_vectors(const std::vector<CycloScalar>& x,
                                                     const std::vector<CycloScalar>& y) const {
  std::vector<CycloScalar> out(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      CycloScalar xy = x[i] * y[j];
      for (const auto& [k, c] : bracket(i, j)) out[k].add_mul(xy, c);
    }
  }
  return out;
}

StructureCheck check_jacobi(const LieAlgebra& L) {
  StructureCheck result;
  const int n = L.dim();

  // Antisymmetry of the stored table.
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const auto& ij = L.bracket(i, j);
      const auto& ji = L.bracket(j, i);
      bool ok = (ij.size() == ji.size());
      if (ok) {
        for (size_t t = 0; t < ij.size(); ++t) {
          if (ij[t].first != ji[t].first || !(ij[t].second + ji[t].second).is_zero()) {
            ok = false;
            break;
          }
        }
      }
      if (i == j && !ij.empty()) ok = false;
      if (!ok) {
        result.ok = false;
        result.failing_pair = {i, j};
        result.message = "antisymmetry fails on (" + L.label(i) + ", " + L.label(j) + ")";
        return result;
      }
    }
  }

  // Jacobi with a reusable dense accumulator.
  std::vector<CycloScalar> scratch(n);
  std::vector<int> touched;
  touched.reserve(16);
  auto accumulate = [&](int a, int b, int c) {
    // [[a,b],c]
    for (const auto& [k1, c1] : L.bracket(a, b)) {
      for (const auto& [k2, c2] : L.bracket(k1, c)) {
        if (scratch[k2].is_zero()) touched.push_back(k2);
        scratch[k2].add_mul(c1, c2);
      }
    }
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool ij = !L.bracket(i, j).empty();
      for (int k = j + 1; k < n; ++k) {
        if (!ij && L.bracket(j, k).empty() && L.bracket(k, i).empty()) continue;
        accumulate(i, j, k);
        accumulate(j, k, i);
        accumulate(k, i, j);
        ++result.triples_checked;
        bool zero = true;
        for (int t : touched) {
          if (!scratch[t].is_zero()) {
            zero = false;
            break;
          }
        }
        for (int t : touched) scratch[t] = CycloScalar::zero();
        touched.clear();
        if (!zero) {
          result.ok = false;
          result.failing_triple = {i, j, k};
          result.message = "Jacobi fails on (" + L.label(i) + ", " + L.label(j) + ", " +
                           L.label(k) + ")";
          return result;
        }
      }
    }
  }
  return result;
}

LieAlgebra direct_sum(const LieAlgebra& L, int copies) {
  if (copies < 1) throw Error(ErrorCode::InvalidArgument, "direct_sum: copies must be >= 1");
  const int d = L.dim();
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(d) * copies);
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < d; ++i) labels.push_back(L.label(i) + "@" + std::to_string(c));
  LieAlgebra out(L.name() + "^" + std::to_string(copies), std::move(labels),
                 L.cyclotomic_order());
  for (int c = 0; c < copies; ++c) {
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        BracketTerms terms = L.bracket(i, j);
        for (auto& t : terms) t.first += c * d;
        out.set_bracket(c * d + i, c * d + j, std::move(terms));
      }
    }
  }
  return out;
}

} // namespace twistloop
