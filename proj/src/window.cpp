#include "twistloop/window.hpp"

#include "twistloop/errors.hpp"

namespace twistloop {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

} // namespace

bool TwistedWindow::holds_var(Var v) const {
  if (v.t < k_min || v.t > k_max) return false;
  if (v.base < 0 || v.base >= base->dim()) return false;
  return grading->degree[v.base] == mod(-v.t, grading->m);
}

std::vector<Var> TwistedWindow::variables() const {
  std::vector<Var> out;
  for (int t = k_min; t <= k_max; ++t) {
    int want = mod(-t, grading->m);
    for (int b = 0; b < base->dim(); ++b)
      if (grading->degree[b] == want) out.push_back(Var{b, t});
  }
  return out;
}

bool TwistedWindow::holds(const Poly& p) const {
  for (Var v : p.variables())
    if (!holds_var(v)) return false;
  return true;
}

TwistedWindow window_nonpositive(const LieAlgebra& L, const Grading& grading, int max_k) {
  TwistedWindow w;
  w.base = &L;
  w.grading = &grading;
  w.side = TwistedWindow::Side::WN;
  w.k_min = -max_k;
  w.k_max = 0;
  w.N = max_k + 1;
  return w;
}

TwistedWindow window_positive(const LieAlgebra& L, const Grading& grading, int max_t) {
  TwistedWindow w;
  w.base = &L;
  w.grading = &grading;
  w.side = TwistedWindow::Side::Positive;
  w.k_min = 1;
  w.k_max = max_t;
  return w;
}

int CyclicQuotient::var_index(int base, int k) const {
  int d = static_cast<int>(lookup.size()) / N;
  return lookup[static_cast<size_t>(mod(k, N)) * d + base];
}

CyclicQuotient build_cyclic_quotient(const LieAlgebra& L, const Grading& grading, int N) {
  if (N < 1 || N % grading.m != 0)
    throw Error(ErrorCode::BadTruncation,
                "cyclic quotient needs N = nm, got N = " + std::to_string(N) + ", m = " +
                    std::to_string(grading.m));
  const int d = L.dim();
  CyclicQuotient out;
  out.N = N;
  out.lookup.assign(static_cast<size_t>(N) * d, -1);
  std::vector<std::string> labels;
  for (int k = 0; k < N; ++k) {
    int want = mod(k, grading.m);
    for (int b = 0; b < d; ++b) {
      if (grading.degree[b] != want) continue;
      out.lookup[static_cast<size_t>(k) * d + b] = static_cast<int>(out.origin.size());
      out.origin.emplace_back(b, k);
      labels.push_back(L.label(b) + (k == 0 ? "" : "@t" + std::to_string(-k)));
    }
  }
  LieAlgebra Q(L.name() + "/(t^-" + std::to_string(N) + "-1)", labels, L.cyclotomic_order());
  const int dq = Q.dim();
  for (int i = 0; i < dq; ++i) {
    auto [b1, k1] = out.origin[i];
    for (int j = i + 1; j < dq; ++j) {
      auto [b2, k2] = out.origin[j];
      const auto& br = L.bracket(b1, b2);
      if (br.empty()) continue;
      int k = mod(k1 + k2, N);
      BracketTerms terms;
      for (const auto& [b3, c] : br) {
        int idx = out.lookup[static_cast<size_t>(k) * d + b3];
        if (idx < 0)
          throw Error(ErrorCode::BadTruncation, "bracket escapes the quotient basis");
        terms.emplace_back(idx, c);
      }
      Q.set_bracket(i, j, std::move(terms));
    }
  }
  out.algebra = std::move(Q);
  return out;
}

Poly CyclicQuotient::to_quotient_vars(const Poly& p) const {
  int d = static_cast<int>(lookup.size()) / N;
  return p.map_vars([&](Var v) {
    int k = mod(-v.t, N);
    int idx = lookup[static_cast<size_t>(k) * d + v.base];
    if (idx < 0)
      throw Error(ErrorCode::UnknownVariable,
                  "variable does not lie in the quotient (degree mismatch)");
    return Var{idx, 0};
  });
}

Mat cyclic_quotient_dft(const CyclicQuotient& Q, const LieAlgebra& base, const Grading& grading) {
  const int d = base.dim();
  const int n = Q.N / grading.m; // copies in the target
  const int dim = Q.algebra.dim();
  // Evaluation points tau_c = zeta_N^c, c = 0..n-1: per eigenvector the
  // (c, u)-block is a scaled Vandermonde in omega^{-c}, hence invertible.
  Mat out(n * d, dim);
  for (int col = 0; col < dim; ++col) {
    auto [b, k] = Q.origin[col];
    for (int c = 0; c < n; ++c)
      out.at(c * d + b, col) = CycloScalar::zeta_power(Q.N, static_cast<long>(-c) * k);
  }
  return out;
}

Poly mirror_t(const Poly& p) {
  return p.map_vars([](Var v) { return Var{v.base, -v.t}; });
}

Grading mirror_grading(const Grading& grading) {
  Grading out = grading;
  for (auto& d : out.degree) d = (grading.m - d) % grading.m;
  return out;
}

Poly psi_quotient(const Poly& p, const Grading& grading) {
  for (Var v : p.variables()) {
    if (grading.degree[v.base] != mod(-v.t, grading.m))
      throw Error(ErrorCode::UnknownVariable,
                  "variable t-exponent does not match its grading component");
  }
  return p.map_vars([](Var v) { return Var{v.base, 0}; });
}

} // namespace twistloop
