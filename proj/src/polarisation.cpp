#include "twistloop/polarisation.hpp"

#include "twistloop/errors.hpp"
#include "twistloop/window.hpp"

#include <map>

namespace twistloop {

namespace {

std::vector<std::pair<int, int>> flatten_slots(const Monomial& m, const Grading& grading) {
  std::vector<std::pair<int, int>> slots; // (base, degree)
  for (const auto& f : m.factors()) {
    if (f.v.t != 0)
      throw Error(ErrorCode::UnknownVariable, "polarisation input must have t = 0 variables");
    for (int e = 0; e < f.e; ++e) slots.emplace_back(f.v.base, grading.degree[f.v.base]);
  }
  return slots;
}

// Truncated power-series product over s-weights 0..k.
Poly polarise_nonnegative(const Poly& F, int k, const Grading& grading) {
  const int m = grading.m;
  PolyBuilder acc;
  for (const auto& [mono, coeff] : F.terms()) {
    auto slots = flatten_slots(mono, grading);
    std::vector<std::map<Monomial, CycloScalar>> series(k + 1);
    series[0].emplace(Monomial(), coeff);
    for (const auto& [base, deg] : slots) {
      std::vector<std::map<Monomial, CycloScalar>> next(k + 1);
      for (int w = 0; w <= k; ++w) {
        if (series[w].empty()) continue;
        for (int ws = deg; w + ws <= k; ws += m) {
          Var v{base, -ws};
          for (const auto& [mon, c] : series[w]) {
            auto& cell = next[w + ws];
            Monomial grown = mon.times_var(v);
            auto it = cell.find(grown);
            if (it == cell.end())
              cell.emplace(std::move(grown), c);
            else
              it->second += c;
          }
        }
      }
      series = std::move(next);
    }
    for (auto& [mon, c] : series[k]) acc.add(std::move(mon), std::move(c));
  }
  return acc.build();
}

void check_bound(const Poly& p, int max_abs_t) {
  for (Var v : p.variables()) {
    int a = v.t < 0 ? -v.t : v.t;
    if (a > max_abs_t)
      throw Error(ErrorCode::WindowOverflow,
                  "polarisation needs t-exponent " + std::to_string(v.t) +
                      " beyond the window bound " + std::to_string(max_abs_t));
  }
}

} // namespace

Poly t_polarisation(const Poly& F, int k, const Grading& grading, int max_abs_t) {
  Poly out;
  if (k >= 0) {
    out = polarise_nonnegative(F, k, grading);
  } else {
    out = mirror_t(polarise_nonnegative(F, -k, mirror_grading(grading)));
  }
  check_bound(out, max_abs_t);
  return out;
}

Poly t_polarisation(const Poly& F, int k, const Grading& grading) {
  int bound = (k < 0 ? -k : k) + grading.m;
  return t_polarisation(F, k, grading, bound);
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, emit);
    cur.pop_back();
  }
}

Poly oracle_nonnegative(const Poly& F, int k, const Grading& grading) {
  const int m = grading.m;
  PolyBuilder acc;
  for (const auto& [mono, coeff] : F.terms()) {
    auto slots = flatten_slots(mono, grading);
    int ell = 0;
    for (const auto& [base, deg] : slots) ell += deg;
    if (k < ell || (k - ell) % m != 0) continue;
    int j = (k - ell) / m;
    int d = static_cast<int>(slots.size());
    if (d == 0) {
      if (k == 0) acc.add(Monomial(), coeff);
      continue;
    }
    std::vector<int> cur;
    compositions(j, d, cur, [&](const std::vector<int>& alpha) {
      Monomial out;
      for (int i = 0; i < d; ++i)
        out = out.times_var(Var{slots[i].first, -(slots[i].second + alpha[i] * m)});
      acc.add(std::move(out), coeff);
    });
  }
  return acc.build();
}

} // namespace

Poly polarisation_oracle(const Poly& F, int k, const Grading& grading) {
  if (k >= 0) return oracle_nonnegative(F, k, grading);
  return mirror_t(oracle_nonnegative(F, -k, mirror_grading(grading)));
}

Poly drop_t0_terms(const Poly& F) {
  std::vector<Poly::Term> kept;
  for (const auto& [m, c] : F.terms()) {
    bool has_t0 = false;
    for (const auto& f : m.factors()) {
      if (f.v.t == 0) {
        has_t0 = true;
        break;
      }
    }
    if (!has_t0) kept.emplace_back(m, c);
  }
  return Poly::from_terms(std::move(kept));
}

} // namespace twistloop
