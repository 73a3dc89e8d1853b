#include "twistloop/poisson.hpp"

#include "twistloop/errors.hpp"

namespace twistloop {

namespace {

inline std::uint64_t pair_key(Var u, Var v) {
  // Variables in our windows fit comfortably in 16 bits each of base and t.
  auto pack = [](Var x) {
    return (static_cast<std::uint64_t>(static_cast<std::uint16_t>(x.t)) << 16) |
           static_cast<std::uint16_t>(x.base);
  };
  return (pack(u) << 32) | pack(v);
}

} // namespace

const Poly* FiniteDimPoisson::var_bracket(Var u, Var v) const {
  if (u.t != 0 || v.t != 0)
    throw Error(ErrorCode::UnknownVariable, "finite-dimensional bracket saw a t-exponent");
  if (u.base < 0 || u.base >= L_->dim() || v.base < 0 || v.base >= L_->dim())
    throw Error(ErrorCode::UnknownVariable, "variable outside the algebra basis");
  std::uint64_t key = pair_key(u, v);
  std::lock_guard<std::mutex> lock(mutex_);
  if (auto hit = cache_.find(key); hit != cache_.end()) return hit->second.get();
  std::vector<Poly::Term> terms;
  for (const auto& [k, c] : L_->bracket(u.base, v.base))
    terms.emplace_back(Monomial(Var{k, 0}), c);
  Poly p = Poly::from_terms(std::move(terms));
  if (p.is_zero()) {
    cache_.emplace(key, nullptr);
    return nullptr;
  }
  auto owned = std::make_unique<Poly>(std::move(p));
  const Poly* raw = owned.get();
  cache_.emplace(key, std::move(owned));
  return raw;
}

const Poly* LoopPoisson::var_bracket(Var u, Var v) const {
  std::uint64_t key = pair_key(u, v);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto hit = cache_.find(key); hit != cache_.end()) return hit->second.get();
  }
  const auto& br = L_->bracket(u.base, v.base);
  int t = u.t + v.t;
  std::vector<Poly::Term> terms;
  if (!br.empty()) {
    if (t < t_min_ || t > t_max_)
      throw Error(ErrorCode::WindowOverflow,
                  "bracket leaves the window at t^" + std::to_string(t));
    for (const auto& [k, c] : br) terms.emplace_back(Monomial(Var{k, t}), c);
  }
  Poly p = Poly::from_terms(std::move(terms));
  std::lock_guard<std::mutex> lock(mutex_);
  if (p.is_zero()) {
    cache_.emplace(key, nullptr);
    return nullptr;
  }
  auto owned = std::make_unique<Poly>(std::move(p));
  const Poly* raw = owned.get();
  auto [it, ok] = cache_.emplace(key, std::move(owned));
  return it->second.get();
}

CyclicLoopPoisson::CyclicLoopPoisson(const LieAlgebra& L, const Grading& grading, int N)
    : L_(&L), grading_(&grading), N_(N) {
  if (N < 1 || N % grading.m != 0)
    throw Error(ErrorCode::BadTruncation,
                "cyclic quotient size must be a positive multiple of m");
}

int CyclicLoopPoisson::normalize(int t) const {
  int r = ((-t) % N_ + N_) % N_; // k = -t reduced into [0, N)
  return -r;
}

const Poly* CyclicLoopPoisson::var_bracket(Var u, Var v) const {
  std::uint64_t key = pair_key(u, v);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto hit = cache_.find(key); hit != cache_.end()) return hit->second.get();
  }
  const auto& br = L_->bracket(u.base, v.base);
  int t = normalize(u.t + v.t);
  std::vector<Poly::Term> terms;
  for (const auto& [k, c] : br) terms.emplace_back(Monomial(Var{k, t}), c);
  Poly p = Poly::from_terms(std::move(terms));
  std::lock_guard<std::mutex> lock(mutex_);
  if (p.is_zero()) {
    cache_.emplace(key, nullptr);
    return nullptr;
  }
  auto [it, ok] = cache_.emplace(key, std::make_unique<Poly>(std::move(p)));
  return it->second.get();
}

Poly poisson_bracket(const PoissonStructure& ctx, const Poly& f, const Poly& g) {
  // Differential entries: (variable, reduced monomial, coeff * exponent).
  struct Entry {
    Var v;
    Monomial reduced;
    CycloScalar coeff;
  };
  auto entries = [](const Poly& p) {
    std::vector<Entry> out;
    for (const auto& [m, c] : p.terms()) {
      for (const auto& fac : m.factors()) {
        out.push_back({fac.v, *m.without_one(fac.v), c * CycloScalar(fac.e)});
      }
    }
    return out;
  };
  std::vector<Entry> ef = entries(f);
  std::vector<Entry> eg = entries(g);
  PolyBuilder acc;
  for (const auto& a : ef) {
    for (const auto& b : eg) {
      const Poly* br = ctx.var_bracket(a.v, b.v);
      if (br == nullptr) continue;
      CycloScalar scale = a.coeff * b.coeff;
      Monomial base = a.reduced.times(b.reduced);
      for (const auto& [bm, bc] : br->terms()) acc.add(base.times(bm), scale * bc);
    }
  }
  return acc.build();
}

} // namespace twistloop
