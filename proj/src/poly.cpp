#include "twistloop/poly.hpp"

#include "twistloop/errors.hpp"

#include <algorithm>
#include <sstream>

namespace twistloop {

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.e;
  return d;
}

bool Monomial::contains(Var v) const { return exponent_of(v) > 0; }

int Monomial::exponent_of(Var v) const {
  for (const auto& f : factors_)
    if (f.v == v) return f.e;
  return 0;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  size_t i = 0, j = 0;
  while (i < factors_.size() && j < other.factors_.size()) {
    if (factors_[i].v == other.factors_[j].v) {
      out.factors_.push_back({factors_[i].v, factors_[i].e + other.factors_[j].e});
      ++i;
      ++j;
    } else if (factors_[i].v < other.factors_[j].v) {
      out.factors_.push_back(factors_[i++]);
    } else {
      out.factors_.push_back(other.factors_[j++]);
    }
  }
  while (i < factors_.size()) out.factors_.push_back(factors_[i++]);
  while (j < other.factors_.size()) out.factors_.push_back(other.factors_[j++]);
  return out;
}

Monomial Monomial::times_var(Var v, int e) const { return times(Monomial(v, e)); }

std::optional<Monomial> Monomial::without_one(Var v) const {
  Monomial out;
  bool found = false;
  for (const auto& f : factors_) {
    if (f.v == v) {
      found = true;
      if (f.e > 1) out.factors_.push_back({f.v, f.e - 1});
    } else {
      out.factors_.push_back(f);
    }
  }
  if (!found) return std::nullopt;
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Lexicographic on the sorted factor sequences.
  size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.factors_[i].v != b.factors_[i].v) return a.factors_[i].v < b.factors_[i].v;
    if (a.factors_[i].e != b.factors_[i].e) return a.factors_[i].e > b.factors_[i].e;
  }
  return a.factors_.size() < b.factors_.size();
}

Poly Poly::constant(CycloScalar c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(Monomial(), std::move(c));
  return p;
}

Poly Poly::variable(Var v) {
  Poly p;
  p.terms_.emplace_back(Monomial(v), CycloScalar::one());
  return p;
}

Poly Poly::term(Monomial m, CycloScalar c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  PolyBuilder b;
  for (auto& [m, c] : terms) b.add(std::move(m), std::move(c));
  return b.build();
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = rhs.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    if (terms_[i].first == rhs.terms_[j].first) {
      CycloScalar c = terms_[i].second + rhs.terms_[j].second;
      if (!c.is_zero()) merged.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    } else if (terms_[i].first < rhs.terms_[j].first) {
      merged.push_back(terms_[i++]);
    } else {
      merged.push_back(rhs.terms_[j++]);
    }
  }
  while (i < terms_.size()) merged.push_back(terms_[i++]);
  while (j < rhs.terms_.size()) merged.push_back(rhs.terms_[j++]);
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly operator*(const Poly& a, const Poly& b) {
  PolyBuilder acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) acc.add(ma.times(mb), ca * cb);
  }
  return acc.build();
}

Poly Poly::scaled(const CycloScalar& s) const {
  if (s.is_zero()) return Poly();
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c *= s;
  return out;
}

Poly Poly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent_of(v);
    if (e == 0) continue;
    out.emplace_back(*m.without_one(v), c * CycloScalar(e));
  }
  return Poly::from_terms(std::move(out));
}

CycloScalar Poly::evaluate(const std::function<CycloScalar(Var)>& point) const {
  CycloScalar total;
  for (const auto& [m, c] : terms_) {
    CycloScalar value = c;
    for (const auto& f : m.factors()) {
      CycloScalar base = point(f.v);
      for (int e = 0; e < f.e; ++e) value *= base;
    }
    total += value;
  }
  return total;
}

Poly Poly::substitute(const std::function<const Poly*(Var)>& image) const {
  Poly total;
  for (const auto& [m, c] : terms_) {
    Poly prod = Poly::constant(c);
    for (const auto& f : m.factors()) {
      const Poly* img = image(f.v);
      Poly factor = img ? *img : Poly::variable(f.v);
      for (int e = 0; e < f.e; ++e) prod = prod * factor;
    }
    total += prod;
  }
  return total;
}

Poly Poly::map_vars(const std::function<Var(Var)>& fn) const {
  PolyBuilder acc;
  for (const auto& [m, c] : terms_) {
    Monomial img;
    for (const auto& f : m.factors()) img = img.times_var(fn(f.v), f.e);
    acc.add(std::move(img), c);
  }
  return acc.build();
}

std::vector<Var> Poly::variables() const {
  std::vector<Var> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vars.push_back(f.v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::string Poly::str(const std::function<std::string(Var)>& var_name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (const auto& f : m.factors()) {
      os << " * " << var_name(f.v);
      if (f.e > 1) os << "^" << f.e;
    }
  }
  return os.str();
}

void PolyBuilder::add(Monomial m, CycloScalar c) {
  if (c.is_zero()) return;
  auto it = acc_.find(m);
  if (it == acc_.end())
    acc_.emplace(std::move(m), std::move(c));
  else
    it->second += c;
}

void PolyBuilder::add_poly(const Poly& p, const CycloScalar& scale) {
  if (scale.is_zero()) return;
  for (const auto& [m, c] : p.terms()) add(m, c * scale);
}

Poly PolyBuilder::build() {
  // std::map iterates in the canonical monomial order already.
  Poly p;
  p.terms_.reserve(acc_.size());
  for (auto& [m, c] : acc_) {
    if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
  }
  acc_.clear();
  return p;
}

std::function<std::string(Var)> var_namer(const std::vector<std::string>& labels) {
  return [labels](Var v) {
    std::string base = (v.base >= 0 && v.base < static_cast<int>(labels.size()))
                           ? labels[v.base]
                           : ("x" + std::to_string(v.base));
    if (v.t == 0) return base;
    return base + "[t^" + std::to_string(v.t) + "]";
  };
}

} // namespace twistloop
