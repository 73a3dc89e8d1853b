#pragma once

#include "twistloop/cyclotomic.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twistloop {

/// A symmetric-algebra variable: the basis element x_base tensored with t^t.
/// Plain finite-dimensional polynomials use t = 0; twisted-loop variables obey
/// x in q_{k mod m} for t = -k.
struct Var {
  std::int32_t base = 0;
  std::int32_t t = 0;

  friend bool operator==(const Var& a, const Var& b) { return a.base == b.base && a.t == b.t; }
  // Canonical variable order: (t_exponent, base_index).
  friend std::strong_ordering operator<=>(const Var& a, const Var& b) {
    if (auto c = a.t <=> b.t; c != 0) return c;
    return a.base <=> b.base;
  }
  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t)) << 32) |
           static_cast<std::uint32_t>(base);
  }
};

struct VarPow {
  Var v;
  int e = 1;
  friend bool operator==(const VarPow&, const VarPow&) = default;
};

/// Sorted exponent vector; graded-lex order keyed on (t_exponent, base_index).
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(Var v, int e = 1) {
    if (e > 0) factors_.push_back({v, e});
  }

  const std::vector<VarPow>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  bool contains(Var v) const;
  int exponent_of(Var v) const;

  Monomial times(const Monomial& other) const;
  Monomial times_var(Var v, int e = 1) const;
  /// Removes one power of v; nullopt when v does not occur.
  std::optional<Monomial> without_one(Var v) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator<(const Monomial& a, const Monomial& b);

private:
  std::vector<VarPow> factors_;
};

/// Sparse exact multivariate polynomial over Q(zeta). Terms are kept sorted in
/// the canonical monomial order with no zero coefficients, so equality (and in
/// particular equality to zero) is structural.
class Poly {
public:
  using Term = std::pair<Monomial, CycloScalar>;

  Poly() = default;
  static Poly constant(CycloScalar c);
  static Poly variable(Var v);
  static Poly term(Monomial m, CycloScalar c);
  static Poly from_terms(std::vector<Term> terms); // normalizes

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  long term_count() const { return static_cast<long>(terms_.size()); }

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const CycloScalar& s) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative(Var v) const;
  CycloScalar evaluate(const std::function<CycloScalar(Var)>& point) const;
  /// Substitutes image(v) for each variable; image == nullptr keeps v.
  Poly substitute(const std::function<const Poly*(Var)>& image) const;
  /// Applies var -> var' renaming/merging (e.g. psi, mirrors).
  Poly map_vars(const std::function<Var(Var)>& fn) const;

  std::vector<Var> variables() const;

  /// Canonical text: "coef * label[t^k]^e * ..." terms joined by " + ";
  /// the zero polynomial prints as "0".
  std::string str(const std::function<std::string(Var)>& var_name) const;

private:
  friend class PolyBuilder;
  std::vector<Term> terms_;
};

/// Accumulator for bulk construction (products, brackets).
class PolyBuilder {
public:
  void add(Monomial m, CycloScalar c);
  void add_poly(const Poly& p, const CycloScalar& scale);
  Poly build();

private:
  std::map<Monomial, CycloScalar> acc_;
};

/// Default variable naming against an algebra's labels.
std::function<std::string(Var)> var_namer(const std::vector<std::string>& labels);

} // namespace twistloop
