#include "twistloop/cyclotomic.hpp"

#include "twistloop/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace twistloop {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidRoot: return "InvalidRoot";
    case ErrorCode::NonexistentLimit: return "NonexistentLimit";
    case ErrorCode::WindowOverflow: return "WindowOverflow";
    case ErrorCode::BadTruncation: return "BadTruncation";
    case ErrorCode::BadRoot: return "BadRoot";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ResolutionFailed: return "ResolutionFailed";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Rational rational_from_string(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational r(Integer(text));
      return r;
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad rational literal '" + text + "'");
  }
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return Integer(0);
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

namespace {

// Dense integer polynomials, constant term first.
using ZPoly = std::vector<Integer>;

ZPoly zpoly_x_pow_minus_one(int n) {
  ZPoly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  return p;
}

// Exact division, quotient only; both inputs monic in our usage.
ZPoly zpoly_div_exact(ZPoly num, const ZPoly& den) {
  ZPoly quot(num.size() - den.size() + 1);
  for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
    Integer c = num[i + den.size() - 1] / den.back();
    quot[i] = c;
    if (c != 0) {
      for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
  }
  return quot;
}

std::vector<Integer> cyclotomic_impl(int order, std::map<int, ZPoly>& cache) {
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  ZPoly p = zpoly_x_pow_minus_one(order);
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) p = zpoly_div_exact(std::move(p), cyclotomic_impl(d, cache));
  }
  cache[order] = p;
  return p;
}

struct CycloContext {
  int order = 1;
  long degree = 1;                               // phi(order)
  std::vector<Rational> phi_monic;               // Phi_order, length degree+1
  std::vector<std::vector<Rational>> power_rep;  // zeta^k for k in [0, order)
};

const CycloContext& context(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycloContext>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(order);
  if (it != registry.end()) return *it->second;

  auto ctx = std::make_unique<CycloContext>();
  ctx->order = order;
  auto phi = cyclotomic_polynomial(order);
  ctx->degree = static_cast<long>(phi.size()) - 1;
  ctx->phi_monic.reserve(phi.size());
  for (const auto& c : phi) ctx->phi_monic.emplace_back(c);

  // zeta^k in the power basis, via repeated multiply-by-x with reduction.
  std::vector<Rational> cur(ctx->degree);
  cur[0] = 1;
  ctx->power_rep.push_back(cur);
  for (int k = 1; k < order; ++k) {
    std::vector<Rational> next(ctx->degree);
    Rational top = cur[ctx->degree - 1];
    for (long i = 0; i < ctx->degree - 1; ++i) next[i + 1] = cur[i];
    if (top != 0) {
      // x^degree = -(phi_0 + phi_1 x + ... ) since Phi is monic
      for (long i = 0; i < ctx->degree; ++i) next[i] -= top * ctx->phi_monic[i];
    }
    ctx->power_rep.push_back(next);
    cur = next;
  }

  auto& ref = *ctx;
  registry[order] = std::move(ctx);
  return ref;
}

// Reduces a polynomial of degree < 2*deg - 1 modulo Phi_order in place,
// returning the low `deg` coefficients.
std::vector<Rational> reduce(std::vector<Rational> raw, const CycloContext& ctx) {
  const long deg = ctx.degree;
  for (long i = static_cast<long>(raw.size()) - 1; i >= deg; --i) {
    if (raw[i] == 0) continue;
    Rational c = raw[i];
    raw[i] = 0;
    for (long j = 0; j <= deg; ++j) raw[i - deg + j] -= c * ctx.phi_monic[j];
  }
  raw.resize(deg);
  return raw;
}

} // namespace

std::vector<Integer> cyclotomic_polynomial(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be >= 1");
  static std::mutex mutex;
  static std::map<int, ZPoly> cache;
  std::lock_guard<std::mutex> lock(mutex);
  return cyclotomic_impl(order, cache);
}

long euler_phi(int order) {
  return static_cast<long>(cyclotomic_polynomial(order).size()) - 1;
}

int lcm_order(int a, int b) { return static_cast<int>(std::lcm(a, b)); }

CycloScalar CycloScalar::zeta_power(int order, long k) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  const auto& ctx = context(order);
  long r = ((k % order) + order) % order;
  CycloScalar out;
  out.order_ = order;
  out.coeffs_ = ctx.power_rep[r];
  return out;
}

CycloScalar CycloScalar::from_coeffs(int order, std::vector<Rational> coeffs) {
  const auto& ctx = context(order);
  if (static_cast<long>(coeffs.size()) != ctx.degree)
    throw Error(ErrorCode::InvalidArgument, "coefficient vector has wrong length");
  CycloScalar out;
  out.order_ = order;
  out.coeffs_ = std::move(coeffs);
  return out;
}

bool CycloScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycloScalar::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

CycloScalar CycloScalar::lifted(int order) const {
  if (order == order_) return *this;
  if (order % order_ != 0)
    throw Error(ErrorCode::InvalidArgument, "cannot embed: order does not divide target");
  const auto& ctx = context(order);
  const long step = order / order_;
  std::vector<Rational> out(ctx.degree);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& rep = ctx.power_rep[(static_cast<long>(i) * step) % order];
    for (long j = 0; j < ctx.degree; ++j) out[j] += coeffs_[i] * rep[j];
  }
  CycloScalar result;
  result.order_ = order;
  result.coeffs_ = std::move(out);
  return result;
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& rhs) {
  if (order_ == rhs.order_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  int target = lcm_order(order_, rhs.order_);
  *this = lifted(target);
  CycloScalar other = rhs.lifted(target);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& rhs) {
  if (order_ == rhs.order_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }
  int target = lcm_order(order_, rhs.order_);
  *this = lifted(target);
  CycloScalar other = rhs.lifted(target);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& rhs) {
  // Degree-1 fields (orders 1 and 2) reduce to a single rational multiply.
  if (coeffs_.size() == 1 && rhs.coeffs_.size() == 1 && order_ <= 2 && rhs.order_ <= 2) {
    coeffs_[0] *= rhs.coeffs_[0];
    order_ = std::max(order_, rhs.order_);
    return *this;
  }
  // Scaling by a plain rational never changes the basis.
  if (rhs.order_ == 1) {
    const Rational& s = rhs.coeffs_[0];
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (order_ == 1) {
    Rational s = coeffs_[0];
    *this = rhs;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  int target = lcm_order(order_, rhs.order_);
  CycloScalar a = lifted(target);
  CycloScalar b = rhs.lifted(target);
  const auto& ctx = context(target);
  std::vector<Rational> raw(2 * ctx.degree - 1);
  for (long i = 0; i < ctx.degree; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (long j = 0; j < ctx.degree; ++j) {
      if (b.coeffs_[j] == 0) continue;
      raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  order_ = target;
  coeffs_ = reduce(std::move(raw), ctx);
  return *this;
}

void CycloScalar::add_mul(const CycloScalar& b, const CycloScalar& c) {
  if (order_ <= 2 && b.order_ <= 2 && c.order_ <= 2) {
    coeffs_[0] += b.coeffs_[0] * c.coeffs_[0];
    order_ = std::max(order_, std::max(b.order_, c.order_));
    return;
  }
  *this += b * c;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (coeffs_.size() == 1) {
    CycloScalar out(*this);
    out.coeffs_[0] = Rational(1) / coeffs_[0];
    return out;
  }
  // Extended Euclid in Q[x] for gcd(a, Phi) = 1: u*a + v*Phi = 1, inverse = u(zeta).
  const auto& ctx = context(order_);
  using QPoly = std::vector<Rational>;
  auto deg = [](const QPoly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1L;
  };
  QPoly r0 = ctx.phi_monic, r1 = coeffs_;
  QPoly u0(1), u1{Rational(1)}; // coefficients of `a` in r0, r1 (u0 = 0, u1 = 1)
  u0[0] = 0;
  while (true) {
    long d1 = deg(r1);
    if (d1 < 0) throw Error(ErrorCode::DivisionByZero, "element not invertible");
    if (d1 == 0) break;
    // r0 = q*r1 + r; replace (r0, r1) <- (r1, r)
    QPoly q(deg(r0) - d1 + 1);
    QPoly rem = r0;
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
      Rational c = rem[i + d1] / r1[d1];
      q[i] = c;
      if (c != 0)
        for (long j = 0; j <= d1; ++j) rem[i + j] -= c * r1[j];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    // u_new = u0 - q*u1
    QPoly u_new(std::max(u0.size(), q.size() + u1.size()));
    for (size_t i = 0; i < u0.size(); ++i) u_new[i] = u0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < u1.size(); ++j) u_new[i + j] -= q[i] * u1[j];
    }
    u0 = u1;
    u1 = std::move(u_new);
    r0 = r1;
    r1 = std::move(rem);
  }
  Rational lead = r1[0];
  std::vector<Rational> out(ctx.degree);
  for (size_t i = 0; i < u1.size() && i < out.size(); ++i) out[i] = u1[i] / lead;
  if (u1.size() > static_cast<size_t>(ctx.degree)) {
    std::vector<Rational> raw(u1.size());
    for (size_t i = 0; i < u1.size(); ++i) raw[i] = u1[i] / lead;
    out = reduce(std::move(raw), ctx);
  }
  CycloScalar result;
  result.order_ = order_;
  result.coeffs_ = std::move(out);
  return result;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  int target = lcm_order(a.order_, b.order_);
  return a.lifted(target).coeffs_ == b.lifted(target).coeffs_;
}

std::string CycloScalar::str() const {
  if (is_rational()) return rational_to_string(coeffs_[0]);
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << rational_to_string(coeffs_[i]);
    if (i == 1) os << "*z" << order_;
    if (i > 1) os << "*z" << order_ << "^" << i;
  }
  os << ")";
  return os.str();
}

} // namespace twistloop
