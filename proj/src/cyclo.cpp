#include "frook/cyclo.hpp"

#include <sstream>

namespace frook {

namespace {

using Poly = std::vector<Rat>;  // low-to-high, no trailing-zero guarantee

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of polynomials over Q; remainder must be zero.
Poly divide_exact(Poly num, const Poly& den) {
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rat c = num.back() / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    trim(num);
    if (num.size() < den.size()) break;
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("divide_exact: nonzero remainder");
  return q;
}

// Phi_d via x^d - 1 = prod_{e | d} Phi_e.
Poly cyclotomic_poly(unsigned d) {
  Poly num(d + 1, Rat(0));
  num[0] = -1;
  num[d] = 1;
  for (unsigned e = 1; e < d; ++e) {
    if (d % e == 0) num = divide_exact(num, cyclotomic_poly(e));
  }
  return num;
}

}  // namespace

CycloCtx::CycloCtx(unsigned d_) : d(d_) {
  if (d == 0) throw std::invalid_argument("CycloCtx: d must be >= 1");
  min_poly = cyclotomic_poly(d);
  phi = static_cast<unsigned>(min_poly.size() - 1);
}

CycloRat::CycloRat(const CycloCtx* ctx) : ctx_(ctx), c_(ctx->phi, Rat(0)) {}

CycloRat::CycloRat(const CycloCtx* ctx, const Rat& r) : ctx_(ctx), c_(ctx->phi, Rat(0)) {
  c_[0] = r;
}

CycloRat::CycloRat(const CycloCtx* ctx, std::vector<Rat> coeffs) : ctx_(ctx) {
  // Reduce modulo the monic minimal polynomial.
  const auto& mp = ctx->min_poly;
  while (coeffs.size() > ctx->phi) {
    Rat lead = coeffs.back();
    size_t shift = coeffs.size() - mp.size();
    if (lead != 0)
      for (size_t i = 0; i < mp.size(); ++i) coeffs[shift + i] -= lead * mp[i];
    coeffs.pop_back();
  }
  coeffs.resize(ctx->phi, Rat(0));
  c_ = std::move(coeffs);
}

CycloRat CycloRat::xi_pow(const CycloCtx* ctx, long k) {
  long m = k % long(ctx->d);
  if (m < 0) m += ctx->d;
  std::vector<Rat> c(static_cast<size_t>(m) + 1, Rat(0));
  c.back() = 1;
  return CycloRat(ctx, std::move(c));
}

bool CycloRat::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloRat::is_rational(Rat* out) const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  if (out) *out = c_.empty() ? Rat(0) : c_[0];
  return true;
}

CycloRat CycloRat::operator-() const {
  CycloRat r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloRat& CycloRat::operator+=(const CycloRat& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloRat& CycloRat::operator-=(const CycloRat& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloRat& CycloRat::operator*=(const CycloRat& o) {
  std::vector<Rat> prod(2 * ctx_->phi, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  *this = CycloRat(ctx_, std::move(prod));
  return *this;
}

bool CycloRat::operator==(const CycloRat& o) const { return c_ == o.c_; }

CycloRat CycloRat::inverse() const {
  if (is_zero()) throw std::domain_error("CycloRat::inverse: zero");
  // Extended Euclid in Q[x] against the irreducible minimal polynomial:
  // a*f + b*Phi = gcd = const, so f^{-1} = a / const.
  Poly r0 = ctx_->min_poly, r1 = c_;
  trim(r1);
  Poly s0 = {}, s1 = {Rat(1)};  // coefficients on f
  while (true) {
    trim(r1);
    if (r1.empty()) throw std::logic_error("CycloRat::inverse: gcd chain hit zero");
    if (r1.size() == 1) break;
    // r0 = q*r1 + r2
    Poly q(r0.size() - r1.size() + 1, Rat(0));
    Poly rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rat c = rem.back() / r1.back();
      size_t shift = rem.size() - r1.size();
      q[shift] += c;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      trim(rem);
    }
    // s2 = s0 - q*s1
    Poly qs(q.size() + s1.size(), Rat(0));
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    Poly s2 = s0;
    s2.resize(std::max(s2.size(), qs.size()), Rat(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  Rat unit = r1[0];
  for (auto& x : s1) x /= unit;
  return CycloRat(ctx_, std::move(s1));
}

std::string CycloRat::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i >= 1) os << "*xi" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Laurent Laurent::from(const CycloCtx* ctx, const CycloRat& a, int t_exp) {
  Laurent p(ctx);
  p.set(t_exp, a);
  return p;
}

Laurent Laurent::from(const CycloCtx* ctx, const Rat& r, int t_exp) {
  return from(ctx, CycloRat(ctx, r), t_exp);
}

Laurent Laurent::t_pow(const CycloCtx* ctx, int k) {
  return from(ctx, CycloRat(ctx, Rat(1)), k);
}

void Laurent::set(int e, CycloRat v) {
  if (v.is_zero())
    c_.erase(e);
  else
    c_[e] = std::move(v);
}

Laurent Laurent::operator-() const {
  Laurent r(ctx_);
  for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [e, v] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_.emplace(e, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  *this += -o;
  return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r(ctx_ ? ctx_ : o.ctx_);
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) {
      CycloRat prod = v1 * v2;
      auto it = r.c_.find(e1 + e2);
      if (it == r.c_.end()) {
        if (!prod.is_zero()) r.c_.emplace(e1 + e2, std::move(prod));
      } else {
        it->second += prod;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
  return r;
}

CycloRat Laurent::specialize(const Rat& t0) const {
  CycloRat acc(ctx_);
  if (t0 == 0) {
    for (const auto& [e, v] : c_) {
      if (e < 0) throw std::domain_error("Laurent::specialize: pole at zero");
      if (e == 0) acc += v;
    }
    return acc;
  }
  for (const auto& [e, v] : c_) acc += v * CycloRat(ctx_, rat_pow(t0, e));
  return acc;
}

std::string Laurent::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c_) {
    if (!first) os << " + ";
    os << "(" << v.to_string() << ")";
    if (e != 0) os << "*t^" << e;
    first = false;
  }
  return os.str();
}

}  // namespace frook
