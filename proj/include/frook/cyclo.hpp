#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "frook/ring.hpp"

namespace frook {

/// Context for the cyclotomic field Q(xi_d): holds d, phi(d) and the minimal
/// polynomial Phi_d of a primitive d-th root of unity xi. Elements of the
/// field are polynomials in xi of degree < phi(d).
struct CycloCtx {
  explicit CycloCtx(unsigned d);

  unsigned d;
  unsigned phi;
  std::vector<Rat> min_poly;  // monic, size phi+1, Phi_d coefficients low-to-high
};

/// An element of Q(xi_d), reduced modulo Phi_d. All arithmetic is exact;
/// nonzero elements are invertible (Phi_d is irreducible over Q).
class CycloRat {
 public:
  CycloRat() : ctx_(nullptr) {}
  explicit CycloRat(const CycloCtx* ctx);                    // zero
  CycloRat(const CycloCtx* ctx, const Rat& r);               // rational embed
  CycloRat(const CycloCtx* ctx, std::vector<Rat> coeffs);    // reduced mod Phi_d

  static CycloRat xi_pow(const CycloCtx* ctx, long k);

  const CycloCtx* ctx() const { return ctx_; }
  bool is_zero() const;
  bool is_rational(Rat* out = nullptr) const;

  CycloRat operator-() const;
  CycloRat& operator+=(const CycloRat& o);
  CycloRat& operator-=(const CycloRat& o);
  CycloRat& operator*=(const CycloRat& o);
  friend CycloRat operator+(CycloRat a, const CycloRat& b) { return a += b; }
  friend CycloRat operator-(CycloRat a, const CycloRat& b) { return a -= b; }
  friend CycloRat operator*(CycloRat a, const CycloRat& b) { return a *= b; }
  bool operator==(const CycloRat& o) const;
  bool operator!=(const CycloRat& o) const { return !(*this == o); }

  CycloRat inverse() const;  // throws on zero

  const std::vector<Rat>& coeffs() const { return c_; }
  std::string to_string() const;

 private:
  const CycloCtx* ctx_;
  std::vector<Rat> c_;  // size phi, coefficient of xi^k at index k
};

/// Laurent polynomial in t = u^{1/2} with coefficients in Q(xi_d). Stored as
/// exponent -> coefficient with no explicit zeros. A unit is a single
/// monomial (every nonzero coefficient is invertible in the field).
class Laurent {
 public:
  Laurent() : ctx_(nullptr) {}
  explicit Laurent(const CycloCtx* ctx) : ctx_(ctx) {}

  static Laurent from(const CycloCtx* ctx, const CycloRat& a, int t_exp = 0);
  static Laurent from(const CycloCtx* ctx, const Rat& r, int t_exp = 0);
  static Laurent t_pow(const CycloCtx* ctx, int k);
  static Laurent u_pow(const CycloCtx* ctx, int k) { return t_pow(ctx, 2 * k); }
  static Laurent one(const CycloCtx* ctx) { return t_pow(ctx, 0); }

  const CycloCtx* ctx() const { return ctx_; }
  bool is_zero() const { return c_.empty(); }
  bool is_unit() const { return c_.size() == 1; }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator*(const Laurent& o) const;
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  /// Exact substitution t = t0. t0 = 0 requires no negative exponents.
  CycloRat specialize(const Rat& t0) const;

  const std::map<int, CycloRat>& terms() const { return c_; }
  std::string to_string() const;

 private:
  void set(int e, CycloRat v);
  const CycloCtx* ctx_;
  std::map<int, CycloRat> c_;
};

}  // namespace frook
