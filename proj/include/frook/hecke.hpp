#pragma once

#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "frook/cosets.hpp"
#include "frook/report.hpp"
#include "frook/rook.hpp"

namespace frook {

/// Shared state for computations in the double-coset convolution algebra:
/// the unipotent group, the representatives, and memoized coset element sets.
class HeckeContext {
 public:
  HeckeContext(unsigned n, const PrimeField* F, bool unsafe_scale = false);

  unsigned n() const { return n_; }
  const PrimeField* field() const { return F_; }
  const UnipotentGroup& unipotent() const { return U_; }
  const std::vector<QData>& basis() const { return Q_; }

  const QData& canonical(const RookMatrix& m) const;      // must lie in Q
  const std::vector<RookMatrix>& coset(const QData& q) const;

 private:
  unsigned n_;
  const PrimeField* F_;
  UnipotentGroup U_;
  std::vector<QData> Q_;
  mutable std::map<RookMatrix, size_t> index_;
  mutable std::map<RookMatrix, std::vector<RookMatrix>> coset_cache_;
};

/// Element of the convolution algebra in the normalized coset basis:
/// a finitely supported map from representatives to exact rationals.
class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(const HeckeContext* ctx) : ctx_(ctx) {}
  static HeckeElement basis(const HeckeContext* ctx, const QData& q);
  static HeckeElement unit(const HeckeContext* ctx);  // basis at the identity matrix

  const HeckeContext* ctx() const { return ctx_; }
  const std::map<RookMatrix, Rat>& coeffs() const { return c_; }
  void add_term(const RookMatrix& rep, const Rat& coeff);
  bool is_zero() const { return c_.empty(); }

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement scaled(const Rat& by) const;
  bool operator==(const HeckeElement& o) const { return c_ == o.c_; }
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  const HeckeContext* ctx_ = nullptr;
  std::map<RookMatrix, Rat> c_;
};

/// Literal convolution: expand both cosets, tally the products, and read off
/// the normalized coefficients. Verifies along the way that the tally is
/// constant on every double coset (bi-invariance) and integral.
HeckeElement convolution_product_oracle(const HeckeContext& ctx, const QData& sigma,
                                        const QData& tau);

/// A generator for the structured multiplication rules.
struct GenTransposition {
  int k;
};
struct GenTorus {
  RookMatrix t;
};
struct GenShift {};
using HeckeGenerator = std::variant<GenTransposition, GenTorus, GenShift>;

/// One multiplication step by the structured rules, linear in x.
HeckeElement multiply_by_generator(const HeckeContext& ctx, const HeckeGenerator& g,
                                   const HeckeElement& x, bool left);

/// The generator word whose ordered product recovers the basis element:
/// torus part, then the left permutation, then shifts, then the right
/// permutation, with lengths adding up.
std::vector<HeckeGenerator> basis_factorization(const HeckeContext& ctx, const QData& sigma);

/// Bilinear product computed by factoring the left operand into generators.
HeckeElement general_product(const HeckeContext& ctx, const HeckeElement& x,
                             const HeckeElement& y);

/// Linear functional sending every coset basis element to q^{length}.
Rat pi_functional(const HeckeElement& x);

Report verify_hecke_rules(unsigned n, const PrimeField* F, uint64_t seed, size_t samples,
                          bool unsafe_scale = false);
Report verify_presentation_relations_hecke(unsigned n, const PrimeField* F,
                                           bool unsafe_scale = false);

struct StructureConstant {
  std::string sigma, tau, rho;  // representative text forms
  Rat coeff;
};
std::vector<StructureConstant> structure_constant_table(const HeckeContext& ctx);

}  // namespace frook
