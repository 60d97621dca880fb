#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace frook {

using Int = mpz_class;
using Rat = mpq_class;

/// x^e for integer e (negative allowed, x must be nonzero then).
Rat rat_pow(const Rat& x, long e);

Int binomial(unsigned n, unsigned k);
Int factorial(unsigned n);

/// Arithmetic in the prime field F_q, q an odd prime. Elements are residues
/// in [0, q-1] stored as uint32_t. The multiplicative group is cyclic; we fix
/// its generator as the smallest primitive root and precompute discrete logs.
class PrimeField {
 public:
  explicit PrimeField(uint32_t q);

  uint32_t q() const { return q_; }
  uint32_t generator() const { return gen_; }

  uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % q_; }
  uint32_t sub(uint32_t a, uint32_t b) const { return (a + q_ - b) % q_; }
  uint32_t mul(uint32_t a, uint32_t b) const { return (a * b) % q_; }
  uint32_t neg(uint32_t a) const { return (q_ - a) % q_; }
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, long e) const;

  /// Discrete log base the fixed generator: returns k in [0, q-2] with
  /// generator^k = x. Throws on x = 0.
  uint32_t dlog(uint32_t x) const;

  /// generator^k for k taken mod q-1.
  uint32_t gen_pow(long k) const;

  /// The q-1 nonzero residues, ascending.
  std::vector<uint32_t> units() const;

 private:
  uint32_t q_;
  uint32_t gen_;
  std::vector<uint32_t> dlog_;  // dlog_[x] valid for x in [1, q-1]
  std::vector<uint32_t> inv_;
};

}  // namespace frook
