#include "frook/ring.hpp"

namespace frook {

Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  if (x == 0) {
    if (e < 0) throw std::domain_error("rat_pow: zero to negative power");
    return Rat(0);
  }
  Rat base = x;
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  if (invert) acc = Rat(1) / acc;
  acc.canonicalize();
  return acc;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Int factorial(unsigned n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

namespace {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> fs;
  for (uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      fs.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

uint32_t pow_mod(uint32_t a, uint32_t e, uint32_t q) {
  uint64_t acc = 1, base = a % q;
  while (e) {
    if (e & 1) acc = acc * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

}  // namespace

PrimeField::PrimeField(uint32_t q) : q_(q) {
  if (!is_prime_u32(q) || q == 2)
    throw std::invalid_argument("PrimeField: q must be an odd prime, got " + std::to_string(q));
  // Smallest primitive root: a generates iff a^((q-1)/p) != 1 for every prime p | q-1.
  auto fs = prime_factors(q - 1);
  gen_ = 0;
  for (uint32_t a = 2; a < q; ++a) {
    bool ok = true;
    for (uint32_t p : fs)
      if (pow_mod(a, (q - 1) / p, q) == 1) { ok = false; break; }
    if (ok) { gen_ = a; break; }
  }
  dlog_.assign(q, 0);
  uint32_t x = 1;
  for (uint32_t k = 0; k < q - 1; ++k) {
    dlog_[x] = k;
    x = static_cast<uint32_t>(uint64_t(x) * gen_ % q);
  }
  inv_.assign(q, 0);
  for (uint32_t a = 1; a < q; ++a) inv_[a] = pow_mod(a, q - 2, q);
}

uint32_t PrimeField::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("PrimeField::inv: zero is not invertible");
  return inv_[a];
}

uint32_t PrimeField::pow(uint32_t a, long e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("PrimeField::pow: zero to negative power");
    return e == 0 ? 1 : 0;
  }
  long m = e % long(q_ - 1);
  if (m < 0) m += q_ - 1;
  return pow_mod(a, static_cast<uint32_t>(m), q_);
}

uint32_t PrimeField::dlog(uint32_t x) const {
  if (x == 0) throw std::domain_error("PrimeField::dlog: not a unit");
  return dlog_[x % q_];
}

uint32_t PrimeField::gen_pow(long k) const { return pow(gen_, k); }

std::vector<uint32_t> PrimeField::units() const {
  std::vector<uint32_t> out;
  for (uint32_t a = 1; a < q_; ++a) out.push_back(a);
  return out;
}

}  // namespace frook
