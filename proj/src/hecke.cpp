#include "frook/hecke.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_map>

namespace frook {

HeckeContext::HeckeContext(unsigned n, const PrimeField* F, bool unsafe_scale)
    : n_(n), F_(F), U_(n, F, unsafe_scale), Q_(enumerate_Q(n, F, {}, unsafe_scale)) {
  for (size_t i = 0; i < Q_.size(); ++i) index_[Q_[i].mat] = i;
}

const QData& HeckeContext::canonical(const RookMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::invalid_argument("HeckeContext::canonical: not in Q");
  return Q_[it->second];
}

const std::vector<RookMatrix>& HeckeContext::coset(const QData& q) const {
  auto it = coset_cache_.find(q.mat);
  if (it != coset_cache_.end()) return it->second;
  auto elems = coset_elements(U_, q);
  return coset_cache_.emplace(q.mat, std::move(elems)).first->second;
}

HeckeElement HeckeElement::basis(const HeckeContext* ctx, const QData& q) {
  HeckeElement x(ctx);
  x.c_[q.mat] = Rat(1);
  return x;
}

HeckeElement HeckeElement::unit(const HeckeContext* ctx) {
  return basis(ctx, ctx->canonical(RookMatrix::identity(ctx->n(), ctx->field())));
}

void HeckeElement::add_term(const RookMatrix& rep, const Rat& coeff) {
  if (coeff == 0) return;
  auto it = c_.find(rep);
  if (it == c_.end()) {
    c_.emplace(rep, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
  }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  HeckeElement out = *this;
  if (!out.ctx_) out.ctx_ = o.ctx_;
  for (const auto& [m, v] : o.c_) out.add_term(m, v);
  return out;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  HeckeElement out = *this;
  if (!out.ctx_) out.ctx_ = o.ctx_;
  for (const auto& [m, v] : o.c_) out.add_term(m, -v);
  return out;
}

HeckeElement HeckeElement::scaled(const Rat& by) const {
  HeckeElement out(ctx_);
  if (by == 0) return out;
  for (const auto& [m, v] : c_) {
    Rat w = v * by;
    w.canonicalize();
    out.c_[m] = w;
  }
  return out;
}

std::string HeckeElement::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : c_) {
    if (!first) os << " + ";
    os << v.get_str() << "*T[" << to_text(to_framed(ctx_->canonical(m))) << "]";
    first = false;
  }
  return os.str();
}

namespace {

Rat q_power(uint32_t q, long e) { return rat_pow(Rat(int(q)), e); }

}  // namespace

HeckeElement convolution_product_oracle(const HeckeContext& ctx, const QData& sigma,
                                        const QData& tau) {
  const PrimeField* F = ctx.field();
  const auto& lhs = ctx.coset(sigma);
  const auto& rhs = ctx.coset(tau);
  std::map<RookMatrix, uint64_t> tally;
  for (const auto& x : lhs)
    for (const auto& y : rhs) tally[x * y]++;

  // Bi-invariance: the tally must be constant across each double coset; if it
  // is not, the decomposition theory itself would be falsified.
  std::map<RookMatrix, uint64_t> rep_tally;
  std::map<RookMatrix, uint64_t> rep_hits;
  for (const auto& [m, cnt] : tally) {
    RookMatrix rep = reduce_to_representative(m).rep.mat;
    auto it = rep_tally.find(rep);
    if (it == rep_tally.end()) {
      rep_tally[rep] = cnt;
      rep_hits[rep] = 1;
    } else {
      if (it->second != cnt)
        throw std::logic_error("convolution oracle: tally not constant on a double coset");
      rep_hits[rep]++;
    }
  }
  for (const auto& [rep, hits] : rep_hits) {
    if (Int(static_cast<unsigned long>(hits)) != coset_size(ctx.canonical(rep)))
      throw std::logic_error("convolution oracle: a double coset was only partially hit");
  }

  HeckeElement out(&ctx);
  for (const auto& [rep, cnt] : rep_tally) {
    const QData& rho = ctx.canonical(rep);
    long e = (long(sigma.r) * (1 - sigma.r) + long(tau.r) * (1 - tau.r) -
              long(rho.r) * (1 - rho.r)) /
             2;
    Rat coeff = Rat(static_cast<unsigned long>(cnt)) * q_power(F->q(), e);
    coeff.canonicalize();
    out.add_term(rep, coeff);
  }
  return out;
}

HeckeElement multiply_by_generator(const HeckeContext& ctx, const HeckeGenerator& g,
                                   const HeckeElement& x, bool left) {
  unsigned n = ctx.n();
  const PrimeField* F = ctx.field();
  HeckeElement out(&ctx);
  for (const auto& [mat, coeff] : x.coeffs()) {
    const QData& sigma = ctx.canonical(mat);
    if (std::holds_alternative<GenTorus>(g)) {
      const RookMatrix& t = std::get<GenTorus>(g).t;
      out.add_term((left ? t * sigma.mat : sigma.mat * t), coeff);
    } else if (std::holds_alternative<GenShift>(g)) {
      RookMatrix nu = nu_matrix(n, F);
      QData prod = q_require(left ? nu * sigma.mat : sigma.mat * nu);
      out.add_term(prod.mat, coeff * q_power(F->q(), sigma.len - prod.len));
    } else {
      int k = std::get<GenTransposition>(g).k;
      RookMatrix sk = s_matrix(n, F, k);
      QData prod = q_require(left ? sk * sigma.mat : sigma.mat * sk);
      if (prod.len == sigma.len) {
        out.add_term(sigma.mat, coeff * Rat(int(F->q())));
      } else if (prod.len == sigma.len + 1) {
        out.add_term(prod.mat, coeff);
      } else {
        out.add_term(prod.mat, coeff * Rat(int(F->q())));
        for (uint32_t r = 1; r < F->q(); ++r) {
          RookMatrix h = left ? h_elem(n, F, k, r) : h_elem_s(n, F, k, r);
          out.add_term(left ? h * sigma.mat : sigma.mat * h, coeff);
        }
      }
    }
  }
  return out;
}

std::vector<HeckeGenerator> basis_factorization(const HeckeContext& ctx, const QData& sigma) {
  unsigned n = ctx.n();
  auto td = t_decompose(sigma);
  // Support pattern factorization from the block normal form; both block
  // words are reduced and their lengths add to the pattern's length.
  NormalForm nf = normal_form(to_framed(q_require(td.support)));
  std::vector<HeckeGenerator> word;
  if (!(td.t_I == RookMatrix::identity(n, ctx.field()))) word.push_back(GenTorus{td.t_I});
  std::vector<int> u_line(n);
  {
    // omega_A followed by the flattening permutation, as one permutation.
    std::vector<int> omega(n), star_ext(n);
    std::iota(star_ext.begin(), star_ext.end(), 1);
    for (int k = 0; k < nf.r; ++k) star_ext[k] = nf.star[k];
    // omega_A: one-line via the generator word.
    auto wa = omega_word(nf.A, n);
    std::vector<int> oa(n);
    std::iota(oa.begin(), oa.end(), 1);
    for (const auto& gen : wa)
      for (auto& v : oa)
        if (v == gen.index)
          v = gen.index + 1;
        else if (v == gen.index + 1)
          v = gen.index;
    for (unsigned i = 0; i < n; ++i) u_line[i] = star_ext[oa[i] - 1];
  }
  for (int l : reduced_word(u_line)) word.push_back(GenTransposition{l});
  for (int t = nf.r; t < int(n); ++t) word.push_back(GenShift{});
  {
    auto wb = omega_bar_word(nf.B, n);
    std::vector<int> letters;
    for (const auto& gen : wb) letters.push_back(gen.index);
    for (int l : letters) word.push_back(GenTransposition{l});
  }
  return word;
}

HeckeElement general_product(const HeckeContext& ctx, const HeckeElement& x,
                             const HeckeElement& y) {
  HeckeElement out(&ctx);
  for (const auto& [mat, coeff] : x.coeffs()) {
    const QData& sigma = ctx.canonical(mat);
    auto word = basis_factorization(ctx, sigma);
    HeckeElement acc = y;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      acc = multiply_by_generator(ctx, *it, acc, /*left=*/true);
    out = out + acc.scaled(coeff);
  }
  return out;
}

Rat pi_functional(const HeckeElement& x) {
  Rat out(0);
  for (const auto& [mat, coeff] : x.coeffs()) {
    const QData& q = x.ctx()->canonical(mat);
    out += coeff * q_power(x.ctx()->field()->q(), q.len);
  }
  out.canonicalize();
  return out;
}

namespace {

// omega(i) application for the exponent permutation in the framing rule.
int s_apply(int k, int j) {
  if (j == k) return k + 1;
  if (j == k + 1) return k;
  return j;
}

}  // namespace

Report verify_hecke_rules(unsigned n, const PrimeField* F, uint64_t seed, size_t samples,
                          bool unsafe_scale) {
  Report rep;
  rep.suite = "hecke";
  rep.params = {{"n", std::to_string(n)}, {"q", std::to_string(F->q())}};
  HeckeContext ctx(n, F, unsafe_scale);
  const auto& Q = ctx.basis();

  // Generators: transpositions, all torus elements, the shift.
  std::vector<HeckeGenerator> gens;
  for (int k = 1; k < int(n); ++k) gens.push_back(GenTransposition{k});
  for (const auto& t : enumerate_T(n, F)) gens.push_back(GenTorus{t});
  gens.push_back(GenShift{});

  std::vector<std::pair<size_t, size_t>> pairs;  // (generator index, basis index)
  for (size_t g = 0; g < gens.size(); ++g)
    for (size_t s = 0; s < Q.size(); ++s) pairs.emplace_back(g, s);
  bool exhaustive = samples == 0 || pairs.size() <= samples;
  if (!exhaustive) {
    std::mt19937_64 rng(seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(samples);
  }
  {
    bool ok = true, pi_ok = true;
    for (auto [gi, si] : pairs) {
      const auto& g = gens[gi];
      const QData& sigma = Q[si];
      QData grep =
          std::holds_alternative<GenTransposition>(g)
              ? ctx.canonical(s_matrix(n, F, std::get<GenTransposition>(g).k))
              : (std::holds_alternative<GenTorus>(g) ? ctx.canonical(std::get<GenTorus>(g).t)
                                                     : ctx.canonical(nu_matrix(n, F)));
      HeckeElement by_rules =
          multiply_by_generator(ctx, g, HeckeElement::basis(&ctx, sigma), true);
      HeckeElement by_oracle = convolution_product_oracle(ctx, grep, sigma);
      ok &= by_rules == by_oracle;
      pi_ok &= pi_functional(by_oracle) ==
               q_power(F->q(), grep.len) * q_power(F->q(), sigma.len);
      // Right-handed rules against the oracle as well.
      HeckeElement by_rules_r =
          multiply_by_generator(ctx, g, HeckeElement::basis(&ctx, sigma), false);
      HeckeElement by_oracle_r = convolution_product_oracle(ctx, sigma, grep);
      ok &= by_rules_r == by_oracle_r;
      pi_ok &= pi_functional(by_oracle_r) ==
               q_power(F->q(), grep.len) * q_power(F->q(), sigma.len);
    }
    rep.add("generator rules match the convolution oracle",
            "torus rule; transposition trichotomy; shift rule q^{l(sigma)-l(nu sigma)}", ok,
            std::to_string(pairs.size()) + " products" +
                (exhaustive ? " (exhaustive)" : " (sampled)"));
    rep.add("multiplicativity of the counting functional",
            "pi(T_sigma T_tau) = q^{l(sigma)} q^{l(tau)}", pi_ok);
  }
  {
    // Basis factorization folds back to the basis element.
    bool ok = true;
    for (const auto& sigma : Q) {
      auto word = basis_factorization(ctx, sigma);
      HeckeElement acc = HeckeElement::unit(&ctx);
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        acc = multiply_by_generator(ctx, *it, acc, true);
      ok &= acc == HeckeElement::basis(&ctx, sigma);
    }
    rep.add("generator-word factorization", "T_sigma = T_t T_u T_nu^i T_w with lengths adding",
            ok);
  }
  {
    // Unit laws and integrality of structure constants.
    bool ok = true, integral = true;
    HeckeElement one = HeckeElement::unit(&ctx);
    for (const auto& sigma : Q) {
      HeckeElement b = HeckeElement::basis(&ctx, sigma);
      ok &= general_product(ctx, one, b) == b && general_product(ctx, b, one) == b;
    }
    std::mt19937_64 rng(seed + 7);
    for (int trial = 0; trial < 50; ++trial) {
      const QData& a = Q[rng() % Q.size()];
      const QData& b = Q[rng() % Q.size()];
      auto prod = convolution_product_oracle(ctx, a, b);
      for (const auto& [m, v] : prod.coeffs()) integral &= v.get_den() == 1;
      auto fast = general_product(ctx, HeckeElement::basis(&ctx, a), HeckeElement::basis(&ctx, b));
      ok &= fast == prod;
    }
    rep.add("unit laws and oracle agreement of general products",
            "T_1 T_sigma = T_sigma = T_sigma T_1; factored products equal convolution", ok);
    rep.add("integral structure constants", "coefficients lie in Z", integral);
  }
  {
    // Associativity on random triples via the structured product.
    std::mt19937_64 rng(seed + 13);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
      HeckeElement a = HeckeElement::basis(&ctx, Q[rng() % Q.size()]);
      HeckeElement b = HeckeElement::basis(&ctx, Q[rng() % Q.size()]);
      HeckeElement c = HeckeElement::basis(&ctx, Q[rng() % Q.size()]);
      ok &= general_product(ctx, general_product(ctx, a, b), c) ==
            general_product(ctx, a, general_product(ctx, b, c));
    }
    rep.add("associativity (sampled)", "(xy)z = x(yz)", ok);
  }
  {
    // The zero matrix acts by q^{l(sigma)}: T_0 T_sigma = q^{l(sigma)} T_0,
    // and the n-th shift power is T_0.
    HeckeElement nu_n = HeckeElement::unit(&ctx);
    for (unsigned i = 0; i < n; ++i) nu_n = multiply_by_generator(ctx, GenShift{}, nu_n, true);
    QData zero = ctx.canonical(RookMatrix(n, F));
    bool ok = nu_n == HeckeElement::basis(&ctx, zero);
    for (const auto& sigma : Q) {
      auto prod = general_product(ctx, HeckeElement::basis(&ctx, zero),
                                  HeckeElement::basis(&ctx, sigma));
      ok &= prod == HeckeElement::basis(&ctx, zero).scaled(q_power(F->q(), sigma.len));
    }
    rep.add("annihilator line", "T_nu^n = T_0 and T_0 T_sigma = q^{l(sigma)} T_0", ok);
  }
  return rep;
}

Report verify_presentation_relations_hecke(unsigned n, const PrimeField* F, bool unsafe_scale) {
  Report rep;
  rep.suite = "hecke-presentation";
  rep.params = {{"n", std::to_string(n)}, {"q", std::to_string(F->q())}};
  HeckeContext ctx(n, F, unsafe_scale);
  uint32_t q = F->q();

  auto Ti = [&](int i) { return HeckeElement::basis(&ctx, ctx.canonical(s_matrix(n, F, i))); };
  auto Fi = [&](int i) { return HeckeElement::basis(&ctx, ctx.canonical(a_matrix(n, F, i))); };
  auto Fi_pow = [&](int i, long e) {
    long m = e % long(q - 1);
    if (m < 0) m += q - 1;
    RookMatrix t = RookMatrix::identity(n, F);
    t.set(i, i, F->gen_pow(m));
    return HeckeElement::basis(&ctx, ctx.canonical(t));
  };
  auto N = HeckeElement::basis(&ctx, ctx.canonical(nu_matrix(n, F)));
  auto mul = [&](const HeckeElement& a, const HeckeElement& b) {
    return general_product(ctx, a, b);
  };
  auto one = HeckeElement::unit(&ctx);
  auto Ei = [&](int i) {
    HeckeElement acc(&ctx);
    for (uint32_t k = 0; k + 1 < q; ++k) acc = acc + mul(Fi_pow(i, k), Fi_pow(i + 1, -long(k)));
    return acc.scaled(Rat(1, int(q) - 1));
  };
  auto Npow = [&](unsigned e) {
    HeckeElement acc = one;
    for (unsigned k = 0; k < e; ++k) acc = mul(acc, N);
    return acc;
  };

  {
    bool ok = true;
    for (int i = 1; i + 1 < int(n); ++i)
      ok &= mul(mul(Ti(i), Ti(i + 1)), Ti(i)) == mul(mul(Ti(i + 1), Ti(i)), Ti(i + 1));
    for (int i = 1; i < int(n); ++i)
      for (int j = i + 2; j < int(n); ++j) ok &= mul(Ti(i), Ti(j)) == mul(Ti(j), Ti(i));
    rep.add("braid and distant commutation", "T_i T_j T_i = T_j T_i T_j (|i-j|=1); commute else",
            ok);
  }
  {
    bool ok = true;
    for (int i = 1; i <= int(n); ++i) {
      HeckeElement acc = one;
      for (uint32_t k = 0; k + 1 < q; ++k) acc = mul(acc, Fi(i));
      ok &= acc == one;
    }
    for (int i = 1; i <= int(n); ++i)
      for (int j = 1; j <= int(n); ++j) ok &= mul(Fi(i), Fi(j)) == mul(Fi(j), Fi(i));
    rep.add("framing torsion and commutation", "F_i^{q-1} = 1;  F_i F_j = F_j F_i", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i < int(n); ++i) {
      HeckeElement lhs = mul(Ti(i), Ti(i));
      HeckeElement rhs = one.scaled(Rat(int(q))) +
                         mul(mul(Fi_pow(i, (q - 1) / 2), Ei(i)), Ti(i)).scaled(Rat(int(q) - 1));
      ok &= lhs == rhs;
    }
    rep.add("quadratic relation", "T_i^2 = q + (q-1) F_i^{(q-1)/2} E_i T_i", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i < int(n); ++i)
      for (int j = 1; j <= int(n); ++j) ok &= mul(Ti(i), Fi(j)) == mul(Fi(s_apply(i, j)), Ti(i));
    rep.add("framing conjugation", "T_i F_j = F_{j s_i} T_i", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i < int(n); ++i) ok &= mul(Fi(i), N) == mul(N, Fi(i + 1));
    ok &= mul(N, Fi(1)) == N && mul(Fi(int(n)), N) == N;
    rep.add("framing shift", "F_i N = N F_{i+1} (i < n);  N F_1 = F_n N = N", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i < int(n); ++i) {
      ok &= mul(Npow(unsigned(i) + 1), Ti(i)) == Npow(unsigned(i) + 1).scaled(Rat(int(q)));
      ok &= mul(Ti(i), Npow(n - unsigned(i) + 1)) == Npow(n - unsigned(i) + 1).scaled(Rat(int(q)));
    }
    rep.add("shift absorption", "N^{i+1} T_i = q N^{i+1};  T_i N^{n-i+1} = q N^{n-i+1}", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i + 1 < int(n); ++i) ok &= mul(Ti(i), N) == mul(N, Ti(i + 1));
    HeckeElement lhs = N;
    for (int i = 1; i < int(n); ++i) lhs = mul(lhs, Ti(i));
    lhs = mul(lhs, N);
    ok &= lhs == N.scaled(q_power(q, long(n) - 1));
    rep.add("shift braid compatibility", "T_i N = N T_{i+1};  N T_1...T_{n-1} N = q^{n-1} N", ok);
  }
  return rep;
}

std::vector<StructureConstant> structure_constant_table(const HeckeContext& ctx) {
  std::vector<StructureConstant> out;
  const auto& Q = ctx.basis();
  for (const auto& a : Q)
    for (const auto& b : Q) {
      auto prod = general_product(ctx, HeckeElement::basis(&ctx, a), HeckeElement::basis(&ctx, b));
      for (const auto& [m, v] : prod.coeffs()) {
        out.push_back({to_text(to_framed(a)), to_text(to_framed(b)),
                       to_text(to_framed(ctx.canonical(m))), v});
      }
    }
  return out;
}

}  // namespace frook
