#include "frook/cosets.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace frook {

UnipotentGroup::UnipotentGroup(unsigned n, const PrimeField* F, bool unsafe_scale)
    : n_(n), F_(F) {
  unsigned positions = n * (n - 1) / 2;
  if (!unsafe_scale && (n > 4 || F->q() > 5))
    throw std::domain_error("UnipotentGroup: scale guard exceeded (n <= 4, q <= 5)");
  std::vector<std::pair<int, int>> pos;
  for (int i = 1; i <= int(n); ++i)
    for (int j = i + 1; j <= int(n); ++j) pos.emplace_back(i, j);
  std::vector<uint32_t> vals(positions, 0);
  while (true) {
    RookMatrix m = RookMatrix::identity(n, F);
    for (unsigned k = 0; k < positions; ++k) m.set(pos[k].first, pos[k].second, vals[k]);
    elems_.push_back(m);
    size_t p = positions;
    while (p > 0 && vals[p - 1] == F->q() - 1) vals[--p] = 0;
    if (p == 0) break;
    ++vals[p - 1];
  }
  std::sort(elems_.begin(), elems_.end());
}

Reduction reduce_to_representative(const RookMatrix& m) {
  unsigned n = m.n();
  const PrimeField* F = m.field();
  RookMatrix a = m;
  RookMatrix u1 = RookMatrix::identity(n, F);
  RookMatrix u2 = RookMatrix::identity(n, F);
  std::vector<bool> row_used(n + 1, false);
  for (int c = 1; c <= int(n); ++c) {
    int p = 0;
    for (int i = int(n); i >= 1; --i) {
      if (!row_used[i] && a.at(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p == 0) continue;
    row_used[p] = true;
    uint32_t pivot = a.at(p, c);
    // Clear the pivot row rightward: col_k += factor * col_c (k > c), a right
    // multiplication by 1 + factor E_{c,k}.
    for (int k = c + 1; k <= int(n); ++k) {
      uint32_t v = a.at(p, k);
      if (v == 0) continue;
      uint32_t factor = F->neg(F->mul(v, F->inv(pivot)));
      for (int i = 1; i <= int(n); ++i)
        a.set(i, k, F->add(a.at(i, k), F->mul(factor, a.at(i, c))));
      for (int i = 1; i <= int(n); ++i)
        u2.set(i, k, F->add(u2.at(i, k), F->mul(factor, u2.at(i, c))));
    }
    // Clear the pivot column upward: row_i += factor * row_p (i < p), a left
    // multiplication by 1 + factor E_{i,p}.
    for (int i = 1; i < p; ++i) {
      uint32_t v = a.at(i, c);
      if (v == 0) continue;
      uint32_t factor = F->neg(F->mul(v, F->inv(pivot)));
      for (int k = 1; k <= int(n); ++k)
        a.set(i, k, F->add(a.at(i, k), F->mul(factor, a.at(p, k))));
      for (int k = 1; k <= int(n); ++k)
        u1.set(i, k, F->add(u1.at(i, k), F->mul(factor, u1.at(p, k))));
    }
  }
  Reduction red{q_require(a), u1, u2};
  return red;
}

Int coset_size(const QData& sigma) {
  Int out(1);
  long e = long(sigma.r) * (sigma.r - 1) / 2 + sigma.len;
  for (long k = 0; k < e; ++k) out *= sigma.mat.field()->q();
  return out;
}

std::vector<RookMatrix> coset_elements(const UnipotentGroup& U, const QData& sigma,
                                       uint64_t cap) {
  Int predicted = coset_size(sigma);
  if (predicted > Int(cap))
    throw std::domain_error("coset_elements: materialization guard exceeded");
  std::set<RookMatrix> out;
  for (const auto& u : U.elements()) {
    RookMatrix us = u * sigma.mat;
    for (const auto& v : U.elements()) out.insert(us * v);
  }
  return std::vector<RookMatrix>(out.begin(), out.end());
}

SimpleCosetProduct simple_coset_product(int k, const QData& sigma) {
  unsigned n = sigma.mat.n();
  const PrimeField* F = sigma.mat.field();
  if (k < 1 || k >= int(n)) throw std::invalid_argument("simple_coset_product: bad index");
  SimpleCosetProduct out;
  bool k_in = sigma.img[k - 1] != 0;
  bool k1_in = sigma.img[k] != 0;
  bool inverted = k_in && k1_in && sigma.img[k - 1] > sigma.img[k];
  if (!k_in && !k1_in)
    out.by_pairs = CosetCase::Stay;
  else if ((k_in && !k1_in) || (k_in && k1_in && !inverted))
    out.by_pairs = CosetCase::Ascend;
  else
    out.by_pairs = CosetCase::Descend;

  QData sk_sigma = q_require(s_matrix(n, F, k) * sigma.mat);
  if (sk_sigma.len == sigma.len)
    out.by_length = CosetCase::Stay;
  else if (sk_sigma.len == sigma.len + 1)
    out.by_length = CosetCase::Ascend;
  else
    out.by_length = CosetCase::Descend;

  switch (out.by_pairs) {
    case CosetCase::Stay:
      out.reps = {sigma};
      break;
    case CosetCase::Ascend:
      out.reps = {sk_sigma};
      break;
    case CosetCase::Descend: {
      out.reps = {sk_sigma};
      for (uint32_t r = 1; r < F->q(); ++r)
        out.reps.push_back(q_require(h_elem(n, F, k, r) * sigma.mat));
      break;
    }
  }
  return out;
}

QData torus_coset_product(const RookMatrix& t, const QData& sigma, bool left) {
  if (!t.is_diagonal()) throw std::invalid_argument("torus_coset_product: t not diagonal");
  return q_require(left ? t * sigma.mat : sigma.mat * t);
}

namespace {

// Full scan of M_n(F_q): tally matrices by their reduced representative.
// Requires q^{n^2} to fit comfortably; guarded.
std::map<RookMatrix, uint64_t> full_partition_tally(unsigned n, const PrimeField* F,
                                                    bool unsafe_scale) {
  double total = std::pow(double(F->q()), double(n) * double(n));
  if (!unsafe_scale && total > 2.1e6)
    throw std::domain_error("full scan: scale guard exceeded (q^{n^2} too large)");
  uint64_t count = uint64_t(total + 0.5);
  std::map<RookMatrix, uint64_t> tally;
  for (uint64_t idx = 0; idx < count; ++idx) {
    RookMatrix m = RookMatrix::from_flat_index(n, F, idx);
    tally[reduce_to_representative(m).rep.mat]++;
  }
  return tally;
}

}  // namespace

std::vector<CosetRecord> coset_report(unsigned n, const PrimeField* F, bool unsafe_scale) {
  auto tally = full_partition_tally(n, F, unsafe_scale);
  std::vector<CosetRecord> out;
  for (const auto& [mat, cnt] : tally) {
    QData q = q_require(mat);
    CosetRecord rec;
    rec.rep_text = to_text(to_framed(q));
    rec.rank = q.r;
    rec.length = q.len;
    rec.size = coset_size(q);
    rec.verified = rec.size == Int(static_cast<unsigned long>(cnt));
    out.push_back(std::move(rec));
  }
  return out;
}

Report verify_coset_decomposition(unsigned n, const PrimeField* F, bool unsafe_scale) {
  Report rep;
  rep.suite = "cosets";
  rep.params = {{"n", std::to_string(n)}, {"q", std::to_string(F->q())}};
  auto tally = full_partition_tally(n, F, unsafe_scale);

  auto Q = enumerate_Q(n, F, {}, unsafe_scale);
  rep.add("representative count", "#representatives = |Q| = sum_r (q-1)^r C(n,r)^2 r!",
          tally.size() == Q.size() &&
              Int(static_cast<unsigned long>(Q.size())) == framed_total_count(n, F->q()),
          std::to_string(tally.size()) + " representatives");
  {
    bool ok = true;
    for (const auto& q : Q) ok &= tally.count(q.mat) == 1;
    rep.add("representatives lie in Q and are hit", "reduction fixes each rook-pattern matrix", ok);
  }
  {
    bool ok = true;
    Int total(0);
    for (const auto& [mat, cnt] : tally) {
      QData q = q_require(mat);
      ok &= Int(static_cast<unsigned long>(cnt)) == coset_size(q);
      total += Int(static_cast<unsigned long>(cnt));
    }
    Int expect(1);
    for (unsigned k = 0; k < n * n; ++k) expect *= F->q();
    ok &= total == expect;
    rep.add("coset sizes and global sum",
            "|U sigma U| = q^{r(r-1)/2 + l(sigma)};  sum = q^{n^2}", ok,
            "sum " + total.get_str());
  }
  {
    // Reduction invariance: reduce(u m u') = reduce(m).
    std::mt19937_64 rng(12345);
    UnipotentGroup U(n, F, unsafe_scale);
    bool ok = true;
    double total = std::pow(double(F->q()), double(n) * double(n));
    for (int trial = 0; trial < 200; ++trial) {
      uint64_t idx = rng() % uint64_t(total);
      RookMatrix m = RookMatrix::from_flat_index(n, F, idx);
      const RookMatrix& u = U.elements()[rng() % U.size()];
      const RookMatrix& v = U.elements()[rng() % U.size()];
      ok &= reduce_to_representative(u * m * v).rep.mat == reduce_to_representative(m).rep.mat;
    }
    rep.add("reduction invariance", "representative is constant on U m U", ok);
  }
  {
    // Idempotence on Q: members of Q reduce to themselves.
    bool ok = true;
    for (const auto& q : Q) {
      auto red = reduce_to_representative(q.mat);
      ok &= red.rep.mat == q.mat && red.u1 == RookMatrix::identity(n, F) &&
            red.u2 == RookMatrix::identity(n, F);
    }
    rep.add("reduction fixes Q pointwise", "m in Q => rep = m, u1 = u2 = 1", ok);
  }
  return rep;
}

Report verify_coset_products(unsigned n, const PrimeField* F, uint64_t seed, size_t samples,
                             bool unsafe_scale) {
  Report rep;
  rep.suite = "coset-products";
  rep.params = {{"n", std::to_string(n)}, {"q", std::to_string(F->q())}};
  UnipotentGroup U(n, F, unsafe_scale);
  auto Q = enumerate_Q(n, F, {}, unsafe_scale);

  // Choose the (k, sigma) pairs: everything when small, else a seeded sample.
  std::vector<std::pair<int, const QData*>> pairs;
  for (int k = 1; k < int(n); ++k)
    for (const auto& q : Q) pairs.emplace_back(k, &q);
  bool exhaustive = pairs.size() <= 300 || samples == 0 || pairs.size() <= samples;
  if (!exhaustive) {
    std::mt19937_64 rng(seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(samples);
  }

  bool set_ok = true, case_ok = true, disjoint_ok = true;
  for (auto [k, sigma] : pairs) {
    auto prod = simple_coset_product(k, *sigma);
    case_ok &= prod.by_pairs == prod.by_length;
    // Literal set product.
    auto sk = q_require(s_matrix(n, F, k));
    auto lhs_elems = coset_elements(U, sk);
    auto rhs_elems = coset_elements(U, *sigma);
    std::set<RookMatrix> literal;
    for (const auto& x : lhs_elems)
      for (const auto& y : rhs_elems) literal.insert(x * y);
    std::set<RookMatrix> expected;
    size_t expected_size = 0;
    for (const auto& r : prod.reps) {
      auto elems = coset_elements(U, r);
      expected_size += elems.size();
      expected.insert(elems.begin(), elems.end());
    }
    disjoint_ok &= expected.size() == expected_size;
    set_ok &= literal == expected;
  }
  rep.add("simple-coset product law",
          "(U s_k U)(U sigma U) = U sigma U | U s_k sigma U | U s_k sigma U + sum_r U h_k(r) sigma U",
          set_ok, std::to_string(pairs.size()) + " pairs" + (exhaustive ? " (exhaustive)" : " (sampled)"));
  rep.add("case agreement", "index-pair classification matches the length trichotomy", case_ok);
  rep.add("result cosets pairwise disjoint", "distinct representatives give disjoint cosets",
          disjoint_ok);

  {
    // Torus products: U t U . U sigma U = U t sigma U, checked literally on a
    // few sampled (t, sigma) pairs, plus periodicity of coset powers.
    std::mt19937_64 rng(seed + 1);
    auto Ts = enumerate_T(n, F);
    bool ok = true;
    for (int trial = 0; trial < 20; ++trial) {
      const auto& t = Ts[rng() % Ts.size()];
      const auto& sigma = Q[rng() % Q.size()];
      QData lhs = torus_coset_product(t, sigma, true);
      auto telems = coset_elements(U, q_require(t));
      auto selems = coset_elements(U, sigma);
      std::set<RookMatrix> literal;
      for (const auto& x : telems)
        for (const auto& y : selems) literal.insert(x * y);
      auto expect = coset_elements(U, lhs);
      ok &= literal == std::set<RookMatrix>(expect.begin(), expect.end());
      QData rhs = torus_coset_product(t, sigma, false);
      std::set<RookMatrix> literal_r;
      for (const auto& y : selems)
        for (const auto& x : telems) literal_r.insert(y * x);
      auto expect_r = coset_elements(U, rhs);
      ok &= literal_r == std::set<RookMatrix>(expect_r.begin(), expect_r.end());
    }
    rep.add("torus coset product", "(U t U)(U sigma U) = U t sigma U;  right-handed likewise", ok);
  }
  {
    // Coset powers of a torus element: (U t U)^m = U t^m U, so the power is
    // trivial exactly when (q-1) | m. The m = q power therefore returns U t U
    // itself, while m = q-1 returns U.
    bool ok = true;
    auto Ts = enumerate_T(n, F);
    auto id = q_require(RookMatrix::identity(n, F));
    for (const auto& t : Ts) {
      QData acc = id;
      std::vector<QData> powers;
      for (unsigned m = 1; m <= F->q(); ++m) {
        acc = torus_coset_product(t, acc, true);
        powers.push_back(acc);
      }
      ok &= powers[F->q() - 2].mat == RookMatrix::identity(n, F);  // m = q-1
      ok &= powers[F->q() - 1].mat == t;                           // m = q
    }
    rep.add("torus coset powers", "(U t U)^m = U t^m U; trivial iff (q-1) | m", ok);
  }
  {
    // t_I translation equals t_J translation on the other side.
    bool ok = true;
    for (const auto& sigma : Q) {
      auto td = t_decompose(sigma);
      ok &= torus_coset_product(td.t_I, q_require(td.support), true).mat ==
            torus_coset_product(td.t_J, q_require(td.support), false).mat;
    }
    rep.add("two-sided torus translation", "U t_I sigma~ U = U sigma~ t_J U", ok);
  }
  return rep;
}

}  // namespace frook
