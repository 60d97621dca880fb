#include "frook/framed.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace frook {

FramedPartial::FramedPartial(unsigned n, const PrimeField* F, std::vector<uint8_t> img,
                             std::vector<uint32_t> lab)
    : n_(n), F_(F), img_(std::move(img)), lab_(std::move(lab)) {
  if (img_.size() != n_ || lab_.size() != n_)
    throw std::invalid_argument("FramedPartial: word length mismatch");
  std::vector<bool> hit(n_ + 1, false);
  for (unsigned i = 0; i < n_; ++i) {
    if (img_[i] > n_) throw std::invalid_argument("FramedPartial: image letter out of range");
    if (img_[i] != 0) {
      if (hit[img_[i]]) throw std::invalid_argument("FramedPartial: image letters repeat");
      hit[img_[i]] = true;
      if (lab_[i] == 0 || lab_[i] >= F_->q())
        throw std::invalid_argument("FramedPartial: labels must be units on the domain");
    } else if (lab_[i] != 0) {
      throw std::invalid_argument("FramedPartial: label off the domain");
    }
  }
}

FramedPartial FramedPartial::identity(unsigned n, const PrimeField* F) {
  std::vector<uint8_t> img(n);
  std::vector<uint32_t> lab(n, 1);
  for (unsigned i = 0; i < n; ++i) img[i] = uint8_t(i + 1);
  return FramedPartial(n, F, std::move(img), std::move(lab));
}

std::vector<int> FramedPartial::dom() const {
  std::vector<int> out;
  for (unsigned i = 0; i < n_; ++i)
    if (img_[i] != 0) out.push_back(int(i) + 1);
  return out;
}

std::vector<int> FramedPartial::codom() const {
  std::vector<int> out;
  for (unsigned i = 0; i < n_; ++i)
    if (img_[i] != 0) out.push_back(img_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

int FramedPartial::rank() const {
  int r = 0;
  for (unsigned i = 0; i < n_; ++i)
    if (img_[i] != 0) ++r;
  return r;
}

bool FramedPartial::operator<(const FramedPartial& o) const {
  if (img_ != o.img_) return img_ < o.img_;
  return lab_ < o.lab_;
}

FramedPartial multiply(const FramedPartial& x, const FramedPartial& y) {
  if (x.n() != y.n() || x.field() != y.field())
    throw std::invalid_argument("multiply: mismatched elements");
  unsigned n = x.n();
  const PrimeField* F = x.field();
  std::vector<uint8_t> img(n, 0);
  std::vector<uint32_t> lab(n, 0);
  for (unsigned i = 1; i <= n; ++i) {
    int j = x.image(int(i));
    if (j == 0) continue;
    int k = y.image(j);
    if (k == 0) continue;
    img[i - 1] = uint8_t(k);
    lab[i - 1] = F->mul(x.label(int(i)), y.label(j));
  }
  return FramedPartial(n, F, std::move(img), std::move(lab));
}

FramedPartial transpose(const FramedPartial& x) {
  unsigned n = x.n();
  std::vector<uint8_t> img(n, 0);
  std::vector<uint32_t> lab(n, 0);
  for (unsigned i = 1; i <= n; ++i) {
    int j = x.image(int(i));
    if (j == 0) continue;
    img[j - 1] = uint8_t(i);
    lab[j - 1] = x.label(int(i));
  }
  return FramedPartial(n, x.field(), std::move(img), std::move(lab));
}

FramedPartial generator(GenKind kind, unsigned n, const PrimeField* F, int index) {
  std::vector<uint8_t> img(n);
  std::vector<uint32_t> lab(n, 1);
  for (unsigned i = 0; i < n; ++i) img[i] = uint8_t(i + 1);
  switch (kind) {
    case GenKind::S:
      if (index < 1 || index >= int(n)) throw std::invalid_argument("generator s: bad index");
      std::swap(img[index - 1], img[index]);
      return FramedPartial(n, F, std::move(img), std::move(lab));
    case GenKind::R:
      if (index < 1 || index > int(n)) throw std::invalid_argument("generator r: bad index");
      img[index - 1] = 0;
      lab[index - 1] = 0;
      return FramedPartial(n, F, std::move(img), std::move(lab));
    case GenKind::A:
      if (index < 1 || index > int(n)) throw std::invalid_argument("generator a: bad index");
      lab[index - 1] = F->generator();
      return FramedPartial(n, F, std::move(img), std::move(lab));
    case GenKind::Nu: {
      std::vector<uint8_t> im(n, 0);
      std::vector<uint32_t> lb(n, 0);
      for (unsigned i = 1; i < n; ++i) {
        im[i - 1] = uint8_t(i + 1);
        lb[i - 1] = 1;
      }
      return FramedPartial(n, F, std::move(im), std::move(lb));
    }
  }
  throw std::logic_error("generator: unknown kind");
}

FramedPartial evaluate_word(unsigned n, const PrimeField* F, std::span<const Gen> word) {
  FramedPartial acc = FramedPartial::identity(n, F);
  for (const Gen& g : word) acc = multiply(acc, generator(g.kind, n, F, g.index));
  return acc;
}

std::string to_text(const FramedPartial& x) {
  std::ostringstream os;
  for (unsigned i = 1; i <= x.n(); ++i) os << x.image(int(i));
  os << "-";
  for (unsigned i = 1; i <= x.n(); ++i) os << (x.image(int(i)) ? x.label(int(i)) : 0);
  return os.str();
}

FramedPartial parse_text(unsigned n, const PrimeField* F, const std::string& s) {
  if (s.size() != 2 * n + 1 || s[n] != '-') throw std::invalid_argument("parse_text: bad format");
  std::vector<uint8_t> img(n);
  std::vector<uint32_t> lab(n);
  for (unsigned i = 0; i < n; ++i) {
    if (!isdigit(s[i]) || !isdigit(s[n + 1 + i]))
      throw std::invalid_argument("parse_text: non-digit");
    img[i] = uint8_t(s[i] - '0');
    lab[i] = uint32_t(s[n + 1 + i] - '0');
  }
  return FramedPartial(n, F, std::move(img), std::move(lab));
}

ColoredPartition to_colored(const FramedPartial& x) {
  unsigned n = x.n();
  std::vector<int> blk(2 * n, -1);
  std::map<std::pair<int, int>, uint32_t> colors;
  int next = 0;
  std::vector<int> pending_bottom;
  for (unsigned i = 1; i <= n; ++i) {
    int j = x.image(int(i));
    if (j != 0) {
      blk[i - 1] = next;
      blk[n + j - 1] = next;
      colors[{int(i), int(n + j)}] = x.label(int(i));
      ++next;
    } else {
      blk[i - 1] = next++;
    }
  }
  for (unsigned j = 1; j <= n; ++j)
    if (blk[n + j - 1] == -1) blk[n + j - 1] = next++;
  return ColoredPartition(SetPartition(2 * n, std::move(blk)), x.field(), std::move(colors));
}

FramedPartial from_colored(const ColoredPartition& c) {
  const SetPartition& p = c.partition();
  unsigned n = p.ground_size() / 2;
  std::vector<uint8_t> img(n, 0);
  std::vector<uint32_t> lab(n, 0);
  for (const auto& blk : p.blocks()) {
    if (blk.size() == 1) continue;
    if (blk.size() != 2) throw std::invalid_argument("from_colored: block is not a line or point");
    int a = blk[0], b = blk[1];
    if (a > int(n) || b <= int(n))
      throw std::invalid_argument("from_colored: block is not a line");
    img[a - 1] = uint8_t(b - n);
    lab[a - 1] = c.color_of({a, b});
  }
  return FramedPartial(n, c.field(), std::move(img), std::move(lab));
}

std::vector<Gen> omega_word(const std::vector<int>& A, unsigned n) {
  // omega_A = s_{i_1,1} s_{i_2,2} ... s_{i_k,k}, where s_{k,j} = s_{k-1}...s_j.
  std::vector<Gen> w;
  for (size_t k = 0; k < A.size(); ++k)
    for (int t = A[k] - 1; t >= int(k) + 1; --t) w.push_back({GenKind::S, t});
  (void)n;
  return w;
}

std::vector<Gen> omega_bar_word(const std::vector<int>& A, unsigned n) {
  // omega_bar_A = s_{n-k+1, a_1} ... s_{n, a_k}.
  std::vector<Gen> w;
  size_t k = A.size();
  for (size_t j = 0; j < k; ++j) {
    int top = int(n) - int(k) + 1 + int(j);
    for (int t = top - 1; t >= A[j]; --t) w.push_back({GenKind::S, t});
  }
  return w;
}

NormalForm normal_form(const FramedPartial& x) {
  NormalForm nf;
  nf.A = x.dom();
  nf.B = x.codom();
  nf.r = int(nf.A.size());
  // Flattening permutation: star[k] = rank of the k-th image among the codomain.
  for (int i : nf.A) {
    int img = x.image(i);
    int rank = int(std::lower_bound(nf.B.begin(), nf.B.end(), img) - nf.B.begin()) + 1;
    nf.star.push_back(rank);
  }
  for (int i : nf.A) nf.m.push_back(x.field()->dlog(x.label(i)));
  return nf;
}

namespace {

// A reduced word for the one-line permutation, in diagram order. Bubble sort
// records a swap of positions (t, t+1) as the letter t+1; each swap is a left
// multiplication by that transposition, and sorting w to the identity with m
// swaps yields w = s_{l_1} ... s_{l_m} with m the inversion number.
std::vector<int> reduced_word_of(std::vector<int> w) {
  std::vector<int> letters;
  int r = int(w.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t + 1 < r; ++t) {
      if (w[t] > w[t + 1]) {
        std::swap(w[t], w[t + 1]);
        letters.push_back(t + 1);
        changed = true;
      }
    }
  }
  return letters;
}

}  // namespace

std::vector<Gen> normal_form_word(unsigned n, const NormalForm& nf) {
  std::vector<Gen> w = omega_word(nf.A, n);
  for (int k = 0; k < nf.r; ++k)
    for (uint32_t t = 0; t < nf.m[k]; ++t) w.push_back({GenKind::A, k + 1});
  for (int l : reduced_word_of(nf.star)) w.push_back({GenKind::S, l});
  for (int t = nf.r; t < int(n); ++t) w.push_back({GenKind::Nu, 0});
  auto wb = omega_bar_word(nf.B, n);
  w.insert(w.end(), wb.begin(), wb.end());
  return w;
}

FramedPartial recompose(unsigned n, const PrimeField* F, const NormalForm& nf) {
  auto w = normal_form_word(n, nf);
  return evaluate_word(n, F, w);
}

Int framed_rank_count(unsigned n, unsigned q, unsigned r) {
  Int c = binomial(n, r);
  Int out = c * c * factorial(r);
  Int qp(1);
  for (unsigned i = 0; i < r; ++i) qp *= int(q) - 1;
  return out * qp;
}

Int framed_total_count(unsigned n, unsigned q) {
  Int total(0);
  for (unsigned r = 0; r <= n; ++r) total += framed_rank_count(n, q, r);
  return total;
}

Int rook_rank_count(unsigned n, unsigned r) {
  Int c = binomial(n, r);
  return c * c * factorial(r);
}

Int rook_total_count(unsigned n) {
  Int total(0);
  for (unsigned r = 0; r <= n; ++r) total += rook_rank_count(n, r);
  return total;
}

namespace {

void subsets_of_size(int n, int r, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (int(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= n - (r - int(cur.size())) + 1; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

}  // namespace

std::vector<FramedPartial> enumerate_framed(unsigned n, const PrimeField* F,
                                            std::optional<int> rank, bool unsafe_scale) {
  if (!unsafe_scale && (n > 4 || F->q() > 5))
    throw std::domain_error("enumerate_framed: scale guard exceeded (n <= 4, q <= 5)");
  std::vector<FramedPartial> out;
  unsigned q = F->q();
  for (int r = 0; r <= int(n); ++r) {
    if (rank && *rank != r) continue;
    std::vector<std::vector<int>> doms, images;
    subsets_of_size(int(n), r, doms);
    subsets_of_size(int(n), r, images);
    for (const auto& A : doms)
      for (auto B : images) {
        std::sort(B.begin(), B.end());
        std::vector<int> perm = B;
        do {
          // Labels: base (q-1) counter over the r strands.
          std::vector<uint32_t> counter(r, 0);
          while (true) {
            std::vector<uint8_t> img(n, 0);
            std::vector<uint32_t> lab(n, 0);
            for (int k = 0; k < r; ++k) {
              img[A[k] - 1] = uint8_t(perm[k]);
              lab[A[k] - 1] = counter[k] + 1;
            }
            out.emplace_back(n, F, std::move(img), std::move(lab));
            int pos = r - 1;
            while (pos >= 0 && counter[pos] == q - 2) counter[pos--] = 0;
            if (pos < 0) break;
            ++counter[pos];
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report verify_framed_presentation(unsigned n, const PrimeField* F, bool unsafe_scale) {
  if (!unsafe_scale && n > 4)
    throw std::domain_error("verify_framed_presentation: scale guard exceeded (n <= 4)");
  Report rep;
  rep.suite = "framed";
  rep.params = {{"n", std::to_string(n)}, {"q", std::to_string(F->q())}};
  unsigned q = F->q();
  auto id = FramedPartial::identity(n, F);
  auto S = [&](int i) { return generator(GenKind::S, n, F, i); };
  auto R = [&](int i) { return generator(GenKind::R, n, F, i); };
  auto A = [&](int i) { return generator(GenKind::A, n, F, i); };
  auto nu = generator(GenKind::Nu, n, F);
  auto power = [&](const FramedPartial& x, unsigned e) {
    auto acc = id;
    for (unsigned k = 0; k < e; ++k) acc = multiply(acc, x);
    return acc;
  };

  {
    bool ok = true;
    for (int i = 1; i < int(n); ++i) ok &= multiply(S(i), S(i)) == id;
    rep.add("symmetric group: involutions", "s_i^2 = 1", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i + 1 < int(n); ++i)
      ok &= multiply(multiply(S(i), S(i + 1)), S(i)) == multiply(multiply(S(i + 1), S(i)), S(i + 1));
    rep.add("symmetric group: braid", "s_i s_j s_i = s_j s_i s_j, |i-j| = 1", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i < int(n); ++i)
      for (int j = i + 2; j < int(n); ++j)
        ok &= multiply(S(i), S(j)) == multiply(S(j), S(i));
    rep.add("symmetric group: distant commutation", "s_i s_j = s_j s_i, |i-j| > 1", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i <= int(n); ++i) ok &= multiply(R(i), R(i)) == R(i);
    for (int i = 1; i <= int(n); ++i)
      for (int j = 1; j <= int(n); ++j) ok &= multiply(R(i), R(j)) == multiply(R(j), R(i));
    rep.add("projections: idempotent + commuting", "r_i^2 = r_i;  r_i r_j = r_j r_i", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i < int(n); ++i) {
      ok &= multiply(S(i), R(i)) == multiply(R(i + 1), S(i));
      ok &= multiply(multiply(R(i), S(i)), R(i)) == multiply(R(i), R(i + 1));
      for (int j = 1; j <= int(n); ++j)
        if (j != i && j != i + 1) ok &= multiply(S(i), R(j)) == multiply(R(j), S(i));
    }
    rep.add("projections vs transpositions",
            "s_i r_i = r_{i+1} s_i;  r_i s_i r_i = r_i r_{i+1};  s_i r_j = r_j s_i (j != i, i+1)",
            ok);
  }
  {
    bool ok = true;
    for (int i = 1; i <= int(n); ++i) ok &= power(A(i), q - 1) == id;
    for (int i = 1; i <= int(n); ++i)
      for (int j = 1; j <= int(n); ++j) ok &= multiply(A(i), A(j)) == multiply(A(j), A(i));
    rep.add("framings: torsion + commuting", "a_i^{q-1} = 1;  a_i a_j = a_j a_i", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i < int(n); ++i) {
      ok &= multiply(S(i), A(i)) == multiply(A(i + 1), S(i));
      for (int j = 1; j <= int(n); ++j)
        if (j != i && j != i + 1) ok &= multiply(S(i), A(j)) == multiply(A(j), S(i));
    }
    rep.add("framings vs transpositions", "s_i a_i = a_{i+1} s_i;  s_i a_j = a_j s_i (j != i, i+1)",
            ok);
  }
  {
    bool ok = true;
    for (int i = 1; i <= int(n); ++i)
      for (int j = 1; j <= int(n); ++j) ok &= multiply(R(i), A(j)) == multiply(A(j), R(i));
    for (int i = 1; i <= int(n); ++i) ok &= multiply(R(i), A(i)) == R(i);
    rep.add("framings vs projections", "r_i a_j = a_j r_i;  r_i a_i = r_i", ok);
  }
  {
    // nu = r_n s_{n-1} ... s_1 r_1.
    std::vector<Gen> w = {{GenKind::R, int(n)}};
    for (int i = int(n) - 1; i >= 1; --i) w.push_back({GenKind::S, i});
    w.push_back({GenKind::R, 1});
    rep.add("shift generator factorization", "nu = r_n s_{n-1} ... s_1 r_1",
            evaluate_word(n, F, w) == nu);
  }
  {
    bool ok = true;
    for (int i = 1; i < int(n); ++i) {
      auto nu_i1 = power(nu, unsigned(i) + 1);
      ok &= multiply(nu_i1, S(i)) == nu_i1;
      ok &= multiply(S(int(n) - i), nu_i1) == nu_i1;
    }
    for (int i = 1; i + 1 < int(n); ++i) ok &= multiply(S(i), nu) == multiply(nu, S(i + 1));
    auto lhs = nu;
    for (int i = 1; i < int(n); ++i) lhs = multiply(lhs, S(i));
    lhs = multiply(lhs, nu);
    ok &= lhs == nu;
    rep.add("shift generator relations",
            "nu^{i+1} s_i = nu^{i+1} = s_{n-i} nu^{i+1};  s_i nu = nu s_{i+1};  nu s_1...s_{n-1} nu = nu",
            ok);
  }
  {
    bool ok = true;
    for (int i = 1; i + 1 < int(n); ++i) ok &= multiply(A(i), nu) == multiply(nu, A(i + 1));
    // i = n-1 instance a_{n-1} nu = nu a_n also holds; cover it.
    if (n >= 2) ok &= multiply(A(int(n) - 1), nu) == multiply(nu, A(int(n)));
    ok &= multiply(nu, A(1)) == nu;
    ok &= multiply(A(int(n)), nu) == nu;
    rep.add("framings vs shift", "a_i nu = nu a_{i+1};  nu a_1 = a_n nu = nu", ok);
  }
  {
    bool ok = true;
    for (int j = 1; j <= int(n); ++j) {
      auto nuj = power(nu, unsigned(j));
      for (int i = 1; i <= j; ++i) {
        ok &= multiply(A(int(n) - i + 1), nuj) == nuj;
        ok &= multiply(nuj, A(i)) == nuj;
      }
    }
    rep.add("absorbed framings", "a_{n-i+1} nu^j = nu^j a_i = nu^j for i <= j", ok);
  }
  if (n >= 2) {
    auto lhs = multiply(multiply(multiply(R(1), S(1)), R(1)), S(1));
    auto rhs = multiply(multiply(multiply(S(1), R(1)), S(1)), R(1));
    rep.add("replacement commutation", "r_1 s_1 r_1 s_1 = s_1 r_1 s_1 r_1", lhs == rhs);
    rep.add("replacement commutation (variant)", "r_2 r_1 s_1 = s_1 r_2 r_1",
            multiply(multiply(R(2), R(1)), S(1)) == multiply(multiply(S(1), R(2)), R(1)));
  }
  if (n >= 2) {
    auto lhs = nu;
    std::vector<Gen> w;
    for (int i = 1; i < int(n); ++i) w.push_back({GenKind::S, i});
    auto front = evaluate_word(n, F, w);
    rep.add("projection recovery", "s_1...s_{n-1} nu = r_1", multiply(front, nu) == R(1));
    bool ok = true;
    for (int i = 1; i < int(n); ++i) {
      std::vector<Gen> wi;
      for (int k = i; k >= 1; --k) wi.push_back({GenKind::S, k});
      wi.push_back({GenKind::R, 1});
      for (int k = 1; k <= i; ++k) wi.push_back({GenKind::S, k});
      ok &= evaluate_word(n, F, wi) == R(i + 1);
    }
    rep.add("conjugated projections", "r_{i+1} = s_i ... s_1 r_1 s_1 ... s_i", ok);
  }
  {
    // Generator closure equals the counting formula, per rank.
    std::set<FramedPartial> closure;
    std::vector<FramedPartial> gens = {id};
    for (int i = 1; i < int(n); ++i) gens.push_back(S(i));
    for (int i = 1; i <= int(n); ++i) gens.push_back(R(i));
    for (int i = 1; i <= int(n); ++i) gens.push_back(A(i));
    std::vector<FramedPartial> frontier = gens;
    for (const auto& g : gens) closure.insert(g);
    while (!frontier.empty()) {
      std::vector<FramedPartial> next;
      for (const auto& x : frontier)
        for (const auto& g : gens) {
          auto y = multiply(x, g);
          if (closure.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    Int expected = framed_total_count(n, q);
    bool ok = Int(int(closure.size())) == expected;
    std::map<int, int> by_rank;
    for (const auto& x : closure) by_rank[x.rank()]++;
    for (unsigned r = 0; r <= n; ++r)
      ok &= Int(by_rank.count(int(r)) ? by_rank[int(r)] : 0) == framed_rank_count(n, q, r);
    rep.add("generator closure cardinality",
            "|F_q(I_n)| = sum_r (q-1)^r C(n,r)^2 r!",
            ok, "closure size " + std::to_string(closure.size()) + " vs formula " + expected.get_str());
  }
  return rep;
}

}  // namespace frook
