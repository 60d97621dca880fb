#include "frook/rook.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace frook {

RookMatrix::RookMatrix(unsigned n, const PrimeField* F) : n_(n), F_(F), e_(n * n, 0) {}

RookMatrix::RookMatrix(unsigned n, const PrimeField* F, std::vector<uint32_t> entries)
    : n_(n), F_(F), e_(std::move(entries)) {
  if (e_.size() != n_ * n_) throw std::invalid_argument("RookMatrix: entry count mismatch");
  for (uint32_t v : e_)
    if (v >= F_->q()) throw std::invalid_argument("RookMatrix: entry out of field");
}

RookMatrix RookMatrix::identity(unsigned n, const PrimeField* F) {
  RookMatrix m(n, F);
  for (unsigned i = 1; i <= n; ++i) m.set(int(i), int(i), 1);
  return m;
}

RookMatrix RookMatrix::diagonal(const PrimeField* F, const std::vector<uint32_t>& diag) {
  RookMatrix m(unsigned(diag.size()), F);
  for (unsigned i = 1; i <= diag.size(); ++i) m.set(int(i), int(i), diag[i - 1]);
  return m;
}

RookMatrix RookMatrix::operator*(const RookMatrix& o) const {
  if (n_ != o.n_ || F_ != o.F_) throw std::invalid_argument("RookMatrix: size mismatch");
  RookMatrix out(n_, F_);
  uint32_t q = F_->q();
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned k = 0; k < n_; ++k) {
      uint32_t x = e_[i * n_ + k];
      if (!x) continue;
      for (unsigned j = 0; j < n_; ++j) {
        uint32_t y = o.e_[k * n_ + j];
        if (!y) continue;
        out.e_[i * n_ + j] = (out.e_[i * n_ + j] + x * y) % q;
      }
    }
  return out;
}

RookMatrix RookMatrix::transpose() const {
  RookMatrix out(n_, F_);
  for (unsigned i = 1; i <= n_; ++i)
    for (unsigned j = 1; j <= n_; ++j) out.set(int(j), int(i), at(int(i), int(j)));
  return out;
}

bool RookMatrix::is_diagonal() const {
  for (unsigned i = 1; i <= n_; ++i)
    for (unsigned j = 1; j <= n_; ++j)
      if (i != j && at(int(i), int(j)) != 0) return false;
  return true;
}

bool RookMatrix::is_zero() const {
  for (uint32_t v : e_)
    if (v) return false;
  return true;
}

std::array<uint64_t, 2> RookMatrix::encode() const {
  std::array<uint64_t, 2> code = {0, 0};
  uint32_t q = F_->q();
  size_t half = e_.size() / 2 + (e_.size() % 2);
  for (size_t k = half; k-- > 0;) code[0] = code[0] * q + e_[k];
  for (size_t k = e_.size(); k-- > half;) code[1] = code[1] * q + e_[k];
  return code;
}

RookMatrix RookMatrix::decode(unsigned n, const PrimeField* F, std::array<uint64_t, 2> code) {
  std::vector<uint32_t> e(n * n, 0);
  uint32_t q = F->q();
  size_t half = e.size() / 2 + (e.size() % 2);
  for (size_t k = 0; k < half; ++k) {
    e[k] = uint32_t(code[0] % q);
    code[0] /= q;
  }
  for (size_t k = half; k < e.size(); ++k) {
    e[k] = uint32_t(code[1] % q);
    code[1] /= q;
  }
  return RookMatrix(n, F, std::move(e));
}

uint64_t RookMatrix::flat_index() const {
  uint64_t idx = 0;
  for (size_t k = e_.size(); k-- > 0;) idx = idx * F_->q() + e_[k];
  return idx;
}

RookMatrix RookMatrix::from_flat_index(unsigned n, const PrimeField* F, uint64_t idx) {
  std::vector<uint32_t> e(n * n, 0);
  for (size_t k = 0; k < e.size(); ++k) {
    e[k] = uint32_t(idx % F->q());
    idx /= F->q();
  }
  return RookMatrix(n, F, std::move(e));
}

std::string RookMatrix::to_text() const {
  std::ostringstream os;
  for (unsigned i = 1; i <= n_; ++i) {
    if (i > 1) os << "; ";
    for (unsigned j = 1; j <= n_; ++j) {
      if (j > 1) os << " ";
      os << at(int(i), int(j));
    }
  }
  return os.str();
}

std::optional<QData> q_membership(const RookMatrix& m, QReject* reject) {
  unsigned n = m.n();
  QData q;
  q.mat = m;
  q.support = RookMatrix(n, m.field());
  q.img.assign(n, 0);
  std::vector<int> col_hits(n + 1, 0);
  for (unsigned i = 1; i <= n; ++i) {
    int found = 0;
    for (unsigned j = 1; j <= n; ++j) {
      if (m.at(int(i), int(j)) != 0) {
        if (++found > 1) {
          if (reject) *reject = {true, int(i)};
          return std::nullopt;
        }
        q.img[i - 1] = int(j);
      }
    }
  }
  for (unsigned j = 1; j <= n; ++j) {
    int found = 0;
    for (unsigned i = 1; i <= n; ++i)
      if (m.at(int(i), int(j)) != 0) ++found;
    if (found > 1) {
      if (reject) *reject = {false, int(j)};
      return std::nullopt;
    }
  }
  for (unsigned i = 1; i <= n; ++i) {
    if (q.img[i - 1] != 0) {
      q.I.push_back(int(i));
      q.J.push_back(q.img[i - 1]);
      q.support.set(int(i), q.img[i - 1], 1);
    }
  }
  std::sort(q.J.begin(), q.J.end());
  q.r = int(q.I.size());
  // Order-preserving extension of i -> img[i] to a permutation of [n].
  q.hat.assign(n, 0);
  std::vector<int> free_rows, free_cols;
  std::vector<bool> col_used(n + 1, false);
  for (int j : q.J) col_used[j] = true;
  for (unsigned i = 1; i <= n; ++i)
    if (q.img[i - 1] == 0) free_rows.push_back(int(i));
  for (unsigned j = 1; j <= n; ++j)
    if (!col_used[j]) free_cols.push_back(int(j));
  for (unsigned i = 1; i <= n; ++i)
    if (q.img[i - 1] != 0) q.hat[i - 1] = q.img[i - 1];
  for (size_t k = 0; k < free_rows.size(); ++k) q.hat[free_rows[k] - 1] = free_cols[k];
  q.len = length_closed_form(q);
  return q;
}

QData q_require(const RookMatrix& m) {
  QReject rej;
  auto q = q_membership(m, &rej);
  if (!q)
    throw std::invalid_argument(std::string("q_require: two nonzero entries in ") +
                                (rej.row ? "row " : "column ") + std::to_string(rej.index));
  return *q;
}

TDecomposition t_decompose(const QData& q) {
  unsigned n = q.mat.n();
  const PrimeField* F = q.mat.field();
  std::vector<uint32_t> dI(n, 1), dJ(n, 1);
  for (int i : q.I) dI[i - 1] = q.mat.at(i, q.img[i - 1]);
  for (unsigned j = 1; j <= n; ++j) {
    for (unsigned i = 1; i <= n; ++i)
      if (q.mat.at(int(i), int(j)) != 0) dJ[j - 1] = q.mat.at(int(i), int(j));
  }
  return {RookMatrix::diagonal(F, dI), q.support, RookMatrix::diagonal(F, dJ)};
}

long inversion_count(const QData& q) {
  long n_inv = 0;
  for (size_t a = 0; a < q.I.size(); ++a)
    for (size_t b = a + 1; b < q.I.size(); ++b)
      if (q.img[q.I[a] - 1] > q.img[q.I[b] - 1]) ++n_inv;
  return n_inv;
}

long length_closed_form(const QData& q) {
  unsigned n = q.mat.n();
  long r = q.r;
  long mL = 0, mR = 0;
  for (int i : q.I) mL += i - 1;
  mL -= r * (r - 1) / 2;
  for (int j : q.J) mR += long(n) - j;
  mR -= r * (r - 1) / 2;
  return inversion_count(q) + mL + mR;
}

InversionSets inversion_sets(const QData& q) {
  unsigned n = q.mat.n();
  InversionSets s;
  std::vector<bool> inI(n + 1, false), inJ(n + 1, false);
  for (int i : q.I) inI[i] = true;
  for (int j : q.J) inJ[j] = true;
  for (int i = 1; i <= int(n); ++i)
    for (int j = i + 1; j <= int(n); ++j) {
      if (inI[i] && inI[j]) {
        s.I11.emplace_back(i, j);
        if (q.img[i - 1] > q.img[j - 1]) s.inv.emplace_back(i, j);
      } else if (inI[i] && !inI[j]) {
        s.I10.emplace_back(i, j);
      } else if (!inI[i] && inI[j]) {
        s.inv_L.emplace_back(i, j);  // I01
      } else {
        s.I00.emplace_back(i, j);
      }
      if (inJ[i] && inJ[j]) {
        s.J11.emplace_back(i, j);
      } else if (inJ[i] && !inJ[j]) {
        s.inv_R.emplace_back(i, j);  // J10
      } else if (!inJ[i] && inJ[j]) {
        s.J01.emplace_back(i, j);
      } else {
        s.J00.emplace_back(i, j);
      }
    }
  return s;
}

FramedPartial to_framed(const QData& q) {
  unsigned n = q.mat.n();
  std::vector<uint8_t> img(n, 0);
  std::vector<uint32_t> lab(n, 0);
  for (int i : q.I) {
    img[i - 1] = uint8_t(q.img[i - 1]);
    lab[i - 1] = q.mat.at(i, q.img[i - 1]);
  }
  return FramedPartial(n, q.mat.field(), std::move(img), std::move(lab));
}

QData from_framed(const FramedPartial& x) {
  RookMatrix m(x.n(), x.field());
  for (unsigned i = 1; i <= x.n(); ++i)
    if (x.image(int(i)) != 0) m.set(int(i), x.image(int(i)), x.label(int(i)));
  return q_require(m);
}

RookMatrix x_elem(unsigned n, const PrimeField* F, int i, int j, uint32_t r) {
  if (i == j || i < 1 || j < 1 || i > int(n) || j > int(n))
    throw std::invalid_argument("x_elem: bad indices");
  RookMatrix m = RookMatrix::identity(n, F);
  m.set(i, j, r % F->q());
  return m;
}

RookMatrix h_elem(unsigned n, const PrimeField* F, int k, uint32_t r) {
  if (r == 0) throw std::invalid_argument("h_elem: r must be a unit");
  if (k < 1 || k >= int(n)) throw std::invalid_argument("h_elem: bad index");
  RookMatrix m = RookMatrix::identity(n, F);
  m.set(k, k, F->neg(F->inv(r)));
  m.set(k + 1, k + 1, r % F->q());
  return m;
}

RookMatrix h_elem_s(unsigned n, const PrimeField* F, int k, uint32_t r) {
  auto s = s_matrix(n, F, k);
  return s * h_elem(n, F, k, r) * s;
}

RookMatrix v_elem(unsigned n, const PrimeField* F, int r) {
  if (r < 0 || r > int(n)) throw std::invalid_argument("v_elem: bad rank");
  RookMatrix m(n, F);
  for (int i = 1; i <= r; ++i) m.set(i, i + int(n) - r, 1);
  return m;
}

RookMatrix nu_matrix(unsigned n, const PrimeField* F) {
  RookMatrix m(n, F);
  for (int i = 1; i < int(n); ++i) m.set(i, i + 1, 1);
  return m;
}

RookMatrix s_matrix(unsigned n, const PrimeField* F, int k) {
  if (k < 1 || k >= int(n)) throw std::invalid_argument("s_matrix: bad index");
  RookMatrix m = RookMatrix::identity(n, F);
  m.set(k, k, 0);
  m.set(k + 1, k + 1, 0);
  m.set(k, k + 1, 1);
  m.set(k + 1, k, 1);
  return m;
}

RookMatrix a_matrix(unsigned n, const PrimeField* F, int i) {
  if (i < 1 || i > int(n)) throw std::invalid_argument("a_matrix: bad index");
  RookMatrix m = RookMatrix::identity(n, F);
  m.set(i, i, F->generator());
  return m;
}

RookMatrix permutation_matrix(const PrimeField* F, const std::vector<int>& one_line) {
  unsigned n = unsigned(one_line.size());
  RookMatrix m(n, F);
  for (unsigned i = 1; i <= n; ++i) m.set(int(i), one_line[i - 1], 1);
  return m;
}

std::vector<RookMatrix> enumerate_W(unsigned n, const PrimeField* F) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<RookMatrix> out;
  do {
    out.push_back(permutation_matrix(F, w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<RookMatrix> enumerate_T(unsigned n, const PrimeField* F) {
  std::vector<RookMatrix> out;
  std::vector<uint32_t> d(n, 1);
  while (true) {
    out.push_back(RookMatrix::diagonal(F, d));
    size_t pos = n;
    while (pos > 0 && d[pos - 1] == F->q() - 1) d[--pos] = 1;
    if (pos == 0) break;
    ++d[pos - 1];
  }
  return out;
}

std::vector<QData> enumerate_R(unsigned n, const PrimeField* F, std::optional<int> r) {
  std::vector<QData> out;
  // Plain partial permutations: reuse the framed enumeration at trivial labels
  // via a two-element field view would change q; enumerate directly instead.
  std::function<void(unsigned, std::vector<int>&, std::vector<bool>&)> rec =
      [&](unsigned i, std::vector<int>& img, std::vector<bool>& used) {
        if (i > n) {
          int rank = 0;
          for (int v : img)
            if (v) ++rank;
          if (r && *r != rank) return;
          RookMatrix m(n, F);
          for (unsigned k = 1; k <= n; ++k)
            if (img[k - 1]) m.set(int(k), img[k - 1], 1);
          out.push_back(q_require(m));
          return;
        }
        img.push_back(0);
        rec(i + 1, img, used);
        img.pop_back();
        for (unsigned j = 1; j <= n; ++j) {
          if (used[j]) continue;
          used[j] = true;
          img.push_back(int(j));
          rec(i + 1, img, used);
          img.pop_back();
          used[j] = false;
        }
      };
  std::vector<int> img;
  std::vector<bool> used(n + 1, false);
  rec(1, img, used);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QData> enumerate_Q(unsigned n, const PrimeField* F, std::optional<int> r,
                               bool unsafe_scale) {
  auto framed = enumerate_framed(n, F, r, unsafe_scale);
  std::vector<QData> out;
  out.reserve(framed.size());
  for (const auto& x : framed) out.push_back(from_framed(x));
  std::sort(out.begin(), out.end());
  return out;
}

long perm_inversions(const std::vector<int>& w) {
  long c = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

std::vector<int> perm_of_word(unsigned n, const std::vector<int>& letters) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  // Diagram order: the image of i is obtained by applying the letters left to
  // right, so the one-line word accumulates by composing on the right.
  for (int l : letters) {
    for (auto& v : w)
      if (v == l)
        v = l + 1;
      else if (v == l + 1)
        v = l;
  }
  return w;
}

std::vector<int> reduced_word(std::vector<int> one_line) {
  // Bubble sort; swapping positions (t, t+1) is a left multiplication by that
  // transposition, so the recorded letters in order form a reduced word in
  // diagram order.
  std::vector<int> letters;
  int r = int(one_line.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t + 1 < r; ++t)
      if (one_line[t] > one_line[t + 1]) {
        std::swap(one_line[t], one_line[t + 1]);
        letters.push_back(t + 1);
        changed = true;
      }
  }
  return letters;
}

std::vector<std::vector<int>> all_reduced_words(const std::vector<int>& one_line) {
  std::vector<std::vector<int>> out;
  long len = perm_inversions(one_line);
  std::vector<int> cur;
  // Peel the first letter: w = s_l w' with one fewer inversion exactly at the
  // descents of w; w' is w with the entries at positions l, l+1 swapped.
  std::function<void(std::vector<int>)> rec = [&](std::vector<int> w) {
    if (long(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int l = 1; l < int(w.size()); ++l) {
      if (w[l - 1] > w[l]) {
        std::vector<int> w2 = w;
        std::swap(w2[l - 1], w2[l]);
        cur.push_back(l);
        rec(std::move(w2));
        cur.pop_back();
      }
    }
  };
  rec(one_line);
  std::sort(out.begin(), out.end());
  return out;
}

RookMatrix matrix_of_letters(unsigned n, const PrimeField* F, const std::vector<int>& letters) {
  RookMatrix m = RookMatrix::identity(n, F);
  for (int l : letters) m = m * s_matrix(n, F, l);
  return m;
}

long length_bfs(const QData& sigma) {
  unsigned n = sigma.mat.n();
  const PrimeField* F = sigma.mat.field();
  RookMatrix start = v_elem(n, F, sigma.r);
  if (sigma.support == start) return 0;
  std::map<RookMatrix, long> dist;
  dist[start] = 0;
  std::queue<RookMatrix> queue;
  queue.push(start);
  while (!queue.empty()) {
    RookMatrix cur = queue.front();
    queue.pop();
    long d = dist[cur];
    for (int k = 1; k < int(n); ++k) {
      for (RookMatrix next : {s_matrix(n, F, k) * cur, cur * s_matrix(n, F, k)}) {
        if (dist.emplace(next, d + 1).second) {
          if (next == sigma.support) return d + 1;
          queue.push(next);
        }
      }
    }
  }
  throw std::logic_error("length_bfs: pattern unreachable from the staircase");
}

namespace {

std::string pairs_to_string(const std::vector<std::pair<int, int>>& ps) {
  std::ostringstream os;
  os << "{";
  for (size_t k = 0; k < ps.size(); ++k) {
    if (k) os << ",";
    os << "(" << ps[k].first << "," << ps[k].second << ")";
  }
  os << "}";
  return os.str();
}

}  // namespace

Report verify_rook_matrices(unsigned n, const PrimeField* F, uint64_t seed, bool unsafe_scale) {
  Report rep;
  rep.suite = "rook";
  rep.params = {{"n", std::to_string(n)}, {"q", std::to_string(F->q())}};
  std::mt19937_64 rng(seed);

  {
    // Worked 5x5 factorization over F_7 with generator 3: permutation part,
    // framing part a_1^5 a_2 a_3^2, staircase shift, right permutation.
    PrimeField F7(7);
    RookMatrix u = matrix_of_letters(5, &F7, {1, 2, 3, 1, 2});
    RookMatrix t = RookMatrix::identity(5, &F7);
    t.set(1, 1, F7.gen_pow(5));
    t.set(2, 2, F7.gen_pow(1));
    t.set(3, 3, F7.gen_pow(2));
    RookMatrix nu2 = nu_matrix(5, &F7) * nu_matrix(5, &F7);
    RookMatrix w = matrix_of_letters(5, &F7, {2, 1, 3});
    RookMatrix sigma(5, &F7);
    sigma.set(2, 5, 2);
    sigma.set(3, 1, 5);
    sigma.set(4, 3, 3);
    RookMatrix prod = u * t * nu2 * w;
    rep.add("worked factorization display",
            "sigma = (s_1 s_2 s_3 s_1 s_2) a_1^5 a_2 a_3^2 nu^2 (s_2 s_1 s_3) over F_7, a = 3",
            prod == sigma, prod.to_text());
  }
  {
    // Same element: the diagonal decomposition on both sides.
    PrimeField F7(7);
    RookMatrix sigma(5, &F7);
    sigma.set(2, 5, 2);
    sigma.set(3, 1, 5);
    sigma.set(4, 3, 3);
    auto td = t_decompose(q_require(sigma));
    bool ok = td.t_I * td.support == sigma && td.support * td.t_J == sigma;
    ok &= td.t_I == RookMatrix::diagonal(&F7, {1, 2, 5, 3, 1});
    ok &= td.t_J == RookMatrix::diagonal(&F7, {5, 1, 3, 1, 2});
    rep.add("two-sided diagonal decomposition", "sigma = t_I sigma~ = sigma~ t_J", ok,
            "t_I = " + td.t_I.to_text() + " | t_J = " + td.t_J.to_text());
  }
  {
    // Same element: inversion statistics and length.
    PrimeField F7(7);
    RookMatrix sigma(5, &F7);
    sigma.set(2, 5, 2);
    sigma.set(3, 1, 5);
    sigma.set(4, 3, 3);
    QData q = q_require(sigma);
    auto is = inversion_sets(q);
    bool ok = pairs_to_string(is.inv) == "{(2,3),(2,4)}";
    ok &= pairs_to_string(is.inv_L) == "{(1,2),(1,3),(1,4)}";
    ok &= pairs_to_string(is.inv_R) == "{(1,2),(1,4),(3,4)}";
    ok &= q.len == 8;
    ok &= pairs_to_string(is.I00) == "{(1,5)}";
    ok &= pairs_to_string(is.I10) == "{(2,5),(3,5),(4,5)}";
    ok &= pairs_to_string(is.I11) == "{(2,3),(2,4),(3,4)}";
    ok &= pairs_to_string(is.J00) == "{(2,4)}";
    ok &= pairs_to_string(is.J01) == "{(2,3),(2,5)}";
    ok &= pairs_to_string(is.J11) == "{(1,3),(1,5),(3,5)}";
    rep.add("worked inversion statistics", "l(sigma) = n(sigma) + m_L(sigma) + m_R(sigma) = 8",
            ok,
            "inv=" + pairs_to_string(is.inv) + " invL=" + pairs_to_string(is.inv_L) +
                " invR=" + pairs_to_string(is.inv_R) + " l=" + std::to_string(q.len) +
                " I00=" + pairs_to_string(is.I00) + " I10=" + pairs_to_string(is.I10) +
                " I11=" + pairs_to_string(is.I11) + " J00=" + pairs_to_string(is.J00) +
                " J01=" + pairs_to_string(is.J01) + " J11=" + pairs_to_string(is.J11));
  }
  {
    // Same support pattern: eight transpositions reach the staircase.
    PrimeField F7(7);
    RookMatrix pattern(5, &F7);
    pattern.set(2, 5, 1);
    pattern.set(3, 1, 1);
    pattern.set(4, 3, 1);
    RookMatrix lhs = matrix_of_letters(5, &F7, {2, 1, 3, 2, 1}) * pattern *
                     matrix_of_letters(5, &F7, {3, 1, 2});
    rep.add("staircase transformation word",
            "(s_2 s_1)(s_3 s_2 s_1) sigma~ (s_3 s_1 s_2) = v_r", lhs == v_elem(5, &F7, 3),
            lhs.to_text());
  }
  {
    // v_r structure: order-preserving from [r] onto the last r columns.
    bool ok = true;
    for (int r = 0; r <= int(n); ++r) {
      QData v = q_require(v_elem(n, F, r));
      ok &= v.r == r && v.len == 0;
      for (int i = 1; i <= r; ++i) ok &= v.img[i - 1] == i + int(n) - r;
    }
    rep.add("staircase elements", "v_r = E_{1,1+n-r} + ... + E_{r,n}, length 0", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i <= int(n); ++i)
      for (int j = 1; j <= int(n); ++j) {
        if (i == j) continue;
        for (uint32_t r = 1; r < F->q(); ++r)
          ok &= x_elem(n, F, i, j, r) * x_elem(n, F, i, j, F->neg(r)) ==
                RookMatrix::identity(n, F);
      }
    rep.add("elementary inverses", "x_{i,j}(r) x_{i,j}(-r) = 1", ok);
  }
  {
    bool ok = true;
    for (uint32_t qq : {3u, 5u}) {
      PrimeField Fq(qq);
      for (int i = 1; i < int(n); ++i)
        for (uint32_t k = 1; k < qq; ++k) {
          RookMatrix lhs = h_elem(n, &Fq, i, Fq.gen_pow(k));
          RookMatrix rhs = RookMatrix::identity(n, &Fq);
          auto a_pow = [&](int idx, long e) {
            RookMatrix t = RookMatrix::identity(n, &Fq);
            t.set(idx, idx, Fq.gen_pow(e));
            return t;
          };
          rhs = a_pow(i, (qq - 1) / 2) * a_pow(i, -long(k)) * a_pow(i + 1, long(k));
          ok &= lhs == rhs;
        }
    }
    rep.add("diagonal hook identity", "h_i(a^k) = a_i^{(q-1)/2} a_i^{-k} a_{i+1}^k", ok);
  }
  {
    bool ok = true;
    for (int k = 1; k < int(n); ++k)
      for (uint32_t r = 1; r < F->q(); ++r)
        ok &= h_elem_s(n, F, k, r) * s_matrix(n, F, k) ==
              s_matrix(n, F, k) * h_elem(n, F, k, r);
    rep.add("conjugated hook", "h_k^s(r) s_k = s_k h_k(r)", ok);
  }

  auto Q = enumerate_Q(n, F, {}, unsafe_scale);
  {
    // Commutation of elementary matrices with rook-pattern matrices.
    bool ok = true;
    for (const auto& sigma : Q) {
      std::vector<bool> inI(n + 1, false), inJ(n + 1, false);
      for (int i : sigma.I) inI[i] = true;
      for (int j : sigma.J) inJ[j] = true;
      std::vector<int> at_col(n + 1, 0);  // row with the entry in each column
      for (int i : sigma.I) at_col[sigma.img[i - 1]] = i;
      for (int i = 1; i <= int(n); ++i)
        for (int j = 1; j <= int(n); ++j) {
          if (i == j) continue;
          for (uint32_t r = 1; r < F->q(); ++r) {
            RookMatrix x = x_elem(n, F, i, j, r);
            if (!inI[j]) ok &= x * sigma.mat == sigma.mat;
            if (!inJ[i]) ok &= sigma.mat * x == sigma.mat;
            if (inI[i] && inI[j]) {
              uint32_t factor =
                  F->mul(sigma.mat.at(j, sigma.img[j - 1]),
                         F->mul(F->inv(sigma.mat.at(i, sigma.img[i - 1])), r));
              ok &= x * sigma.mat ==
                    sigma.mat * x_elem(n, F, sigma.img[i - 1], sigma.img[j - 1], factor);
            }
            if (inJ[i] && inJ[j]) {
              uint32_t factor = F->mul(sigma.mat.at(at_col[i], i),
                                       F->mul(F->inv(sigma.mat.at(at_col[j], j)), r));
              ok &= sigma.mat * x == x_elem(n, F, at_col[i], at_col[j], factor) * sigma.mat;
            }
          }
        }
    }
    rep.add("elementary commutation relations",
            "x_{i,j}(r) sigma = sigma (j not in I); sigma x = x' sigma' variants", ok);
  }
  {
    // Length laws under one-sided transpositions and the shift.
    bool ok = true;
    RookMatrix nu = nu_matrix(n, F);
    for (const auto& sigma : Q) {
      for (int k = 1; k < int(n); ++k) {
        QData left = q_require(s_matrix(n, F, k) * sigma.mat);
        if (left.len == sigma.len) ok &= left.mat == sigma.mat;
        QData right = q_require(sigma.mat * s_matrix(n, F, k));
        if (right.len == sigma.len) ok &= right.mat == sigma.mat;
      }
      ok &= q_require(nu * sigma.mat).len <= sigma.len;
    }
    rep.add("length rigidity", "l(s_i sigma) = l(sigma) => s_i sigma = sigma;  l(nu sigma) <= l(sigma)",
            ok);
  }
  {
    // Support of products against one-sided rook-pattern factors.
    bool ok = true;
    auto R = enumerate_R(n, F);
    double total = std::pow(double(F->q()), double(n) * double(n));
    for (int trial = 0; trial < 300; ++trial) {
      const QData& rho = R[rng() % R.size()];
      RookMatrix m = RookMatrix::from_flat_index(n, F, rng() % uint64_t(total));
      auto pattern = [&](const RookMatrix& x) {
        RookMatrix p(n, F);
        for (int i = 1; i <= int(n); ++i)
          for (int j = 1; j <= int(n); ++j)
            if (x.at(i, j)) p.set(i, j, 1);
        return p;
      };
      ok &= pattern(rho.mat * m) == rho.mat * pattern(m);
      ok &= pattern(m * rho.mat) == pattern(m) * rho.mat;
    }
    rep.add("pattern multiplicativity", "(sigma m)~ = sigma m~ for sigma with rook pattern", ok);
  }
  {
    // Transposition invariance of the inversion number.
    bool ok = true;
    for (const auto& sigma : Q)
      ok &= inversion_count(q_require(sigma.mat.transpose())) == inversion_count(sigma);
    rep.add("inversions under transpose", "n(sigma_*) = n(sigma)", ok);
  }
  {
    // Closed-form length equals the search distance on all plain patterns.
    bool ok = true;
    auto R = enumerate_R(n, F);
    for (const auto& rho : R) ok &= rho.len == length_bfs(rho);
    rep.add("length against search oracle",
            "closed form = minimal transposition count to the staircase", ok,
            std::to_string(R.size()) + " patterns");
  }
  {
    // Torus translations of the rank strata.
    bool ok = true;
    auto Ts = enumerate_T(n, F);
    for (int r = 0; r <= int(n); ++r) {
      std::set<RookMatrix> stratum;
      for (const auto& q : Q)
        if (q.r == r) stratum.insert(q.mat);
      std::set<RookMatrix> TR, RT, TRT;
      for (const auto& q : enumerate_R(n, F, r))
        for (const auto& t : Ts) {
          TR.insert(t * q.mat);
          RT.insert(q.mat * t);
          for (const auto& t2 : Ts) TRT.insert(t * q.mat * t2);
        }
      ok &= TR == stratum && RT == stratum && TRT == stratum;
    }
    rep.add("torus translations of rank strata", "Q^r = T R^r = R^r T = T R^r T", ok);
  }
  {
    // Cell decomposition: double W-translates of framed staircases partition Q.
    auto W = enumerate_W(n, F);
    std::map<RookMatrix, int> cell_of;
    bool ok = true;
    int cell_id = 0;
    uint64_t covered = 0;
    for (int k = 0; k <= int(n); ++k) {
      std::vector<uint32_t> expo(n - k, 0);
      while (true) {
        RookMatrix core = RookMatrix::identity(n, F);
        for (unsigned i = 0; i < n - unsigned(k); ++i) core.set(int(i) + 1, int(i) + 1, F->gen_pow(expo[i]));
        for (int t = 0; t < k; ++t) core = core * nu_matrix(n, F);
        for (const auto& u : W)
          for (const auto& w : W) {
            RookMatrix m = u * core * w;
            auto [it, fresh] = cell_of.emplace(m, cell_id);
            if (!fresh && it->second != cell_id) ok = false;  // cells must not overlap
            if (fresh) ++covered;
          }
        ++cell_id;
        size_t pos = expo.size();
        while (pos > 0 && expo[pos - 1] == F->q() - 2) expo[--pos] = 0;
        if (pos == 0) break;
        ++expo[pos - 1];
      }
      if (k == int(n)) break;
    }
    ok &= covered == Q.size();
    for (const auto& q : Q) ok &= cell_of.count(q.mat) == 1;
    rep.add("framed staircase cells partition Q",
            "Q = disjoint union of W a_1^{m_1}...a_{n-k}^{m_{n-k}} nu^k W", ok,
            std::to_string(cell_id) + " cells");
  }
  {
    // Matrix side vs diagram side: the bijection is multiplicative.
    bool ok = true;
    if (Q.size() <= 64) {
      for (const auto& x : Q)
        for (const auto& y : Q)
          ok &= to_framed(q_require(x.mat * y.mat)) == multiply(to_framed(x), to_framed(y));
    } else {
      for (int trial = 0; trial < 500; ++trial) {
        const auto& x = Q[rng() % Q.size()];
        const auto& y = Q[rng() % Q.size()];
        ok &= to_framed(q_require(x.mat * y.mat)) == multiply(to_framed(x), to_framed(y));
      }
    }
    for (const auto& x : Q) ok &= from_framed(to_framed(x)).mat == x.mat;
    rep.add("matrix/diagram isomorphism", "products agree under the correspondence", ok);
  }
  {
    // Figure-level correspondence: transposing the matrix transposes the
    // framed partial permutation.
    PrimeField F7(7);
    RookMatrix sigma(5, &F7);
    sigma.set(2, 5, 2);
    sigma.set(3, 1, 5);
    sigma.set(4, 3, 3);
    bool ok = to_text(to_framed(q_require(sigma))) == "05130-02530";
    ok &= to_text(to_framed(q_require(sigma.transpose()))) == "30402-50302";
    ok &= to_framed(q_require(sigma.transpose())) == transpose(to_framed(q_require(sigma)));
    rep.add("transpose correspondence", "(sigma_*) as a framed partial permutation is the transpose",
            ok, to_text(to_framed(q_require(sigma))) + " -> " +
                    to_text(to_framed(q_require(sigma.transpose()))));
  }
  return rep;
}

}  // namespace frook
