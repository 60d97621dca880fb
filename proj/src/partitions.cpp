#include "frook/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "frook/framed.hpp"

namespace frook {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace

SetPartition::SetPartition(unsigned m, std::vector<int> block_of)
    : m_(m), block_(std::move(block_of)) {
  if (block_.size() != m_) throw std::invalid_argument("SetPartition: size mismatch");
  canonicalize();
}

void SetPartition::canonicalize() {
  std::map<int, int> renum;
  for (auto& b : block_) {
    auto [it, fresh] = renum.emplace(b, static_cast<int>(renum.size()));
    b = it->second;
  }
  nblocks_ = static_cast<int>(renum.size());
}

SetPartition SetPartition::singletons(unsigned m) {
  std::vector<int> b(m);
  std::iota(b.begin(), b.end(), 0);
  return SetPartition(m, std::move(b));
}

SetPartition SetPartition::pair_block(unsigned m, int i, int j) {
  if (i < 1 || j < 1 || i > int(m) || j > int(m) || i == j)
    throw std::invalid_argument("pair_block: bad indices");
  std::vector<int> b(m);
  std::iota(b.begin(), b.end(), 0);
  b[std::max(i, j) - 1] = b[std::min(i, j) - 1];
  return SetPartition(m, std::move(b));
}

SetPartition SetPartition::from_blocks(unsigned m, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> b(m, -1);
  int id = 0;
  for (const auto& blk : blocks) {
    for (int v : blk) {
      if (v < 1 || v > int(m) || b[v - 1] != -1)
        throw std::invalid_argument("from_blocks: not a partition");
      b[v - 1] = id;
    }
    ++id;
  }
  for (int x : b)
    if (x == -1) throw std::invalid_argument("from_blocks: not covering");
  return SetPartition(m, std::move(b));
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(nblocks_);
  for (unsigned v = 1; v <= m_; ++v) out[block_[v - 1]].push_back(int(v));
  return out;
}

bool SetPartition::operator<(const SetPartition& o) const {
  if (m_ != o.m_) return m_ < o.m_;
  return block_ < o.block_;
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  os << "{";
  auto bs = blocks();
  for (size_t i = 0; i < bs.size(); ++i) {
    if (i) os << "|";
    for (size_t j = 0; j < bs[i].size(); ++j) {
      if (j) os << ",";
      os << bs[i][j];
    }
  }
  os << "}";
  return os.str();
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("join: ground sets differ");
  unsigned m = a.ground_size();
  UnionFind uf(int(m));
  for (const auto& blk : a.blocks())
    for (size_t i = 0; i + 1 < blk.size(); ++i) uf.unite(blk[i] - 1, blk[i + 1] - 1);
  for (const auto& blk : b.blocks())
    for (size_t i = 0; i + 1 < blk.size(); ++i) uf.unite(blk[i] - 1, blk[i + 1] - 1);
  std::vector<int> blk(m);
  for (unsigned v = 0; v < m; ++v) blk[v] = uf.find(int(v));
  return SetPartition(m, std::move(blk));
}

SetPartition extend(const SetPartition& p, unsigned M) {
  if (M < p.ground_size()) throw std::invalid_argument("extend: target smaller");
  std::vector<int> blk(M);
  int nb = p.block_count();
  for (unsigned v = 1; v <= M; ++v)
    blk[v - 1] = v <= p.ground_size() ? p.block_of(int(v)) : nb + int(v);
  return SetPartition(M, std::move(blk));
}

SetPartition restrict_to_prefix(const SetPartition& p, unsigned m) {
  if (m > p.ground_size()) throw std::invalid_argument("restrict: target larger");
  std::vector<int> blk(m);
  for (unsigned v = 1; v <= m; ++v) blk[v - 1] = p.block_of(int(v));
  return SetPartition(m, std::move(blk));
}

namespace {

// Vertex maps into the three-layer glued graph on 0..3n-1 (top, middle,
// bottom). The upper diagram keeps its top row and sends its bottom row to
// the middle; the lower diagram sends its top row to the middle and keeps its
// bottom row (shifted past the middle).
int upper_vertex(int v, unsigned /*n*/) { return v - 1; }
int lower_vertex(int v, unsigned n) { return int(n) + v - 1; }

}  // namespace

SetPartition concatenate(const SetPartition& a, const SetPartition& b) {
  if (a.ground_size() != b.ground_size() || a.ground_size() % 2 != 0)
    throw std::invalid_argument("concatenate: need equal even ground sets");
  unsigned n = a.ground_size() / 2;
  UnionFind uf(3 * int(n));
  for (const auto& blk : a.blocks())
    for (size_t i = 0; i + 1 < blk.size(); ++i)
      uf.unite(upper_vertex(blk[i], n), upper_vertex(blk[i + 1], n));
  for (const auto& blk : b.blocks())
    for (size_t i = 0; i + 1 < blk.size(); ++i)
      uf.unite(lower_vertex(blk[i], n), lower_vertex(blk[i + 1], n));
  std::vector<int> blk(2 * n);
  for (unsigned i = 0; i < n; ++i) blk[i] = uf.find(int(i));
  for (unsigned i = 0; i < n; ++i) blk[n + i] = uf.find(int(2 * n + i));
  return SetPartition(2 * n, std::move(blk));
}

SetPartition diagram_transpose(const SetPartition& p) {
  unsigned m = p.ground_size();
  if (m % 2 != 0) throw std::invalid_argument("diagram_transpose: odd ground set");
  unsigned n = m / 2;
  std::vector<int> blk(m);
  for (unsigned v = 1; v <= m; ++v) {
    unsigned vstar = v <= n ? v + n : v - n;
    blk[vstar - 1] = p.block_of(int(v));
  }
  return SetPartition(m, std::move(blk));
}

std::vector<int> diagram_dom(const SetPartition& p) {
  unsigned n = p.ground_size() / 2;
  std::vector<int> out;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = n + 1; j <= 2 * n; ++j)
      if (p.same_block(int(i), int(j))) {
        out.push_back(int(i));
        break;
      }
  }
  return out;
}

std::vector<int> diagram_codom(const SetPartition& p) {
  unsigned n = p.ground_size() / 2;
  std::vector<int> out;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j)
      if (p.same_block(int(n + i), int(j))) {
        out.push_back(int(i));
        break;
      }
  }
  return out;
}

bool is_partial_brauer(const SetPartition& p) {
  for (const auto& blk : p.blocks())
    if (blk.size() > 2) return false;
  return true;
}

SetPartition identity_diagram(unsigned n) {
  std::vector<int> blk(2 * n);
  for (unsigned i = 0; i < n; ++i) blk[i] = blk[n + i] = int(i);
  return SetPartition(2 * n, std::move(blk));
}

SetPartition s_diagram(unsigned n, int i) {
  if (i < 1 || i >= int(n)) throw std::invalid_argument("s_diagram: index out of range");
  std::vector<int> blk(2 * n);
  for (unsigned k = 0; k < n; ++k) blk[k] = blk[n + k] = int(k);
  std::swap(blk[n + i - 1], blk[n + i]);  // lines {i, n+i+1} and {i+1, n+i}
  return SetPartition(2 * n, std::move(blk));
}

SetPartition r_diagram(unsigned n, int i) {
  if (i < 1 || i > int(n)) throw std::invalid_argument("r_diagram: index out of range");
  std::vector<int> blk(2 * n);
  int next = 0;
  for (unsigned k = 0; k < n; ++k) {
    if (int(k) + 1 == i) {
      blk[k] = next++;
      blk[n + k] = next++;
    } else {
      blk[k] = blk[n + k] = next++;
    }
  }
  return SetPartition(2 * n, std::move(blk));
}

SetPartition nu_diagram(unsigned n) {
  std::vector<int> blk(2 * n, -1);
  int next = 0;
  for (unsigned i = 1; i < n; ++i) {
    blk[i - 1] = next;
    blk[n + i] = next;  // line {i, n+i+1}
    ++next;
  }
  blk[n - 1] = next++;  // point {n}
  blk[n] = next++;      // point {n+1}
  return SetPartition(2 * n, std::move(blk));
}

std::vector<std::pair<int, int>> standard_arcs(const SetPartition& p) {
  std::vector<std::pair<int, int>> arcs;
  for (const auto& blk : p.blocks())
    for (size_t i = 0; i + 1 < blk.size(); ++i) arcs.emplace_back(blk[i], blk[i + 1]);
  return arcs;
}

ColoredPartition::ColoredPartition(SetPartition p, const PrimeField* F)
    : p_(std::move(p)), F_(F) {
  for (auto arc : standard_arcs(p_)) col_[arc] = 1;
}

ColoredPartition::ColoredPartition(SetPartition p, const PrimeField* F,
                                   std::map<std::pair<int, int>, uint32_t> colors)
    : p_(std::move(p)), F_(F), col_(std::move(colors)) {
  auto arcs = standard_arcs(p_);
  if (arcs.size() != col_.size())
    throw std::invalid_argument("ColoredPartition: colouring does not match standard arcs");
  for (auto arc : arcs) {
    auto it = col_.find(arc);
    if (it == col_.end() || it->second == 0 || it->second >= F_->q())
      throw std::invalid_argument("ColoredPartition: arc labels must be units");
  }
}

uint32_t ColoredPartition::color_of(std::pair<int, int> arc) const {
  auto it = col_.find(arc);
  if (it == col_.end()) throw std::invalid_argument("color_of: not a standard arc");
  return it->second;
}

bool ColoredPartition::operator<(const ColoredPartition& o) const {
  if (p_ != o.p_) return p_ < o.p_;
  return col_ < o.col_;
}

std::string ColoredPartition::to_string() const {
  std::ostringstream os;
  os << p_.to_string();
  for (const auto& [arc, c] : col_)
    os << " " << arc.first << "," << arc.second << "=" << c;
  return os.str();
}

ColoredPartition concatenate_colored(const ColoredPartition& x, const ColoredPartition& y) {
  const SetPartition& I = x.partition();
  const SetPartition& J = y.partition();
  if (!is_partial_brauer(I) || !is_partial_brauer(J))
    throw std::invalid_argument("concatenate_colored: not partial-Brauer");
  if (I.ground_size() != J.ground_size())
    throw std::invalid_argument("concatenate_colored: sizes differ");
  unsigned n = I.ground_size() / 2;
  const PrimeField* F = x.field();

  // Every vertex of the glued three-layer graph has degree <= 2, so the
  // components are simple paths plus cycles living entirely in the middle.
  // Walk each path from an endpoint, multiplying the labels of the arcs it
  // traverses; the path's two outer endpoints become an arc of the result,
  // a lone outer endpoint becomes a point.
  struct Edge {
    int to;
    uint32_t label;
  };
  std::vector<std::vector<Edge>> adj(3 * n);
  for (auto arc : standard_arcs(I)) {
    uint32_t lab = x.color_of(arc);
    int a = upper_vertex(arc.first, n), b = upper_vertex(arc.second, n);
    adj[a].push_back({b, lab});
    adj[b].push_back({a, lab});
  }
  for (auto arc : standard_arcs(J)) {
    uint32_t lab = y.color_of(arc);
    int a = lower_vertex(arc.first, n), b = lower_vertex(arc.second, n);
    adj[a].push_back({b, lab});
    adj[b].push_back({a, lab});
  }

  auto outer_index = [&](int v) {  // glued vertex -> [2n] vertex (1-based), 0 for middle
    if (v < int(n)) return v + 1;
    if (v >= 2 * int(n)) return v - int(n) + 1;
    return 0;
  };

  std::vector<int> blk(2 * n, -1);
  std::map<std::pair<int, int>, uint32_t> colors;
  std::vector<bool> seen(3 * n, false);
  int next_block = 0;
  for (int start = 0; start < 3 * int(n); ++start) {
    if (seen[start] || adj[start].size() > 1) continue;
    seen[start] = true;
    uint32_t lab = 1;
    std::vector<int> outer;
    if (int ov = outer_index(start); ov) outer.push_back(ov);
    int cur = start;
    while (true) {
      int nxt = -1;
      for (const auto& e : adj[cur]) {
        if (!seen[e.to]) {
          nxt = e.to;
          lab = F->mul(lab, e.label);
          break;
        }
      }
      if (nxt == -1) break;
      cur = nxt;
      seen[cur] = true;
      if (int ov = outer_index(cur); ov) outer.push_back(ov);
    }
    if (outer.empty()) continue;  // path fully inside the middle layer
    for (int ov : outer) blk[ov - 1] = next_block;
    if (outer.size() == 2) {
      std::sort(outer.begin(), outer.end());
      colors[{outer[0], outer[1]}] = lab;
    } else if (outer.size() > 2) {
      throw std::logic_error("concatenate_colored: path with >2 outer vertices");
    }
    ++next_block;
  }
  // Unvisited components are middle cycles; every outer vertex must be set.
  for (unsigned v = 0; v < 2 * n; ++v)
    if (blk[v] == -1) throw std::logic_error("concatenate_colored: uncovered vertex");
  SetPartition p(2 * n, std::move(blk));
  return ColoredPartition(std::move(p), F, std::move(colors));
}

ColoredPartition colored_transpose(const ColoredPartition& x) {
  SetPartition pt = diagram_transpose(x.partition());
  unsigned n = pt.ground_size() / 2;
  std::map<std::pair<int, int>, uint32_t> colors;
  auto star = [&](int v) { return v <= int(n) ? v + int(n) : v - int(n); };
  for (auto arc : standard_arcs(pt)) {
    int a = star(arc.first), b = star(arc.second);
    if (a > b) std::swap(a, b);
    colors[arc] = x.color_of({a, b});
  }
  return ColoredPartition(std::move(pt), x.field(), std::move(colors));
}

ColoredPartition colored_identity(unsigned n, const PrimeField* F) {
  return ColoredPartition(identity_diagram(n), F);
}

ColoredPartition a_diagram(unsigned n, int i, const PrimeField* F) {
  if (i < 1 || i > int(n)) throw std::invalid_argument("a_diagram: index out of range");
  std::map<std::pair<int, int>, uint32_t> colors;
  for (unsigned k = 1; k <= n; ++k)
    colors[{int(k), int(n + k)}] = (int(k) == i) ? F->generator() : 1;
  return ColoredPartition(identity_diagram(n), F, std::move(colors));
}

Int bell_number(unsigned n) {
  std::vector<Int> row = {Int(1)};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Int> next = {row.back()};
    for (unsigned j = 0; j < row.size(); ++j) next.push_back(next.back() + row[j]);
    row = std::move(next);
  }
  return row.front();
}

Report verify_partition_monoid(unsigned n) {
  if (n > 5) throw std::domain_error("verify_partition_monoid: scale guard exceeded (n <= 5)");
  Report rep;
  rep.suite = "partitions";
  rep.params = {{"n", std::to_string(n)}};
  auto e = [&](int i, int j) { return SetPartition::pair_block(n, i, j); };
  {
    bool ok = true;
    for (int i = 1; i <= int(n); ++i)
      for (int j = i + 1; j <= int(n); ++j) ok &= join(e(i, j), e(i, j)) == e(i, j);
    rep.add("pair generators idempotent", "e_{i,j}^2 = e_{i,j}", ok);
  }
  {
    bool ok = true;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= int(n); ++i)
      for (int j = i + 1; j <= int(n); ++j) pairs.emplace_back(i, j);
    for (auto [i, j] : pairs)
      for (auto [r, s] : pairs) ok &= join(e(i, j), e(r, s)) == join(e(r, s), e(i, j));
    rep.add("pair generators commute", "e_{i,j} e_{r,s} = e_{r,s} e_{i,j}", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i <= int(n); ++i)
      for (int j = 1; j <= int(n); ++j)
        for (int k = 1; k <= int(n); ++k) {
          if (i == j || i == k || j == k) continue;
          auto a = join(e(std::min(i, j), std::max(i, j)), e(std::min(i, k), std::max(i, k)));
          auto b = join(e(std::min(i, j), std::max(i, j)), e(std::min(j, k), std::max(j, k)));
          auto c = join(e(std::min(i, k), std::max(i, k)), e(std::min(j, k), std::max(j, k)));
          ok &= a == b && b == c;
        }
    rep.add("triangle relations", "e_{i,j} e_{i,k} = e_{i,j} e_{j,k} = e_{i,k} e_{j,k}", ok);
  }
  {
    std::set<SetPartition> closure;
    std::vector<SetPartition> gens = {SetPartition::singletons(n)};
    for (int i = 1; i <= int(n); ++i)
      for (int j = i + 1; j <= int(n); ++j) gens.push_back(e(i, j));
    std::vector<SetPartition> frontier = gens;
    for (const auto& g : gens) closure.insert(g);
    while (!frontier.empty()) {
      std::vector<SetPartition> next;
      for (const auto& x : frontier)
        for (const auto& g : gens) {
          auto y = join(x, g);
          if (closure.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    Int expected = bell_number(n);
    rep.add("join closure is everything", "#closure = Bell(n)",
            Int(static_cast<unsigned long>(closure.size())) == expected,
            std::to_string(closure.size()) + " vs Bell " + expected.get_str());
  }
  {
    bool ok = true;
    for (int i = 1; i <= int(n); ++i)
      for (int j = i + 1; j <= int(n); ++j)
        ok &= join(SetPartition::singletons(n), e(i, j)) == e(i, j);
    rep.add("join unit", "all-singletons is the identity", ok);
  }
  return rep;
}

Report verify_diagram_monoid(unsigned n, const PrimeField* F, uint64_t seed) {
  Report rep;
  rep.suite = "diagrams";
  rep.params = {{"n", std::to_string(n)}, {"q", std::to_string(F->q())}};
  std::mt19937_64 rng(seed);
  auto random_partition = [&](unsigned m) {
    std::vector<int> blk(m);
    for (auto& b : blk) b = int(rng() % (m / 2 + 1));
    return SetPartition(m, std::move(blk));
  };
  {
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
      auto a = random_partition(2 * n), b = random_partition(2 * n), c = random_partition(2 * n);
      ok &= concatenate(concatenate(a, b), c) == concatenate(a, concatenate(b, c));
    }
    rep.add("concatenation associativity (sampled)", "(I * J) * K = I * (J * K)", ok);
  }
  {
    bool ok = true;
    auto id = identity_diagram(n);
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_partition(2 * n);
      ok &= concatenate(id, a) == a && concatenate(a, id) == a;
    }
    rep.add("concatenation unit", "identity = vertical lines", ok);
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 500; ++trial) {
      auto a = random_partition(2 * n), b = random_partition(2 * n);
      ok &= diagram_transpose(concatenate(a, b)) ==
            concatenate(diagram_transpose(b), diagram_transpose(a));
      ok &= diagram_transpose(diagram_transpose(a)) == a;
      ok &= diagram_dom(diagram_transpose(a)) == diagram_codom(a);
    }
    rep.add("transpose anti-automorphism",
            "(I * J)_* = J_* * I_*;  I_** = I;  dom(I_*) = codom(I)", ok);
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_partition(n);
      ok &= restrict_to_prefix(extend(a, 2 * n), n) == a;
    }
    rep.add("restriction round trip", "extend then restrict is the identity", ok);
  }
  {
    // s_i * s_i = identity as diagrams.
    bool ok = true;
    for (int i = 1; i < int(n); ++i)
      ok &= concatenate(s_diagram(n, i), s_diagram(n, i)) == identity_diagram(n);
    rep.add("transposition involution (diagrams)", "s_i * s_i = 1", ok);
  }
  {
    // Colouring laws: trivially coloured product matches the plain product,
    // generator torsion and the group law on identity diagrams.
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
      // Random partial-Brauer diagrams via random framed partial permutations.
      auto rand_pb = [&]() {
        std::vector<uint8_t> img(n, 0);
        std::vector<uint32_t> lab(n, 0);
        std::vector<bool> used(n + 1, false);
        for (unsigned i = 0; i < n; ++i) {
          if (rng() % 2) continue;
          unsigned j = 1 + rng() % n;
          if (used[j]) continue;
          used[j] = true;
          img[i] = uint8_t(j);
          lab[i] = 1 + uint32_t(rng() % (F->q() - 1));
        }
        return FramedPartial(n, F, std::move(img), std::move(lab));
      };
      auto x = rand_pb(), y = rand_pb();
      ok &= concatenate_colored(to_colored(x), to_colored(y)).partition() ==
            concatenate(to_colored(x).partition(), to_colored(y).partition());
      ok &= from_colored(concatenate_colored(to_colored(x), to_colored(y))) == multiply(x, y);
    }
    rep.add("colouring respects concatenation",
            "labels multiply along merged arcs; underlying product unchanged", ok);
  }
  {
    bool ok = true;
    auto id = colored_identity(n, F);
    for (int i = 1; i <= int(n); ++i) {
      auto g = a_diagram(n, i, F);
      auto acc = id;
      for (uint32_t k = 0; k + 1 < F->q(); ++k) acc = concatenate_colored(acc, g);
      ok &= acc == id;
      for (int j = 1; j <= int(n); ++j)
        ok &= concatenate_colored(g, a_diagram(n, j, F)) ==
              concatenate_colored(a_diagram(n, j, F), g);
    }
    rep.add("framed identity group", "(1,g_i)^{q-1} = 1 and generators commute", ok);
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<uint8_t> img(n, 0);
      std::vector<uint32_t> lab(n, 0);
      std::vector<bool> used(n + 1, false);
      for (unsigned i = 0; i < n; ++i) {
        if (rng() % 3 == 0) continue;
        unsigned j = 1 + rng() % n;
        if (used[j]) continue;
        used[j] = true;
        img[i] = uint8_t(j);
        lab[i] = 1 + uint32_t(rng() % (F->q() - 1));
      }
      FramedPartial x(n, F, std::move(img), std::move(lab));
      ok &= from_colored(colored_transpose(to_colored(x))) == transpose(x);
    }
    rep.add("coloured transpose", "g_*(B) = g(B_*)", ok);
  }
  return rep;
}

}  // namespace frook
