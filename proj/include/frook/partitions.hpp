#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frook/report.hpp"
#include "frook/ring.hpp"

namespace frook {

/// A set partition of [m] (vertices 1..m) in canonical form: blocks are
/// numbered 0,1,2,... in order of their minimum element. Equality of
/// canonical forms is equality of partitions.
class SetPartition {
 public:
  SetPartition() = default;
  /// From a block-id assignment per vertex (any labelling; renumbered).
  SetPartition(unsigned m, std::vector<int> block_of);

  static SetPartition singletons(unsigned m);
  /// e_{i,j}: the partition of [m] whose only non-singleton block is {i,j}.
  static SetPartition pair_block(unsigned m, int i, int j);
  static SetPartition from_blocks(unsigned m, const std::vector<std::vector<int>>& blocks);

  unsigned ground_size() const { return m_; }
  int block_of(int v) const { return block_[v - 1]; }
  int block_count() const { return nblocks_; }
  bool same_block(int v, int w) const { return block_of(v) == block_of(w); }
  std::vector<std::vector<int>> blocks() const;  // each ascending, ordered by min

  bool operator==(const SetPartition& o) const { return m_ == o.m_ && block_ == o.block_; }
  bool operator!=(const SetPartition& o) const { return !(*this == o); }
  bool operator<(const SetPartition& o) const;

  std::string to_string() const;  // "{1,8|2,5,9|3}"

 private:
  void canonicalize();
  unsigned m_ = 0;
  std::vector<int> block_;
  int nblocks_ = 0;
};

/// Finest partition coarser than both. Ground sets must agree (callers extend
/// by singletons first if needed).
SetPartition join(const SetPartition& a, const SetPartition& b);

/// View a partition of [m] as a partition of [M], M >= m, adjoining singletons.
SetPartition extend(const SetPartition& p, unsigned M);
/// Restriction to [m]: nonempty intersections of blocks with [m].
SetPartition restrict_to_prefix(const SetPartition& p, unsigned m);

// --- diagram (two-row) view: partitions of [2n], top row 1..n, bottom n+1..2n ---

/// Middle-row concatenation product on partitions of [2n].
SetPartition concatenate(const SetPartition& a, const SetPartition& b);
SetPartition diagram_transpose(const SetPartition& p);
std::vector<int> diagram_dom(const SetPartition& p);
std::vector<int> diagram_codom(const SetPartition& p);
bool is_partial_brauer(const SetPartition& p);  // all blocks are points or arcs

SetPartition identity_diagram(unsigned n);
SetPartition s_diagram(unsigned n, int i);
SetPartition r_diagram(unsigned n, int i);
SetPartition nu_diagram(unsigned n);

/// Standard arcs: consecutive pairs within each block (blocks sorted
/// ascending, canonical order). Singletons contribute none.
std::vector<std::pair<int, int>> standard_arcs(const SetPartition& p);

/// A coloured set partition: every standard arc carries a unit of F_q.
class ColoredPartition {
 public:
  ColoredPartition() = default;
  ColoredPartition(SetPartition p, const PrimeField* F);  // trivial colouring
  ColoredPartition(SetPartition p, const PrimeField* F,
                   std::map<std::pair<int, int>, uint32_t> colors);

  const SetPartition& partition() const { return p_; }
  const PrimeField* field() const { return F_; }
  const std::map<std::pair<int, int>, uint32_t>& colors() const { return col_; }
  uint32_t color_of(std::pair<int, int> arc) const;

  bool operator==(const ColoredPartition& o) const { return p_ == o.p_ && col_ == o.col_; }
  bool operator!=(const ColoredPartition& o) const { return !(*this == o); }
  bool operator<(const ColoredPartition& o) const;

  std::string to_string() const;  // block list plus "arc=label" pairs

 private:
  SetPartition p_;
  const PrimeField* F_ = nullptr;
  std::map<std::pair<int, int>, uint32_t> col_;
};

/// Concatenation of coloured diagrams. Both underlying partitions must lie in
/// the partial Brauer monoid; each result arc is labelled by the product of
/// the labels of the arcs merged into it.
ColoredPartition concatenate_colored(const ColoredPartition& x, const ColoredPartition& y);
ColoredPartition colored_transpose(const ColoredPartition& x);
ColoredPartition colored_identity(unsigned n, const PrimeField* F);
/// The generator with label `a` (the field generator) on strand i of the identity.
ColoredPartition a_diagram(unsigned n, int i, const PrimeField* F);

Int bell_number(unsigned n);

/// Relations of the join monoid of set partitions, plus generated-closure
/// cardinality against the Bell number. Guarded to n <= 5.
Report verify_partition_monoid(unsigned n);

/// Product, transpose and colouring laws of the diagram monoid at small n.
Report verify_diagram_monoid(unsigned n, const PrimeField* F, uint64_t seed);

}  // namespace frook
