#pragma once

#include <cstdint>
#include <vector>

#include "frook/report.hpp"
#include "frook/rook.hpp"

namespace frook {

/// The group of upper unitriangular matrices, enumerated eagerly. Size
/// q^{n(n-1)/2}; guarded to n <= 4, q <= 5 unless unsafe.
class UnipotentGroup {
 public:
  UnipotentGroup(unsigned n, const PrimeField* F, bool unsafe_scale = false);
  const std::vector<RookMatrix>& elements() const { return elems_; }
  size_t size() const { return elems_.size(); }
  unsigned n() const { return n_; }
  const PrimeField* field() const { return F_; }

 private:
  unsigned n_;
  const PrimeField* F_;
  std::vector<RookMatrix> elems_;
};

/// Reduction of an arbitrary matrix to its double-coset representative:
/// rep = u1 * m * u2 with u1, u2 upper unitriangular and rep having at most
/// one nonzero entry per row and column. Sweeps columns left to right; in
/// each column the bottom-most nonzero entry in an unused row becomes the
/// pivot, the pivot row is cleared to the right by column additions and the
/// pivot column is cleared upward by row additions.
struct Reduction {
  QData rep;
  RookMatrix u1, u2;
};
Reduction reduce_to_representative(const RookMatrix& m);

/// |U sigma U| = q^{r(r-1)/2 + l(sigma)}.
Int coset_size(const QData& sigma);

/// Literal element set of U sigma U, sorted, deduplicated. Guarded by the
/// predicted size (default cap 10^6 elements).
std::vector<RookMatrix> coset_elements(const UnipotentGroup& U, const QData& sigma,
                                       uint64_t cap = 1000000);

enum class CosetCase { Stay, Ascend, Descend };

/// The product (U s_k U)(U sigma U) as a union of double cosets, classified
/// two ways (index-pair classification and length trichotomy) which must
/// agree.
struct SimpleCosetProduct {
  CosetCase by_pairs;
  CosetCase by_length;
  std::vector<QData> reps;
};
SimpleCosetProduct simple_coset_product(int k, const QData& sigma);

/// (U t U)(U sigma U) = U t sigma U (left) resp. U sigma t U (right).
QData torus_coset_product(const RookMatrix& t, const QData& sigma, bool left);

struct CosetRecord {
  std::string rep_text;
  int rank;
  long length;
  Int size;
  bool verified;  // literal set size (or full-partition tally) matched
};

/// Per-representative decomposition report plus the global sum check
/// sum |U sigma U| = q^{n^2}, by a full scan of M_n(F_q).
std::vector<CosetRecord> coset_report(unsigned n, const PrimeField* F, bool unsafe_scale = false);

Report verify_coset_decomposition(unsigned n, const PrimeField* F, bool unsafe_scale = false);
Report verify_coset_products(unsigned n, const PrimeField* F, uint64_t seed, size_t samples,
                             bool unsafe_scale = false);

}  // namespace frook
