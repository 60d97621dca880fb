#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "frook/cyclo.hpp"
#include "frook/linalg.hpp"
#include "frook/report.hpp"

namespace frook {

/// Basis words of U^{\otimes n} where U has basis {v_0} u {v_i^s : i in [n],
/// s in [d]}. A letter is encoded as 0 for v_0 and 1 + (i-1)d + (s-1) for
/// v_i^s; a word is the base-(1+nd) packing of its letters.
class TensorCtx {
 public:
  TensorCtx(unsigned n, unsigned d);

  unsigned n() const { return n_; }
  unsigned d() const { return d_; }
  const CycloCtx* cyclo() const { return &cyclo_; }
  unsigned letter_count() const { return 1 + n_ * d_; }

  uint32_t letter(int lower, int upper) const;  // v_lower^upper
  bool is_scalar_letter(uint32_t l) const { return l == 0; }
  int lower_index(uint32_t l) const { return int((l - 1) / d_) + 1; }
  int upper_index(uint32_t l) const { return int((l - 1) % d_) + 1; }

  uint64_t pack(const std::vector<uint32_t>& letters) const;
  std::vector<uint32_t> unpack(uint64_t word) const;
  std::vector<uint64_t> all_words() const;
  std::string word_to_string(uint64_t word) const;

  std::vector<int> support(uint64_t word) const;  // positions with non-scalar letters

 private:
  unsigned n_, d_;
  CycloCtx cyclo_;
};

/// Finitely supported vector over the word basis with Laurent coefficients.
class TensorVec {
 public:
  TensorVec() = default;
  explicit TensorVec(const TensorCtx* ctx) : ctx_(ctx) {}
  static TensorVec basis(const TensorCtx* ctx, uint64_t word);

  const TensorCtx* ctx() const { return ctx_; }
  const std::map<uint64_t, Laurent>& terms() const { return c_; }
  void add_term(uint64_t word, const Laurent& coeff);
  bool is_zero() const { return c_.empty(); }

  TensorVec operator+(const TensorVec& o) const;
  TensorVec operator-(const TensorVec& o) const;
  TensorVec scaled(const Laurent& by) const;
  bool operator==(const TensorVec& o) const { return c_ == o.c_; }
  bool operator!=(const TensorVec& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  const TensorCtx* ctx_ = nullptr;
  std::map<uint64_t, Laurent> c_;
};

// Elementary operator applications (positions are 1-based).
TensorVec apply_F(const TensorCtx& ctx, int i, const TensorVec& x, long power = 1);
TensorVec apply_T(const TensorCtx& ctx, int i, const TensorVec& x);
TensorVec apply_E(const TensorCtx& ctx, int i, const TensorVec& x);
TensorVec apply_N(const TensorCtx& ctx, const TensorVec& x);
TensorVec apply_T_inverse(const TensorCtx& ctx, int i, const TensorVec& x);
/// The cyclic average (1/d) sum_k F_i^k F_{i+1}^{-k}; agrees with apply_E on
/// words whose letters at i, i+1 are both non-scalar, but keeps words that
/// pair the scalar letter with an eigenvalue-one letter, which apply_E kills.
TensorVec apply_cyclic_average(const TensorCtx& ctx, int i, const TensorVec& x);

/// A composable operator word: steps are read right to left when applied, so
/// Op{A, B} acts as A(B(x)).
struct OpStep {
  enum class Kind { F, T, Tinv, E, N, Scalar } kind;
  int index = 0;   // F/T/Tinv/E position
  long power = 1;  // F exponent
  Laurent scalar;  // Scalar factor
};
struct Op {
  std::vector<OpStep> steps;
  Op then(const Op& right) const;  // concatenation: this applied after right
  static Op F(int i, long power = 1);
  static Op T(int i);
  static Op Tinv(int i);
  static Op E(int i);
  static Op N(int count = 1);
  static Op scalar(Laurent s);
  static Op id() { return Op{}; }
};
TensorVec apply_op(const TensorCtx& ctx, const Op& op, const TensorVec& x);
TensorVec apply_op(const TensorCtx& ctx, const Op& op, uint64_t word);

/// Operator equality on every basis word.
bool ops_equal(const TensorCtx& ctx, const Op& a, const Op& b);

/// T_omega for a one-line permutation through a fixed (lexicographically
/// minimal) reduced expression.
Op op_T_word(const std::vector<int>& letters);
Op op_T_perm(const std::vector<int>& one_line);
Op op_T_block(int k, int j);                       // T_{k,j} = T_{k-1} ... T_j
Op op_T_A(const std::vector<int>& A, unsigned n);  // ascending blocks
Op op_T_A_bar(const std::vector<int>& B, unsigned n);

struct CnIndex {
  int r = 0;
  std::vector<int> A, B;
  std::vector<int> m;        // exponents in [0, d-1]
  std::vector<int> omega;    // one-line in S_r
};
std::vector<CnIndex> cn_indices(unsigned n, unsigned d);
Op cn_op(const TensorCtx& ctx, const CnIndex& idx);
Int cn_rank_count(unsigned n, unsigned d, unsigned r);
Int cn_total_count(unsigned n, unsigned d);

/// Rows of the operator-coordinate matrix: one sparse row per spanning-set
/// element, columns indexed by (input word, output word) pairs.
std::vector<std::vector<std::pair<uint64_t, Laurent>>> cn_matrix(const TensorCtx& ctx,
                                                                 bool warn_small_d = true);

struct RankCertificate {
  unsigned n, d;
  Int set_size;
  std::vector<std::pair<Rat, int>> point_ranks;  // (specialization t0, rank)
  bool full_rank;
};
RankCertificate certify_cn_rank(const TensorCtx& ctx,
                                const std::vector<Rat>& points = {Rat(7, 3), Rat(13, 5)});

Report verify_tensor_relations(unsigned n, unsigned d);
Report verify_alternative_presentations(unsigned n, unsigned d);
Report verify_cn_basis(unsigned n, unsigned d, uint64_t seed, size_t closure_samples);

}  // namespace frook
