#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frook/framed.hpp"
#include "frook/ring.hpp"

namespace frook {

/// Dense n x n matrix over F_q (desk scale, n <= 6).
class RookMatrix {
 public:
  RookMatrix() = default;
  RookMatrix(unsigned n, const PrimeField* F);  // zero matrix
  RookMatrix(unsigned n, const PrimeField* F, std::vector<uint32_t> entries);  // row-major

  static RookMatrix identity(unsigned n, const PrimeField* F);
  static RookMatrix diagonal(const PrimeField* F, const std::vector<uint32_t>& diag);

  unsigned n() const { return n_; }
  const PrimeField* field() const { return F_; }
  uint32_t at(int i, int j) const { return e_[(i - 1) * n_ + (j - 1)]; }  // 1-based
  void set(int i, int j, uint32_t v) { e_[(i - 1) * n_ + (j - 1)] = v; }

  RookMatrix operator*(const RookMatrix& o) const;
  RookMatrix transpose() const;
  bool operator==(const RookMatrix& o) const { return e_ == o.e_; }
  bool operator!=(const RookMatrix& o) const { return !(*this == o); }
  bool operator<(const RookMatrix& o) const { return e_ < o.e_; }
  bool is_diagonal() const;
  bool is_zero() const;

  /// Base-q encoding (row-major); fits 128 bits for n <= 6, q <= 7.
  std::array<uint64_t, 2> encode() const;
  static RookMatrix decode(unsigned n, const PrimeField* F, std::array<uint64_t, 2> code);
  /// Flat base-q index, valid when q^(n^2) fits uint64 (n <= 3 at q <= 7 etc.).
  uint64_t flat_index() const;
  static RookMatrix from_flat_index(unsigned n, const PrimeField* F, uint64_t idx);

  std::string to_text() const;  // "0 0 2; 5 0 0; 0 3 0"

 private:
  unsigned n_ = 0;
  const PrimeField* F_ = nullptr;
  std::vector<uint32_t> e_;
};

/// A matrix of the generalized rook monoid Q (at most one nonzero entry per
/// row and column) with its cached combinatorial data.
struct QData {
  RookMatrix mat;
  RookMatrix support;        // 0/1 pattern
  std::vector<int> img;      // img[i-1] = column of row i's entry, 0 if none
  std::vector<int> I, J;     // row/column supports, ascending
  int r = 0;                 // rank
  long len = 0;              // length of the support pattern
  std::vector<int> hat;      // one-line permutation extending i -> img[i]

  bool operator==(const QData& o) const { return mat == o.mat; }
  bool operator<(const QData& o) const { return mat < o.mat; }
};

struct QReject {
  bool row;  // offending index is a row (else column)
  int index;
};

/// Accepts iff the matrix has at most one nonzero per row and column.
std::optional<QData> q_membership(const RookMatrix& m, QReject* reject = nullptr);
QData q_require(const RookMatrix& m);

/// sigma = t_I * support = support * t_J with t_I, t_J diagonal and 1 off the
/// supports.
struct TDecomposition {
  RookMatrix t_I;
  RookMatrix support;
  RookMatrix t_J;
};
TDecomposition t_decompose(const QData& q);

long length_closed_form(const QData& q);
long inversion_count(const QData& q);

struct InversionSets {
  std::vector<std::pair<int, int>> inv, inv_L, inv_R;
  std::vector<std::pair<int, int>> I00, I10, I11, J00, J01, J11;
};
InversionSets inversion_sets(const QData& q);

FramedPartial to_framed(const QData& q);
QData from_framed(const FramedPartial& x);

// --- named special matrices ---
RookMatrix x_elem(unsigned n, const PrimeField* F, int i, int j, uint32_t r);  // 1 + r E_{i,j}
RookMatrix h_elem(unsigned n, const PrimeField* F, int k, uint32_t r);         // r != 0
RookMatrix h_elem_s(unsigned n, const PrimeField* F, int k, uint32_t r);       // s_k h_k(r) s_k
RookMatrix v_elem(unsigned n, const PrimeField* F, int r);                     // staircase of rank r
RookMatrix nu_matrix(unsigned n, const PrimeField* F);
RookMatrix s_matrix(unsigned n, const PrimeField* F, int k);
RookMatrix a_matrix(unsigned n, const PrimeField* F, int i);  // 1 + (a-1)E_{i,i}
RookMatrix permutation_matrix(const PrimeField* F, const std::vector<int>& one_line);

// --- enumeration ---
std::vector<RookMatrix> enumerate_W(unsigned n, const PrimeField* F);   // permutation matrices
std::vector<RookMatrix> enumerate_T(unsigned n, const PrimeField* F);   // invertible diagonals
std::vector<QData> enumerate_R(unsigned n, const PrimeField* F, std::optional<int> r = {});
std::vector<QData> enumerate_Q(unsigned n, const PrimeField* F, std::optional<int> r = {},
                               bool unsafe_scale = false);

// --- permutation words ---
long perm_inversions(const std::vector<int>& w);
std::vector<int> perm_of_word(unsigned n, const std::vector<int>& letters);  // diagram order
std::vector<int> reduced_word(std::vector<int> one_line);
std::vector<std::vector<int>> all_reduced_words(const std::vector<int>& one_line);
RookMatrix matrix_of_letters(unsigned n, const PrimeField* F, const std::vector<int>& letters);

/// Minimal number of one-sided simple-transposition multiplications taking
/// the support pattern to the staircase of its rank (breadth-first search,
/// used only as the independent check of the closed-form length).
long length_bfs(const QData& sigma);

/// Matrix-side suite: worked factorizations, inversion statistics, the
/// special-matrix identities, commutation relations and length laws.
Report verify_rook_matrices(unsigned n, const PrimeField* F, uint64_t seed,
                            bool unsafe_scale = false);

}  // namespace frook
