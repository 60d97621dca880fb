#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frook/partitions.hpp"
#include "frook/report.hpp"
#include "frook/ring.hpp"

namespace frook {

/// A framed partial permutation of [n]: a partial bijection given as the
/// image word (img[i-1] = image of i, 0 when undefined) together with a unit
/// label of F_q on every strand of the domain (lab[i-1] = 0 off the domain).
class FramedPartial {
 public:
  FramedPartial() = default;
  FramedPartial(unsigned n, const PrimeField* F, std::vector<uint8_t> img,
                std::vector<uint32_t> lab);

  static FramedPartial identity(unsigned n, const PrimeField* F);

  unsigned n() const { return n_; }
  const PrimeField* field() const { return F_; }
  int image(int i) const { return img_[i - 1]; }  // 0 when undefined
  uint32_t label(int i) const { return lab_[i - 1]; }
  const std::vector<uint8_t>& image_word() const { return img_; }
  const std::vector<uint32_t>& label_word() const { return lab_; }

  std::vector<int> dom() const;
  std::vector<int> codom() const;
  int rank() const;

  bool operator==(const FramedPartial& o) const { return img_ == o.img_ && lab_ == o.lab_; }
  bool operator!=(const FramedPartial& o) const { return !(*this == o); }
  bool operator<(const FramedPartial& o) const;

 private:
  unsigned n_ = 0;
  const PrimeField* F_ = nullptr;
  std::vector<uint8_t> img_;
  std::vector<uint32_t> lab_;
};

/// Diagram-order product: (x*y)(i) = y(x(i)), labels multiplied along the
/// composed strands.
FramedPartial multiply(const FramedPartial& x, const FramedPartial& y);
FramedPartial transpose(const FramedPartial& x);

enum class GenKind { S, R, A, Nu };
struct Gen {
  GenKind kind;
  int index = 0;  // unused for Nu
};

FramedPartial generator(GenKind kind, unsigned n, const PrimeField* F, int index = 0);
FramedPartial evaluate_word(unsigned n, const PrimeField* F, std::span<const Gen> word);

/// Text form "image-word-label-word", labels printed as residues, e.g.
/// "05130-02530". Supports n <= 9 and q <= 7.
std::string to_text(const FramedPartial& x);
FramedPartial parse_text(unsigned n, const PrimeField* F, const std::string& s);

/// Diagram view (for the definitional product cross-check).
ColoredPartition to_colored(const FramedPartial& x);
FramedPartial from_colored(const ColoredPartition& c);

/// Decomposition data: x = omega_A . f_m . star . nu^{n-r} . omega_bar_B,
/// where A = dom, B = codom, f_m puts generator-power labels a^{m_k} on the
/// first r strands and star is the flattening permutation of the image word.
struct NormalForm {
  std::vector<int> A;         // domain, ascending, size r
  std::vector<uint32_t> m;    // exponents in [0, q-2], size r
  std::vector<int> star;      // one-line permutation of [r]
  int r = 0;
  std::vector<int> B;         // codomain, ascending, size r
};

NormalForm normal_form(const FramedPartial& x);
FramedPartial recompose(unsigned n, const PrimeField* F, const NormalForm& nf);
std::vector<Gen> normal_form_word(unsigned n, const NormalForm& nf);

/// Generator words for the block permutations omega_A and omega_bar_A.
std::vector<Gen> omega_word(const std::vector<int>& A, unsigned n);
std::vector<Gen> omega_bar_word(const std::vector<int>& A, unsigned n);

/// |F_q(I_n^r)| = (q-1)^r C(n,r)^2 r!  and the rank-r count of plain partial
/// permutations (q = 2 recovers it).
Int framed_rank_count(unsigned n, unsigned q, unsigned r);
Int framed_total_count(unsigned n, unsigned q);
Int rook_rank_count(unsigned n, unsigned r);
Int rook_total_count(unsigned n);

/// All elements (optionally of fixed rank), deterministic order: by rank,
/// then image word, then labels. Guarded to n <= 4, q <= 5 unless unsafe.
std::vector<FramedPartial> enumerate_framed(unsigned n, const PrimeField* F,
                                            std::optional<int> r = std::nullopt,
                                            bool unsafe_scale = false);

/// Relation suite for the presentation of F_q(I_n) plus closure cardinality.
Report verify_framed_presentation(unsigned n, const PrimeField* F, bool unsafe_scale = false);

}  // namespace frook
