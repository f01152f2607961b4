#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "divcodes/gf2.hpp"

namespace divcodes {

/// Largest dimension for which codewords are enumerated exhaustively.
inline constexpr std::size_t kMaxEnumerationDim = 28;

/// A binary linear [n,k] code, stored by its generator in reduced row
/// echelon form so that equal codes compare equal.
class LinearCode {
 public:
  /// Requires a generator of full row rank with k >= 1.
  explicit LinearCode(const BitMatrix& generator);

  /// Accepts a rank-deficient generator and keeps its row space.
  static LinearCode from_spanning_rows(const BitMatrix& rows);

  std::size_t n() const { return gen_.cols(); }
  std::size_t k() const { return gen_.rows(); }
  const BitMatrix& gen() const { return gen_; }
  /// Generator columns as points of F_2^k (k <= 64).
  std::vector<Point> columns() const { return gen_.columns(); }

  bool operator==(const LinearCode& other) const { return gen_ == other.gen_; }

  /// Membership test for a word of length n (given as packed words).
  bool contains(std::span<const std::uint64_t> word) const;

 private:
  struct Trusted {};
  LinearCode(Trusted, BitMatrix rref_gen) : gen_(std::move(rref_gen)) {}
  BitMatrix gen_;
};

/// Counts A_0..A_n of codewords per Hamming weight.
struct WeightDistribution {
  std::vector<std::uint64_t> counts;

  std::size_t n() const { return counts.empty() ? 0 : counts.size() - 1; }
  std::uint64_t total() const;
  /// Nonzero weights that occur, ascending.
  std::vector<std::size_t> support() const;
  /// Smallest nonzero weight with a nonzero count (0 if none).
  std::size_t min_distance() const;
  bool operator==(const WeightDistribution&) const = default;
};

WeightDistribution weight_distribution(const LinearCode& code);
/// Calls fn(weight) for every codeword (including zero) via a Gray-code walk.
void for_each_codeword_weight(const BitMatrix& gen, const std::function<void(std::size_t)>& fn);

bool is_divisible(const WeightDistribution& wd, std::size_t delta);
bool is_divisible(const LinearCode& code, std::size_t delta);
/// Columns nonzero and pairwise distinct.
bool is_projective(const LinearCode& code);
/// d(C^perp) >= 3 decided from the dual weight distribution.
bool dual_distance_at_least_3(const LinearCode& code);

/// The dual [n, n-k] code; throws when k = n.
LinearCode dual(const LinearCode& code);

/// Exact binary MacWilliams transform. Throws PreconditionError naming the
/// failing B_j when the input is not a valid weight distribution of a
/// k-dimensional code.
WeightDistribution macwilliams(const WeightDistribution& wd, std::size_t k);

/// Krawtchouk polynomial K_j(i) for length n.
std::int64_t krawtchouk(std::size_t n, std::size_t j, std::size_t i);

/// All 2^k - 1 subcodes of codimension one, as kernels of the nonzero
/// functionals on the message space (requires k >= 2).
void for_each_codim1_subcode(const LinearCode& code, const std::function<void(const LinearCode&)>& fn);
std::vector<LinearCode> codim1_subcodes(const LinearCode& code);

LinearCode direct_sum(const LinearCode& a, const LinearCode& b);
/// Juxtaposition (G1 | G2) of generators with equal row counts.
LinearCode juxtapose(const BitMatrix& g1, const BitMatrix& g2);
/// Keep codewords vanishing on `coords`, then delete those coordinates.
LinearCode shorten(const LinearCode& code, std::span<const std::size_t> coords);
/// Code spanned by C and one extra word of length n; throws if word is in C.
LinearCode augment(const LinearCode& code, const BitMatrix& word);

/// Extended binary Golay code [24,12,8] (extension of the cyclic code with
/// generator polynomial x^11+x^10+x^6+x^5+x^4+x^2+1).
LinearCode golay24();

}  // namespace divcodes
