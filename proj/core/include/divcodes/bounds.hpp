#pragma once

// Length bounds for projective 2^r-divisible binary codes: the four-moment
// linear program, Frobenius numbers, and the additive closure of realizable
// lengths.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace divcodes {

using Rational = boost::multiprecision::cpp_rational;

/// One constraint row: sum coeffs[j] * A_{weights[j]} (relation) rhs.
struct MomentRow {
  enum class Relation { Equal, LessEqual };
  std::string name;
  std::vector<Rational> coeffs;
  Relation relation = Relation::Equal;
  Rational rhs;
};

/// Variables A_w for w in {delta, 2 delta, ...} up to n, constrained by the
/// first four power moments of a projective [n,k] code (dual weights
/// B_1 = B_2 = 0, B_3 >= 0) and A_w >= 0.
struct MomentSystem {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t delta = 0;
  std::vector<std::size_t> weights;
  std::vector<MomentRow> rows;
};

struct MomentOptions {
  /// Adds A_n <= 1.
  bool all_ones_at_most_one = false;
};

MomentSystem moment_system(std::size_t n, std::size_t k, std::size_t delta, const MomentOptions& options = {});

/// Farkas certificate: multipliers y (one per row, y >= 0 on inequality
/// rows) such that sum y_i (row_i lhs) has nonnegative coefficients on every
/// variable while sum y_i rhs_i < 0.
struct Certificate {
  std::vector<Rational> multipliers;
  /// Variables in elimination order.
  std::vector<std::size_t> eliminated;
};

struct LpResult {
  bool feasible = false;
  std::optional<Certificate> certificate;
};

LpResult moment_lp(std::size_t n, std::size_t k, std::size_t delta, const MomentOptions& options = {});
/// Independent check of a certificate against the system.
bool verify_certificate(const MomentSystem& system, const Certificate& cert);

/// True iff moment_lp(n, k, delta) is infeasible for every 1 <= k <= n.
bool exclude_length(std::size_t n, std::size_t delta, const MomentOptions& options = {});

/// (a-1)(b-1)-1 for coprime a, b >= 2.
std::uint64_t frobenius(std::uint64_t a, std::uint64_t b);
/// frobenius(2^(r+1) - 1, 2^(r+1)).
std::uint64_t eq1_bound(std::size_t r);
/// 2^(2r) - 2^(r-1) - 1.
std::uint64_t theorem3_bound(std::size_t r);

struct LengthSet {
  std::size_t r = 0;
  /// Realizable lengths below `threshold`.
  std::set<std::size_t> realizable;
  /// Every n >= threshold is realizable; 0 when no threshold was found.
  std::size_t threshold = 0;
  std::set<std::size_t> excluded;
  std::set<std::size_t> unknown;

  bool is_realizable(std::size_t n) const;
};

/// Additive closure of the seed lengths; every length below the closure
/// threshold that is not realizable goes to `excluded` when exclude_length
/// proves it and to `unknown` otherwise. Throws VerificationError if a
/// realizable length is excluded. Without a threshold lengths up to
/// `horizon` are classified.
LengthSet length_closure(std::size_t r, const std::set<std::size_t>& seeds, std::size_t horizon = 200);

/// (n, k) with k + 1 <= n <= 2^k - 1 and n not in {2^k - 3, 2^k - 2}.
bool pd21_predicate(std::size_t n, std::size_t k);

}  // namespace divcodes
