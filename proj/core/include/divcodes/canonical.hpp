#pragma once

// Canonical forms of binary codes under coordinate permutation.
//
// A code with generator G is identified with the multiset of its columns
// in F_2^k together with the number of zero columns. Two codes are
// equivalent iff some g in GL(k,2) maps one column multiset onto the
// other. The canonical form is the lexicographically least column list
// obtained by expressing all columns in an ordered basis drawn from the
// columns themselves, minimized over the bases admitted by an
// individualization-refinement search tree; automorphisms found at the
// leaves prune equivalent branches.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divcodes/codes.hpp"
#include "divcodes/geometry.hpp"

namespace divcodes {

inline constexpr std::size_t kCanonicalMaxDim = 16;
inline constexpr std::size_t kCanonicalMaxLength = 64;

struct CanonicalForm {
  std::size_t dim = 0;        // k
  std::uint32_t zeros = 0;    // zero columns
  /// (coordinate vector, multiplicity), ascending by vector.
  std::vector<std::pair<Point, std::uint32_t>> points;

  std::size_t length() const;
  bool is_projective() const;
  PointMultiset point_multiset() const;
  /// Generator with the canonical column order (zero columns last).
  BitMatrix generator() const;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalKey {
  std::vector<std::uint8_t> bytes;
  std::optional<std::uint64_t> aut_order;

  std::string hex() const;
  static CanonicalKey from_hex(const std::string& hex);
  bool operator==(const CanonicalKey& o) const { return bytes == o.bytes; }
  auto operator<=>(const CanonicalKey& o) const { return bytes <=> o.bytes; }
};

/// Canonical form of a column multiset; `zeros` counts zero columns. The
/// points need not span their ambient space (they are reduced to the span).
CanonicalForm canonical_form(const PointMultiset& columns, std::uint32_t zeros = 0);
CanonicalForm canonical_form(const LinearCode& code);

CanonicalKey key_of(const CanonicalForm& form);
CanonicalForm form_of(const CanonicalKey& key);

CanonicalKey canonical_key(const LinearCode& code);
CanonicalKey canonical_key(const PointMultiset& columns, std::uint32_t zeros = 0);

/// Counters from the most recent search on this thread (for benchmarks).
struct CanonicalStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t automorphisms = 0;
};
CanonicalStats last_canonical_stats();

}  // namespace divcodes
