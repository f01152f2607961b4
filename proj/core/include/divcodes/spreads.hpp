#pragma once

// Partial r-spreads of F_2^v and the codes spanned by their holes.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "divcodes/codes.hpp"
#include "divcodes/geometry.hpp"

namespace divcodes {

struct PartialSpread {
  std::size_t v = 0;
  std::size_t r = 0;
  std::vector<Subspace> members;
};

/// True iff every member has dimension r and members meet pairwise in {0}.
bool validate(const PartialSpread& spread);

/// Points of PG(v-1, F_2) on no member. Requires a valid spread.
PointMultiset holes(const PartialSpread& spread);

/// Code whose columns are the holes. Throws on an empty hole set.
LinearCode hole_code(const PartialSpread& spread);

struct Prop1Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Prop1Report {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Prop1Assertion> assertions;
  bool passed() const;
};

/// Checks that the hole code is projective, 2^(r-1)-divisible, of length
/// 2^v - 1 - |S|(2^r - 1) and dimension at most v.
Prop1Report prop1_check(const PartialSpread& spread);

/// 2^(v-r) + 2^(v-2r) + ... + 2^(r+1) + 1 for v >= 2r+1, v = 1 mod r.
std::uint64_t max_size(std::size_t v, std::size_t r);

/// Adds random r-subspaces disjoint from all members until `attempts`
/// consecutive draws fail.
void greedy_extend(PartialSpread& spread, std::mt19937_64& rng, std::size_t attempts = 200);

}  // namespace divcodes
