#pragma once

// Named constructions of projective divisible binary codes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "divcodes/codes.hpp"
#include "divcodes/geometry.hpp"
#include "divcodes/gf2.hpp"
#include "divcodes/spreads.hpp"

namespace divcodes {

/// [2^dim - 1, dim] simplex code.
LinearCode simplex(std::size_t dim);
/// Affine dim-flat: the 2^dim points of F_2^(dim+1) with last coordinate 1.
PointMultiset affine_flat(std::size_t dim);
/// [n, n-1] even-weight code.
LinearCode even_weight(std::size_t n);
/// e_1, ..., e_k and their sum.
PointMultiset projective_basis(std::size_t k);

enum class Family {
  ProjectiveFlat,    // n = 2^(r+1) - 1
  AffineFlat,        // n = 2^(r+1)
  TwoFlats,          // n = 2^(r+2) - 2
  FlatPlusAffine,    // n = 2^(r+2) - 1, parameter s in 0..r+1
  SevenFlatsVertex,  // n = 2^(r+2) - 1
  TwoAffineFlats,    // n = 2^(r+2), parameters k and variant
  EightFlatsVertex,  // n = 2^(r+2)
  LineBasisVertex,   // n = 2^(r+2)
  ThreeFlats,        // n = 3(2^(r+1) - 1), parameter k
};

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);
std::vector<Family> all_families();

struct CatalogEntry {
  Family family = Family::ProjectiveFlat;
  std::size_t r = 1;
  std::size_t s = 0;
  std::size_t k = 0;
  std::size_t variant = 0;
  std::size_t expected_n = 0;
  std::size_t expected_k = 0;
  std::size_t expected_delta = 0;
};

/// Entry with expected parameters filled in; throws on parameters outside
/// the family's range. `k` is used by TwoAffineFlats and ThreeFlats, `s` by
/// FlatPlusAffine, `variant` (0 or 1) by TwoAffineFlats.
CatalogEntry make_entry(Family f, std::size_t r, std::size_t s = 0, std::size_t k = 0, std::size_t variant = 0);
/// Every parameter choice of every family for this r.
std::vector<CatalogEntry> catalog_entries(std::size_t r);
/// Instantiates the entry and checks length, span dimension and divisibility.
PointMultiset family(const CatalogEntry& entry);

/// Projective basis of PG(7,2) plus the third points of the 36 lines
/// through two of its points: a [45,8] code with weights 16 and 24.
PointMultiset two_weight_45();

/// The 19-point sets built from a line spread of a solid by switching four
/// lines into planes; variant 1, 2, 3 places the planes modulo the solid as
/// a planar quadrangle, a line plus a point, or four independent points.
PointMultiset example19(std::size_t variant);

/// Generator matrices printed for the cone over a projective basis of
/// PG(k-1,2), k in {6, 7}.
LinearCode example2_code(std::size_t k);

/// Binary code whose columns are the F_2-expansions of all nonzero multiples
/// of the outer columns (vectors over GF(2^e)). Verifies that the result is
/// 2^(e-1) d-divisible where d is the largest power of two dividing all
/// outer weights.
LinearCode concatenate(const std::vector<std::vector<std::uint32_t>>& outer_columns, const FieldRep& field);
/// Points of the elliptic quadric x0 x1 + x2^2 + x2 x3 + w x3^2 in PG(3,4).
std::vector<std::vector<std::uint32_t>> ovoid_points();
/// The [51,8] projective 8-divisible code.
LinearCode ovoid_concat();

/// Points of PG(1, 2^e) and of a hyperoval (conic plus nucleus) in PG(2, 8).
std::vector<std::vector<std::uint32_t>> projective_line_points(const FieldRep& field);
std::vector<std::vector<std::uint32_t>> hyperoval_points();

/// Concatenation of the outer points followed by switching the subspaces of
/// the first `switches` outer points into affine subspaces through new
/// coordinates; each switch adds one point and keeps 2^e-divisibility.
PointMultiset switched_concatenation(const std::vector<std::vector<std::uint32_t>>& outer_columns,
                                     const FieldRep& field, std::size_t switches);

struct LengthWitness {
  std::size_t n = 0;
  std::string construction;
};

/// Verified constructions of projective 2^r-divisible codes, r in 1..3.
std::vector<LengthWitness> length_witnesses(std::size_t r);
/// Realizable lengths taken from the literature without a construction here.
std::set<std::size_t> reported_lengths(std::size_t r);

/// Partial r-spread of F_2^v of size max_size(v, r).
PartialSpread corollary2_spread(std::size_t v, std::size_t r);

}  // namespace divcodes
