#pragma once

// Point multisets in PG(k-1, F_2) and the geometric constructions that
// preserve divisibility: complements, tangent and sunflower switching,
// cones, and disjoint embeddings.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "divcodes/codes.hpp"
#include "divcodes/gf2.hpp"

namespace divcodes {

/// Largest ambient dimension for which all hyperplanes are scanned.
inline constexpr std::size_t kMaxScanAmbient = 24;

/// Multiset of nonzero vectors of F_2^k, k <= 64.
class PointMultiset {
 public:
  explicit PointMultiset(std::size_t ambient = 0);
  static PointMultiset from_points(std::size_t ambient, std::span<const Point> points);

  void add(Point p, std::uint32_t count = 1);
  void add(const PointMultiset& other);
  /// Removes `count` copies of p; throws if fewer are present.
  void remove(Point p, std::uint32_t count = 1);

  std::size_t ambient() const { return ambient_; }
  /// Total number of points counted with multiplicity.
  std::size_t size() const { return size_; }
  std::size_t support_size() const { return mult_.size(); }
  bool empty() const { return size_ == 0; }
  std::uint32_t multiplicity(Point p) const;
  bool contains(Point p) const { return multiplicity(p) > 0; }
  /// All multiplicities equal to one.
  bool is_set() const;
  std::size_t span_dim() const;
  bool is_spanning() const { return span_dim() == ambient_; }

  const std::map<Point, std::uint32_t>& entries() const { return mult_; }
  /// Points with repetition, ascending.
  std::vector<Point> points() const;

  /// Same points in a larger ambient space.
  PointMultiset embed(std::size_t new_ambient) const;
  bool operator==(const PointMultiset&) const = default;

 private:
  std::size_t ambient_;
  std::size_t size_ = 0;
  std::map<Point, std::uint32_t> mult_;
};

/// A linear subspace of F_2^k given by an echelon basis.
class Subspace {
 public:
  Subspace(std::size_t ambient, std::span<const Point> generators);
  static Subspace from_basis(const BitMatrix& basis);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return span_.dim(); }
  const std::vector<Point>& basis() const { return span_.basis(); }
  BitMatrix basis_matrix() const;
  bool contains(Point v) const { return span_.contains(v); }
  /// The 2^dim - 1 nonzero vectors, ascending.
  std::vector<Point> points() const;
  bool meets_trivially(const Subspace& other) const;
  bool contains(const Subspace& other) const;

 private:
  std::size_t ambient_;
  SpanBuilder span_;
};

PointMultiset code_to_points(const LinearCode& code);
/// Code generated by the points as columns; when K does not span its
/// ambient space the code has dimension span_dim(K).
LinearCode points_to_code(const PointMultiset& k);

/// |K| minus the multiplicity of the hyperplane a^perp.
std::size_t hyperplane_weight(const PointMultiset& k, Point a);
/// Weights for all functionals a in 0..2^ambient-1.
std::vector<std::size_t> hyperplane_weights(const PointMultiset& k);
bool is_divisible_pointset(const PointMultiset& k, std::size_t delta);
/// Largest power of two dividing every hyperplane weight (0 for empty K).
std::size_t max_power_of_two_divisor(const PointMultiset& k);

/// Points of PG(ambient-1, 2) not in the set K.
PointMultiset complement(const PointMultiset& k);

/// Replaces the unique point P of K on the line L by the other two points of L.
PointMultiset tangent_switch(const PointMultiset& k, const Subspace& line);
/// Lines meeting the set K in exactly one point.
std::vector<Subspace> tangent_lines(const PointMultiset& k);

/// (K \ T) + (S2 \ T) for T inside K and S2 a one-dimension-larger
/// subspace through T whose remaining points avoid K.
PointMultiset sunflower_switch(const PointMultiset& k, const Subspace& t, const Subspace& s2);

struct ConeResult {
  PointMultiset points;
  /// Largest power of two dividing all weights of the result.
  std::size_t divisor = 0;
};

/// Cone over `base` (in the hyperplane spanned by the first ambient(base)
/// coordinates) with a vertex flat of projective dimension s spanned by the
/// next s+1 coordinates. Every base point Q contributes the 2^(s+1) points of
/// <V,Q> \ V; the vertex points are added when include_vertex is set.
ConeResult cone(const PointMultiset& base, std::size_t s, bool include_vertex);
/// As cone(), but throws VerificationError unless the result is delta-divisible.
PointMultiset cone_checked(const PointMultiset& base, std::size_t s, bool include_vertex, std::size_t delta);

/// Largest dimension of a subspace containing no point of K.
std::size_t empty_subspace_max_dim(const PointMultiset& k);
/// A basis of a subspace of that dimension avoiding K.
std::vector<Point> empty_subspace_basis(const PointMultiset& k);

/// Realizable ambient dimensions [lo, hi] of a disjoint embedding.
struct DimensionRange {
  std::size_t lo;
  std::size_t hi;
};
DimensionRange disjoint_embedding_range(const PointMultiset& k1, const PointMultiset& k2);
/// Disjoint union of copies of K1 and K2 (both spanning) inside F_2^k.
PointMultiset disjoint_embed(const PointMultiset& k1, const PointMultiset& k2, std::size_t k);

/// Image of K under the linear map x -> M x (M is target x ambient(K)).
PointMultiset apply_linear(const PointMultiset& k, const BitMatrix& m);

}  // namespace divcodes
