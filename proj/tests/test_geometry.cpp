#include <algorithm>
#include <random>

#include "divcodes/error.hpp"
#include "divcodes/geometry.hpp"
#include "doctest.h"

using namespace divcodes;

namespace {

PointMultiset all_points(std::size_t k) {
  PointMultiset s(k);
  for (Point p = 1; p < (Point{1} << k); ++p) s.add(p);
  return s;
}

PointMultiset projective_basis(std::size_t k) {
  PointMultiset s(k);
  for (std::size_t i = 0; i < k; ++i) s.add(Point{1} << i);
  s.add((Point{1} << k) - 1);
  return s;
}

PointMultiset affine_solid() {
  PointMultiset s(4);
  for (Point p = 8; p < 16; ++p) s.add(p);
  return s;
}

// Hyperplane multiplicities counted point by point.
std::size_t direct_weight(const PointMultiset& k, Point a) {
  std::size_t w = 0;
  for (const auto& [p, m] : k.entries()) {
    if (dot(a, p)) w += m;
  }
  return w;
}

bool direct_divisible(const PointMultiset& k, std::size_t delta) {
  for (Point a = 1; a < (Point{1} << k.ambient()); ++a) {
    if (direct_weight(k, a) % delta != 0) return false;
  }
  return true;
}

std::size_t codeword_weight(const LinearCode& c, Point a) {
  std::size_t w = 0;
  for (auto col : c.columns()) w += static_cast<std::size_t>(dot(a, col));
  return w;
}

}  // namespace

TEST_CASE("code and point multiset dictionary") {
  auto simplex = all_points(3);
  CHECK(simplex.size() == 7);
  auto code = points_to_code(simplex);
  CHECK(code.n() == 7);
  CHECK(code.k() == 3);
  CHECK(code_to_points(code).is_set());

  PointMultiset rep(1);
  rep.add(1, 4);
  CHECK(points_to_code(rep).n() == 4);
  CHECK(code_to_points(points_to_code(rep)).multiplicity(1) == 4);

  CHECK_THROWS(PointMultiset(3).add(0));
  CHECK_THROWS(PointMultiset(3).add(8));
  CHECK_THROWS(points_to_code(PointMultiset(3)));
}

TEST_CASE("round trip on random projective codes") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Point> cols;
    while (cols.size() < 12) {
      Point p = rng() & 63U;
      if (p != 0 && std::find(cols.begin(), cols.end(), p) == cols.end()) cols.push_back(p);
    }
    if (rank_of(cols) < 6) continue;
    LinearCode c(BitMatrix::from_columns(cols, 6));
    auto k = code_to_points(c);
    CHECK(k.size() == 12);
    CHECK(k.is_set());
    auto sorted = c.columns();
    std::sort(sorted.begin(), sorted.end());
    CHECK(points_to_code(k) == LinearCode(BitMatrix::from_columns(sorted, 6)));
  }
}

TEST_CASE("hyperplane weights agree with codeword weights") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    PointMultiset k(5);
    for (int i = 0; i < 14; ++i) k.add(1 + rng() % 31, 1);
    if (!k.is_spanning()) continue;
    auto code = points_to_code(k);
    auto weights = hyperplane_weights(k);
    for (Point a = 1; a < 32; ++a) {
      CHECK(hyperplane_weight(k, a) == direct_weight(k, a));
      CHECK(weights[a] == direct_weight(k, a));
    }
    // Code coordinates are the points themselves in the code's basis; weights
    // agree as multisets.
    std::vector<std::size_t> from_code;
    std::vector<std::size_t> from_points(weights.begin() + 1, weights.end());
    for (Point a = 1; a < 32; ++a) from_code.push_back(codeword_weight(code, a));
    std::sort(from_code.begin(), from_code.end());
    std::sort(from_points.begin(), from_points.end());
    CHECK(from_code == from_points);
    for (std::size_t delta : {2, 4}) CHECK(is_divisible_pointset(k, delta) == is_divisible(code, delta));
  }
}

TEST_CASE("divisibility examples") {
  auto simplex = all_points(3);
  for (Point a = 1; a < 8; ++a) CHECK(hyperplane_weight(simplex, a) == 4);
  CHECK(is_divisible_pointset(simplex, 4));
  CHECK(is_divisible_pointset(affine_solid(), 4));
  CHECK(max_power_of_two_divisor(affine_solid()) == 4);
  PointMultiset single(3);
  single.add(1);
  CHECK(hyperplane_weight(single, 2) == 0);
}

TEST_CASE("complement") {
  CHECK(complement(all_points(4)).empty());
  PointMultiset plane(4);
  for (Point p = 1; p < 8; ++p) plane.add(p);
  auto c = complement(plane);
  CHECK(c == affine_solid());
  CHECK(is_divisible_pointset(c, 2));
  CHECK(complement(c) == plane);
  PointMultiset multi(3);
  multi.add(1, 2);
  CHECK_THROWS(complement(multi));
}

TEST_CASE("tangent switching") {
  auto basis = projective_basis(4);
  const std::vector<Point> line_gens{0b0001, 0b0110};
  Subspace line(4, line_gens);
  auto switched = tangent_switch(basis, line);
  CHECK(switched.size() == 6);
  CHECK(is_divisible_pointset(switched, 2));
  CHECK(switched.is_spanning());
  CHECK_FALSE(switched.contains(0b0001));

  PointMultiset plane(4);
  for (Point p = 1; p < 8; ++p) plane.add(p);
  auto no_tangent = complement(plane);
  CHECK(tangent_lines(no_tangent).empty());
  const std::vector<Point> other{0b1000, 0b1001};
  CHECK_THROWS(tangent_switch(no_tangent, Subspace(4, other)));
  CHECK_FALSE(tangent_lines(basis).empty());
}

TEST_CASE("sunflower switching reproduces the 16- and 19-point doubly-even sets") {
  PointMultiset solid(8);
  for (Point p = 1; p < 16; ++p) solid.add(p);
  CHECK(is_divisible_pointset(solid, 8));
  // Line spread of the solid: lines {a, b, a+b}.
  const std::vector<std::pair<Point, Point>> spread{{1, 2}, {4, 8}, {5, 10}, {6, 11}, {7, 9}};
  auto k = solid;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::vector<Point> t_gens{spread[i].first, spread[i].second};
    const std::vector<Point> s_gens{spread[i].first, spread[i].second, Point{1} << (4 + i)};
    k = sunflower_switch(k, Subspace(8, t_gens), Subspace(8, s_gens));
    CHECK(k.size() == 16 + i);
    CHECK(is_divisible_pointset(k, 4));
    CHECK(direct_divisible(k, 4));
  }
  CHECK(k.size() == 19);
  CHECK(k.is_spanning());

  const std::vector<Point> t_gens{1, 2};
  const std::vector<Point> bad{1, 2, 4};  // third point inside K
  CHECK_THROWS(sunflower_switch(solid, Subspace(8, t_gens), Subspace(8, bad)));
}

TEST_CASE("cones") {
  auto b6 = projective_basis(6);
  auto c15 = cone(b6, 0, true);
  CHECK(c15.points.size() == 15);
  CHECK(c15.points.ambient() == 7);
  CHECK(c15.divisor % 4 == 0);
  CHECK(c15.points.is_set());
  auto c16 = cone(projective_basis(7), 0, false);
  CHECK(c16.points.size() == 16);
  CHECK(c16.divisor % 4 == 0);
  CHECK_THROWS_AS(cone_checked(projective_basis(7), 0, true, 4), VerificationError);

  for (std::size_t s = 0; s <= 2; ++s) {
    for (bool vertex : {false, true}) {
      auto r = cone(b6, s, vertex);
      const std::size_t expected = (std::size_t{1} << (s + 1)) * 7 + (vertex ? (std::size_t{1} << (s + 1)) - 1 : 0);
      CHECK(r.points.size() == expected);
      // Direct enumeration: points of <V, Q> outside V, plus V.
      PointMultiset direct(6 + s + 1);
      for (const auto& [q, m] : b6.entries()) {
        std::vector<Point> gens{q};
        for (std::size_t i = 0; i <= s; ++i) gens.push_back(Point{1} << (6 + i));
        for (auto p : span_points(gens)) {
          if (p & 63U) direct.add(p, m);
        }
      }
      if (vertex) {
        for (Point v = 1; v < (Point{1} << (s + 1)); ++v) direct.add(v << 6);
      }
      CHECK(direct == r.points);
      CHECK(r.divisor == max_power_of_two_divisor(direct));
    }
  }
}

TEST_CASE("empty subspaces and disjoint embeddings") {
  auto fano = all_points(3);
  CHECK(empty_subspace_max_dim(fano) == 0);
  CHECK(empty_subspace_max_dim(affine_solid()) == 3);
  auto basis = empty_subspace_basis(affine_solid());
  CHECK(basis.size() == 3);
  for (auto p : span_points(basis)) CHECK_FALSE(affine_solid().contains(p));

  auto range = disjoint_embedding_range(fano, affine_solid());
  CHECK(range.lo == 4);
  CHECK(range.hi == 7);
  for (std::size_t k = 4; k <= 7; ++k) {
    auto u = disjoint_embed(fano, affine_solid(), k);
    CHECK(u.ambient() == k);
    CHECK(u.size() == 15);
    CHECK(u.is_set());
    CHECK(u.is_spanning());
    CHECK(is_divisible_pointset(u, 4));
  }
  CHECK_THROWS(disjoint_embed(fano, affine_solid(), 3));
  CHECK_THROWS(disjoint_embed(fano, affine_solid(), 8));

  auto two_planes = disjoint_embed(fano, fano, 6);
  CHECK(two_planes.size() == 14);
  CHECK(two_planes.is_set());
  CHECK(is_divisible_pointset(two_planes, 4));
}
