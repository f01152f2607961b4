#include <random>
#include <set>

#include "divcodes/error.hpp"
#include "divcodes/gf2.hpp"
#include "doctest.h"

using namespace divcodes;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (rng() & 1U) m.set(i, j);
    }
  }
  return m;
}

// Rank by counting the distinct row combinations.
std::size_t brute_rank(const BitMatrix& m) {
  std::set<std::vector<std::uint64_t>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.rows()); ++mask) {
    std::vector<std::uint64_t> acc(m.words_per_row(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if ((mask >> i) & 1U) {
        auto r = m.row(i);
        for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= r[w];
      }
    }
    seen.insert(acc);
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < seen.size()) ++r;
  return r;
}

}  // namespace

TEST_CASE("from_strings round trip and transpose") {
  auto m = BitMatrix::from_strings({"1010", "0111"});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 4);
  CHECK(m.get(1, 3));
  CHECK_FALSE(m.get(0, 1));
  CHECK(m.to_strings() == std::vector<std::string>{"1010", "0111"});
  CHECK(m.transpose().transpose() == m);
  CHECK(m.column(2) == 0b11);
  CHECK_THROWS_AS(BitMatrix::from_strings({"10", "1"}), PreconditionError);
}

TEST_CASE("rank agrees with brute force on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 8;
    const std::size_t c = 1 + rng() % 90;
    auto m = random_matrix(rng, r, c);
    CHECK(rank(m) == brute_rank(m));
  }
}

TEST_CASE("rref is reduced with unit pivot columns") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = random_matrix(rng, 6, 70);
    auto r = rref(m);
    REQUIRE(r.pivots.size() == r.rank);
    for (std::size_t i = 0; i < r.rank; ++i) {
      for (std::size_t t = 0; t < r.reduced.rows(); ++t) {
        CHECK(r.reduced.get(t, r.pivots[i]) == (t == i));
      }
    }
    for (std::size_t i = r.rank; i < r.reduced.rows(); ++i) CHECK(r.reduced.row_is_zero(i));
    CHECK(rank(m.stack(r.reduced)) == r.rank);
  }
}

TEST_CASE("kernel satisfies rank-nullity and annihilates") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 10;
    const std::size_t c = 1 + rng() % 70;
    auto m = random_matrix(rng, r, c);
    auto ker = kernel_basis(m);
    CHECK(ker.rows() + rank(m) == c);
    if (ker.rows() > 0) {
      CHECK(rank(ker) == ker.rows());
      auto prod = m * ker.transpose();
      for (std::size_t i = 0; i < prod.rows(); ++i) CHECK(prod.row_is_zero(i));
    }
  }
}

TEST_CASE("inverse of random invertible matrices") {
  std::mt19937_64 rng(5);
  int found = 0;
  while (found < 30) {
    auto m = random_matrix(rng, 9, 9);
    if (rank(m) < 9) {
      CHECK_THROWS_AS(inverse(m), PreconditionError);
      continue;
    }
    ++found;
    CHECK(m * inverse(m) == BitMatrix::identity(9));
  }
}

TEST_CASE("span builder and subspace points") {
  SpanBuilder sb;
  CHECK(sb.insert(0b0011));
  CHECK(sb.insert(0b0110));
  CHECK_FALSE(sb.insert(0b0101));
  CHECK(sb.contains(0b0101));
  CHECK_FALSE(sb.contains(0b1000));
  const std::vector<Point> gens{0b0011, 0b0110};
  CHECK(span_points(gens) == std::vector<Point>{0b0011, 0b0101, 0b0110});
  const std::vector<Point> dependent{0b1, 0b1};
  CHECK_THROWS(span_points(dependent));
  CHECK(rank_of(std::vector<Point>{1, 2, 3, 4}) == 3);
}

TEST_CASE("companion matrices generate the full multiplicative group") {
  for (unsigned m = 1; m <= 10; ++m) {
    auto f = field_rep(m);
    REQUIRE(f.elements.size() == (std::size_t{1} << m));
    std::set<std::vector<std::string>> distinct;
    for (const auto& e : f.elements) distinct.insert(e.to_strings());
    CHECK(distinct.size() == f.elements.size());
    // Pairwise differences of distinct elements are invertible.
    for (std::size_t a = 0; a < f.elements.size() && a < 32; ++a) {
      for (std::size_t b = a + 1; b < f.elements.size() && b < 32; ++b) {
        CHECK(rank(f.elements[a] + f.elements[b]) == m);
      }
    }
    BitMatrix power = BitMatrix::identity(m);
    for (std::uint32_t t = 0; t < f.order(); ++t) power = power * f.companion;
    CHECK(power == BitMatrix::identity(m));
  }
}

TEST_CASE("field arithmetic tables") {
  for (unsigned m = 2; m <= 12; ++m) {
    auto f = field_rep(m);
    for (std::uint32_t a = 1; a <= f.order(); ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.mul(0, 5 % (f.order() + 1)) == 0);
  }
  CHECK_THROWS(primitive_polynomial(0));
  CHECK_THROWS(primitive_polynomial(17));
}
