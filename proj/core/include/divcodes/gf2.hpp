#pragma once

// Bit-packed linear algebra over GF(2) and matrix models of GF(2^m).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace divcodes {

/// A vector of F_2^k with k <= 64; coordinate i is bit i.
using Point = std::uint64_t;

inline int dot(Point a, Point b) { return std::popcount(a & b) & 1; }

/// Row-major bit-packed matrix over GF(2). Padding bits past `cols` are
/// always zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  /// Rows given as strings over {0,1}; all rows must have equal length.
  static BitMatrix from_strings(const std::vector<std::string>& rows);
  /// Matrix whose column j is `columns[j]` restricted to `rows` bits.
  static BitMatrix from_columns(std::span<const Point> columns, std::size_t rows);
  /// Matrix whose row i is `row_bits[i]` restricted to `cols` bits (cols <= 64).
  static BitMatrix from_row_points(std::span<const Point> row_bits, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v = true);
  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= (std::uint64_t{1} << (c % 64)); }

  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * words_, words_}; }

  /// row(dst) ^= row(src)
  void add_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const;
  std::size_t row_weight(std::size_t r) const;

  /// Column j as a Point (requires rows() <= 64).
  Point column(std::size_t j) const;
  /// Row i as a Point (requires cols() <= 64).
  Point row_point(std::size_t i) const;
  std::vector<Point> columns() const;

  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& rhs) const;
  BitMatrix operator+(const BitMatrix& rhs) const;
  bool operator==(const BitMatrix& rhs) const = default;

  /// Matrix with the listed columns removed.
  BitMatrix drop_columns(std::span<const std::size_t> cols) const;
  /// Stack rows of `other` below this matrix (equal column counts).
  BitMatrix stack(const BitMatrix& other) const;
  BitMatrix select_rows(std::span<const std::size_t> rows) const;

  std::vector<std::string> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

struct RrefResult {
  BitMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

/// Basis (as rows) of the right kernel {x : M x = 0}.
BitMatrix kernel_basis(const BitMatrix& m);

/// Rank of the span of a list of vectors.
std::size_t rank_of(std::span<const Point> vectors);

/// Incremental echelon basis of a subspace of F_2^k, k <= 64.
class SpanBuilder {
 public:
  /// Reduce v against the basis; zero iff v is in the span.
  Point reduce(Point v) const;
  bool contains(Point v) const { return reduce(v) == 0; }
  /// Adds v; returns false if v was already in the span.
  bool insert(Point v);
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Point>& basis() const { return basis_; }

 private:
  std::vector<Point> basis_;  // each with a distinct leading bit
};

/// The 2^d - 1 nonzero vectors of the row space of `basis`, ascending.
std::vector<Point> subspace_points(const BitMatrix& basis);
std::vector<Point> span_points(std::span<const Point> independent);

/// Inverse of a square invertible matrix; throws otherwise.
BitMatrix inverse(const BitMatrix& m);

/// Matrix model of GF(2^m): the companion matrix A of a fixed primitive
/// polynomial and the element list {0, I, A, A^2, ..., A^(2^m-2)}.
struct FieldRep {
  unsigned m = 0;
  std::uint32_t polynomial = 0;  // bit i = coefficient of x^i, including x^m
  BitMatrix companion;
  std::vector<BitMatrix> elements;

  // Elements as vectors in the polynomial basis; exp[t] = alpha^t.
  std::vector<std::uint32_t> exp;
  std::vector<std::int32_t> log;  // log[0] = -1

  std::uint32_t order() const { return (1U << m) - 1; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
};

/// Fixed primitive polynomial of degree m (1 <= m <= 16).
std::uint32_t primitive_polynomial(unsigned m);
FieldRep field_rep(unsigned m);

}  // namespace divcodes
