#include "divcodes/gf2.hpp"

#include <algorithm>
#include <stdexcept>

#include "divcodes/error.hpp"

namespace divcodes {

namespace {

constexpr std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

// Primitive polynomials, bit i = coefficient of x^i.
constexpr std::uint32_t kPrimitive[17] = {
    0,
    0b11,                                     // x + 1
    0b111,                                    // x^2 + x + 1
    0b1011,                                   // x^3 + x + 1
    0b10011,                                  // x^4 + x + 1
    0b100101,                                 // x^5 + x^2 + 1
    0b1000011,                                // x^6 + x + 1
    0b10000011,                               // x^7 + x + 1
    0b100011101,                              // x^8 + x^4 + x^3 + x^2 + 1
    0b1000010001,                             // x^9 + x^4 + 1
    0b10000001001,                            // x^10 + x^3 + 1
    0b100000000101,                           // x^11 + x^2 + 1
    0b1000001010011,                          // x^12 + x^6 + x^4 + x + 1
    0b10000000011011,                         // x^13 + x^4 + x^3 + x + 1
    0b100010001000011,                        // x^14 + x^10 + x^6 + x + 1
    0b1000000000000011,                       // x^15 + x + 1
    0b10001000000001011,                      // x^16 + x^12 + x^3 + x + 1
};

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("from_strings: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) {
      const char c = rows[i][j];
      if (c == '1') {
        m.set(i, j);
      } else if (c != '0') {
        throw PreconditionError("from_strings: character outside {0,1}");
      }
    }
  }
  return m;
}

BitMatrix BitMatrix::from_columns(std::span<const Point> columns, std::size_t rows) {
  if (rows > 64) throw PreconditionError("from_columns: more than 64 rows");
  BitMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      if ((columns[j] >> i) & 1U) m.set(i, j);
    }
  }
  return m;
}

BitMatrix BitMatrix::from_row_points(std::span<const Point> row_bits, std::size_t cols) {
  if (cols > 64) throw PreconditionError("from_row_points: more than 64 columns");
  BitMatrix m(row_bits.size(), cols);
  const Point mask = cols == 64 ? ~Point{0} : ((Point{1} << cols) - 1);
  for (std::size_t i = 0; i < row_bits.size(); ++i) {
    if (m.words_ > 0) m.data_[i * m.words_] = row_bits[i] & mask;
  }
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  auto& w = data_[r * words_ + c / 64];
  w = v ? (w | bit) : (w & ~bit);
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) {
  auto* d = data_.data() + dst * words_;
  const auto* s = data_.data() + src * words_;
  for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * words_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * words_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * words_));
}

bool BitMatrix::row_is_zero(std::size_t r) const {
  const auto rw = row(r);
  return std::all_of(rw.begin(), rw.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
  std::size_t wt = 0;
  for (auto w : row(r)) wt += static_cast<std::size_t>(std::popcount(w));
  return wt;
}

Point BitMatrix::column(std::size_t j) const {
  if (rows_ > 64) throw PreconditionError("column: more than 64 rows");
  Point p = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (get(i, j)) p |= Point{1} << i;
  }
  return p;
}

Point BitMatrix::row_point(std::size_t i) const {
  if (cols_ > 64) throw PreconditionError("row_point: more than 64 columns");
  return words_ == 0 ? 0 : data_[i * words_];
}

std::vector<Point> BitMatrix::columns() const {
  if (rows_ > 64) throw PreconditionError("columns: more than 64 rows");
  std::vector<Point> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto rw = row(i);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = rw[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        out[w * 64 + static_cast<std::size_t>(b)] |= Point{1} << i;
        bits &= bits - 1;
      }
    }
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) t.set(j, i);
    }
  }
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw PreconditionError("matrix product: dimension mismatch");
  BitMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto* o = out.data_.data() + i * out.words_;
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(i, k)) continue;
      const auto* r = rhs.data_.data() + k * rhs.words_;
      for (std::size_t w = 0; w < out.words_; ++w) o[w] ^= r[w];
    }
  }
  return out;
}

BitMatrix BitMatrix::operator+(const BitMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix sum: dimension mismatch");
  BitMatrix out = *this;
  for (std::size_t w = 0; w < data_.size(); ++w) out.data_[w] ^= rhs.data_[w];
  return out;
}

BitMatrix BitMatrix::drop_columns(std::span<const std::size_t> cols) const {
  std::vector<bool> drop(cols_, false);
  for (auto c : cols) {
    if (c >= cols_) throw PreconditionError("drop_columns: index out of range");
    drop[c] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!drop[j]) keep.push_back(j);
  }
  BitMatrix out(rows_, keep.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (get(i, keep[j])) out.set(i, j);
    }
  }
  return out;
}

BitMatrix BitMatrix::stack(const BitMatrix& other) const {
  if (rows_ == 0) return other;
  if (other.rows_ == 0) return *this;
  if (cols_ != other.cols_) throw PreconditionError("stack: column mismatch");
  BitMatrix out(rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> rows) const {
  BitMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(rows[i] * words_), words_,
                out.data_.begin() + static_cast<std::ptrdiff_t>(i * words_));
  }
  return out;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) out[i][j] = '1';
    }
  }
  return out;
}

RrefResult rref(const BitMatrix& m) {
  RrefResult res{m, 0, {}};
  BitMatrix& r = res.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < r.cols() && pivot_row < r.rows(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < r.rows() && !r.get(sel, c)) ++sel;
    if (sel == r.rows()) continue;
    r.swap_rows(sel, pivot_row);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i != pivot_row && r.get(i, c)) r.add_row(i, pivot_row);
    }
    res.pivots.push_back(c);
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

BitMatrix kernel_basis(const BitMatrix& m) {
  const auto [r, rk, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  BitMatrix basis(m.cols() - rk, m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(out, free);
    for (std::size_t i = 0; i < rk; ++i) {
      if (r.get(i, free)) basis.set(out, pivots[i]);
    }
    ++out;
  }
  return basis;
}

Point SpanBuilder::reduce(Point v) const {
  for (auto b : basis_) {
    const Point lead = Point{1} << (63 - std::countl_zero(b));
    if (v & lead) v ^= b;
  }
  return v;
}

bool SpanBuilder::insert(Point v) {
  v = reduce(v);
  if (v == 0) return false;
  const Point lead = Point{1} << (63 - std::countl_zero(v));
  for (auto& b : basis_) {
    if (b & lead) b ^= v;
  }
  basis_.push_back(v);
  std::sort(basis_.begin(), basis_.end(), std::greater<>());
  return true;
}

std::size_t rank_of(std::span<const Point> vectors) {
  SpanBuilder sb;
  for (auto v : vectors) sb.insert(v);
  return sb.dim();
}

std::vector<Point> span_points(std::span<const Point> independent) {
  if (independent.size() > 30) throw BudgetExceeded("span_points: dimension above 30");
  if (rank_of(independent) != independent.size()) {
    throw PreconditionError("subspace_points: basis rows are linearly dependent");
  }
  const std::size_t d = independent.size();
  std::vector<Point> out;
  out.reserve((std::size_t{1} << d) - 1);
  Point cur = 0;
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << d); ++g) {
    cur ^= independent[static_cast<std::size_t>(std::countr_zero(g))];
    out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> subspace_points(const BitMatrix& basis) {
  if (basis.cols() > 64) throw PreconditionError("subspace_points: ambient dimension above 64");
  std::vector<Point> rows;
  rows.reserve(basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row_point(i));
  return span_points(rows);
}

BitMatrix inverse(const BitMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse: matrix not square");
  const std::size_t n = m.rows();
  BitMatrix a = m;
  BitMatrix inv = BitMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && !a.get(sel, c)) ++sel;
    if (sel == n) throw PreconditionError("inverse: matrix is singular");
    a.swap_rows(sel, c);
    inv.swap_rows(sel, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != c && a.get(i, c)) {
        a.add_row(i, c);
        inv.add_row(i, c);
      }
    }
  }
  return inv;
}

std::uint32_t primitive_polynomial(unsigned m) {
  if (m < 1 || m > 16) throw PreconditionError("field degree must lie in 1..16");
  return kPrimitive[m];
}

std::uint32_t FieldRep::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  const auto t = (static_cast<std::uint32_t>(log[a]) + static_cast<std::uint32_t>(log[b])) % order();
  return exp[t];
}

std::uint32_t FieldRep::inv(std::uint32_t a) const {
  if (a == 0) throw PreconditionError("FieldRep::inv: zero has no inverse");
  return exp[(order() - static_cast<std::uint32_t>(log[a])) % order()];
}

FieldRep field_rep(unsigned m) {
  FieldRep f;
  f.m = m;
  f.polynomial = primitive_polynomial(m);
  // Multiplication by x on the polynomial basis 1, x, ..., x^(m-1).
  f.companion = BitMatrix(m, m);
  for (unsigned i = 0; i + 1 < m; ++i) f.companion.set(i + 1, i);
  for (unsigned i = 0; i < m; ++i) {
    if ((f.polynomial >> i) & 1U) f.companion.set(i, m - 1, !f.companion.get(i, m - 1));
  }
  const std::uint32_t q = 1U << m;
  f.elements.reserve(q);
  f.elements.emplace_back(m, m);
  BitMatrix power = BitMatrix::identity(m);
  f.exp.assign(q - 1, 0);
  f.log.assign(q, -1);
  for (std::uint32_t t = 0; t + 1 < q; ++t) {
    f.elements.push_back(power);
    const auto v = static_cast<std::uint32_t>(power.column(0));
    f.exp[t] = v;
    f.log[v] = static_cast<std::int32_t>(t);
    power = f.companion * power;
  }
  return f;
}

}  // namespace divcodes
