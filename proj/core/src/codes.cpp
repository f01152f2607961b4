#include "divcodes/codes.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "divcodes/error.hpp"

namespace divcodes {

using boost::multiprecision::cpp_int;

namespace {

BitMatrix nonzero_rref_rows(const BitMatrix& rows) {
  auto r = rref(rows);
  std::vector<std::size_t> keep(r.rank);
  for (std::size_t i = 0; i < r.rank; ++i) keep[i] = i;
  return r.reduced.select_rows(keep);
}

cpp_int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  cpp_int b = 1;
  for (std::size_t i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1;
  }
  return b;
}

cpp_int krawtchouk_big(std::size_t n, std::size_t j, std::size_t i) {
  cpp_int sum = 0;
  for (std::size_t s = 0; s <= j; ++s) {
    if (s > i || j - s > n - i) continue;
    cpp_int term = binomial(i, s) * binomial(n - i, j - s);
    if (s % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace

LinearCode::LinearCode(const BitMatrix& generator) {
  auto r = rref(generator);
  if (r.rank != generator.rows()) throw PreconditionError("LinearCode: generator is not of full row rank");
  if (r.rank == 0) throw PreconditionError("LinearCode: dimension must be at least 1");
  gen_ = std::move(r.reduced);
}

LinearCode LinearCode::from_spanning_rows(const BitMatrix& rows) {
  BitMatrix g = nonzero_rref_rows(rows);
  if (g.rows() == 0) throw PreconditionError("LinearCode: rows span the zero code");
  return LinearCode(Trusted{}, std::move(g));
}

bool LinearCode::contains(std::span<const std::uint64_t> word) const {
  if (word.size() != gen_.words_per_row()) throw PreconditionError("contains: word length mismatch");
  BitMatrix w(1, n());
  std::copy(word.begin(), word.end(), w.row(0).begin());
  return rank(gen_.stack(w)) == k();
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::vector<std::size_t> WeightDistribution::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] != 0) s.push_back(i);
  }
  return s;
}

std::size_t WeightDistribution::min_distance() const {
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] != 0) return i;
  }
  return 0;
}

void for_each_codeword_weight(const BitMatrix& gen, const std::function<void(std::size_t)>& fn) {
  const std::size_t k = gen.rows();
  if (k > kMaxEnumerationDim) {
    throw BudgetExceeded("weight enumeration refused: k = " + std::to_string(k) + " exceeds " +
                         std::to_string(kMaxEnumerationDim));
  }
  const std::size_t words = gen.words_per_row();
  std::vector<std::uint64_t> cur(words, 0);
  fn(0);
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << k); ++g) {
    const auto r = gen.row(static_cast<std::size_t>(std::countr_zero(g)));
    std::size_t wt = 0;
    for (std::size_t w = 0; w < words; ++w) {
      cur[w] ^= r[w];
      wt += static_cast<std::size_t>(std::popcount(cur[w]));
    }
    fn(wt);
  }
}

WeightDistribution weight_distribution(const LinearCode& code) {
  WeightDistribution wd;
  wd.counts.assign(code.n() + 1, 0);
  for_each_codeword_weight(code.gen(), [&](std::size_t w) { ++wd.counts[w]; });
  return wd;
}

bool is_divisible(const WeightDistribution& wd, std::size_t delta) {
  if (delta == 0) throw PreconditionError("is_divisible: delta must be >= 1");
  for (std::size_t i = 1; i < wd.counts.size(); ++i) {
    if (wd.counts[i] != 0 && i % delta != 0) return false;
  }
  return true;
}

bool is_divisible(const LinearCode& code, std::size_t delta) {
  return is_divisible(weight_distribution(code), delta);
}

bool is_projective(const LinearCode& code) {
  auto cols = code.columns();
  std::sort(cols.begin(), cols.end());
  if (!cols.empty() && cols.front() == 0) return false;
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

bool dual_distance_at_least_3(const LinearCode& code) {
  if (code.k() == code.n()) return true;  // dual is the zero code
  const auto b = macwilliams(weight_distribution(code), code.k());
  return b.counts[1] == 0 && (b.counts.size() <= 2 || b.counts[2] == 0);
}

LinearCode dual(const LinearCode& code) {
  if (code.k() == code.n()) throw PreconditionError("dual: k = n, the dual is the zero code");
  return LinearCode(kernel_basis(code.gen()));
}

std::int64_t krawtchouk(std::size_t n, std::size_t j, std::size_t i) {
  return static_cast<std::int64_t>(krawtchouk_big(n, j, i));
}

WeightDistribution macwilliams(const WeightDistribution& wd, std::size_t k) {
  const std::size_t n = wd.n();
  if (wd.counts.empty() || wd.counts[0] != 1) throw PreconditionError("macwilliams: A_0 must be 1");
  if (k >= 64 || wd.total() != (std::uint64_t{1} << k)) {
    throw PreconditionError("macwilliams: counts do not sum to 2^k");
  }
  if (n - k >= 64) throw BudgetExceeded("macwilliams: dual counts exceed 64 bits");
  const cpp_int scale = cpp_int(1) << k;
  WeightDistribution out;
  out.counts.assign(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    cpp_int sum = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (wd.counts[i] != 0) sum += cpp_int(wd.counts[i]) * krawtchouk_big(n, j, i);
    }
    if (sum < 0 || sum % scale != 0) {
      throw PreconditionError("macwilliams: B_" + std::to_string(j) + " is not a nonnegative integer");
    }
    out.counts[j] = static_cast<std::uint64_t>(sum / scale);
  }
  return out;
}

void for_each_codim1_subcode(const LinearCode& code, const std::function<void(const LinearCode&)>& fn) {
  const std::size_t k = code.k();
  if (k < 2) throw PreconditionError("codim1_subcodes: requires k >= 2");
  if (k > kMaxEnumerationDim) throw BudgetExceeded("codim1_subcodes: k above enumeration budget");
  for (std::uint64_t f = 1; f < (std::uint64_t{1} << k); ++f) {
    BitMatrix functional(1, k);
    for (std::size_t i = 0; i < k; ++i) {
      if ((f >> i) & 1U) functional.set(0, i);
    }
    fn(LinearCode(kernel_basis(functional) * code.gen()));
  }
}

std::vector<LinearCode> codim1_subcodes(const LinearCode& code) {
  std::vector<LinearCode> out;
  for_each_codim1_subcode(code, [&](const LinearCode& c) { out.push_back(c); });
  return out;
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
  BitMatrix g(a.k() + b.k(), a.n() + b.n());
  for (std::size_t i = 0; i < a.k(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (a.gen().get(i, j)) g.set(i, j);
    }
  }
  for (std::size_t i = 0; i < b.k(); ++i) {
    for (std::size_t j = 0; j < b.n(); ++j) {
      if (b.gen().get(i, j)) g.set(a.k() + i, a.n() + j);
    }
  }
  return LinearCode(g);
}

LinearCode juxtapose(const BitMatrix& g1, const BitMatrix& g2) {
  if (g1.rows() != g2.rows()) throw PreconditionError("juxtapose: row counts differ");
  BitMatrix g(g1.rows(), g1.cols() + g2.cols());
  for (std::size_t i = 0; i < g1.rows(); ++i) {
    for (std::size_t j = 0; j < g1.cols(); ++j) {
      if (g1.get(i, j)) g.set(i, j);
    }
    for (std::size_t j = 0; j < g2.cols(); ++j) {
      if (g2.get(i, j)) g.set(i, g1.cols() + j);
    }
  }
  return LinearCode::from_spanning_rows(g);
}

LinearCode shorten(const LinearCode& code, std::span<const std::size_t> coords) {
  std::vector<std::size_t> sorted(coords.begin(), coords.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("shorten: coordinates are not distinct");
  }
  for (auto c : sorted) {
    if (c >= code.n()) throw PreconditionError("shorten: coordinate out of range");
  }
  // Messages m with m G vanishing on coords: kernel of the k x |coords| restriction.
  BitMatrix restriction(sorted.size(), code.k());
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    for (std::size_t i = 0; i < code.k(); ++i) {
      if (code.gen().get(i, sorted[t])) restriction.set(t, i);
    }
  }
  const BitMatrix msgs = kernel_basis(restriction);
  if (msgs.rows() == 0) throw PreconditionError("shorten: result is the zero code");
  return LinearCode((msgs * code.gen()).drop_columns(sorted));
}

LinearCode augment(const LinearCode& code, const BitMatrix& word) {
  if (word.rows() != 1 || word.cols() != code.n()) throw PreconditionError("augment: word length mismatch");
  BitMatrix g = code.gen().stack(word);
  if (rank(g) != code.k() + 1) throw PreconditionError("augment: word already lies in the code");
  return LinearCode(g);
}

LinearCode golay24() {
  constexpr std::uint32_t kGenPoly = 0b110001110101;  // degree 11
  BitMatrix g(12, 24);
  for (std::size_t i = 0; i < 12; ++i) {
    std::size_t parity = 0;
    for (std::size_t d = 0; d <= 11; ++d) {
      if ((kGenPoly >> d) & 1U) {
        g.set(i, i + d);
        ++parity;
      }
    }
    if (parity % 2 == 1) g.set(i, 23);
  }
  return LinearCode(g);
}

}  // namespace divcodes
