#include "divcodes/classify.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <tuple>

#include "divcodes/error.hpp"

namespace divcodes {

namespace {

using Level = std::map<CanonicalKey, CanonicalForm>;
using Emit = std::function<void(const PointMultiset&, std::uint32_t)>;
using Expand = std::function<void(const CanonicalForm&, const Emit&)>;

// Expands every parent and deduplicates the children. Worker w handles the
// parents with index congruent to w; the merge is by key, so the result does
// not depend on the worker count.
Level expand_level(const std::vector<const CanonicalForm*>& parents, const Expand& expand, const ClassifyOptions& options) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, parents.size()));
  std::vector<Level> local(workers);
  auto run = [&](std::size_t w) {
    Level& out = local[w];
    for (std::size_t i = w; i < parents.size(); i += workers) {
      expand(*parents[i], [&](const PointMultiset& child, std::uint32_t zeros) {
        auto form = canonical_form(child, zeros);
        auto key = key_of(form);
        out.try_emplace(std::move(key), std::move(form));
      });
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  Level merged = std::move(local[0]);
  for (std::size_t w = 1; w < workers; ++w) merged.merge(local[w]);
  if (options.max_classes != 0 && merged.size() > options.max_classes) {
    throw BudgetExceeded("classification level holds " + std::to_string(merged.size()) + " classes, budget " +
                         std::to_string(options.max_classes));
  }
  return merged;
}

std::vector<const CanonicalForm*> values(const Level& level) {
  std::vector<const CanonicalForm*> out;
  out.reserve(level.size());
  for (const auto& entry : level) out.push_back(&entry.second);
  return out;
}

// Codimension-one subcodes of a projective code that are again projective.
// For a functional f with lowest set bit i0 the kernel has the basis e_i
// (f_i = 0) and e_i + e_i0 (f_i = 1), i != i0.
void projective_subcodes(const CanonicalForm& parent, const Emit& emit) {
  const std::size_t k = parent.dim;
  if (k < 2) return;
  std::vector<std::uint8_t> seen(std::size_t{1} << (k - 1));
  for (Point f = 1; f < (Point{1} << k); ++f) {
    const int i0 = std::countr_zero(f);
    const Point low = (Point{1} << i0) - 1;
    std::fill(seen.begin(), seen.end(), 0);
    PointMultiset child(k - 1);
    bool projective = true;
    for (const auto& [p, m] : parent.points) {
      const Point q = ((p >> i0) & 1U) ? p ^ f : p;
      const Point c = (q & low) | ((q >> 1) & ~low);
      if (c == 0 || seen[c]) {
        projective = false;
        break;
      }
      seen[c] = 1;
      child.add(c);
    }
    if (projective) emit(child, 0);
  }
}

// Children of a delta-divisible code of dimension j given as (points, zeros).
// The new row lifts t_p of the mu_p copies of each column p. Divisibility of
// the child is equivalent to sum(t) = 0 mod delta and, for every functional
// a, sum over a.p = 1 of t_p = 0 mod delta/2. The parity part reads
// sum (t_p mod 2) p = 0, so parities of the basis points are forced by the
// others. Adding a codeword to the row maps t_p to mu_p - t_p on a.p = 1; we
// keep only rows with 2 t_q <= mu_q on the basis points q.
class Lifter {
 public:
  Lifter(const CanonicalForm& parent, std::size_t delta, const Emit& emit)
      : delta_(delta), j_(parent.dim), zeros_(parent.zeros), emit_(emit) {
    SpanBuilder span;
    std::vector<Point> basis_pts;
    for (const auto& [p, m] : parent.points) {
      if (span.insert(p)) {
        basis_.push_back({p, m});
        basis_pts.push_back(p);
      } else {
        free_.push_back({p, m});
      }
    }
    if (basis_.size() != j_) throw PreconditionError("lift: parent points do not span");
    const BitMatrix inv = inverse(BitMatrix::from_columns(basis_pts, j_));
    for (std::size_t i = 0; i < j_; ++i) inv_rows_.push_back(inv.row_point(i));
    t_free_.assign(free_.size(), 0);
    t_basis_.assign(basis_.size(), 0);
  }

  void run() { over_free(0, 0, 0); }

 private:
  struct Column {
    Point p;
    std::uint32_t mult;
  };

  void over_free(std::size_t idx, Point parity, std::size_t total) {
    if (idx == free_.size()) {
      Point forced = 0;
      for (std::size_t i = 0; i < j_; ++i) {
        if (dot(inv_rows_[i], parity)) forced |= Point{1} << i;
      }
      over_basis(0, forced, total);
      return;
    }
    for (std::uint32_t t = 0; t <= free_[idx].mult; ++t) {
      t_free_[idx] = t;
      over_free(idx + 1, (t & 1U) ? parity ^ free_[idx].p : parity, total + t);
    }
  }

  void over_basis(std::size_t idx, Point forced, std::size_t total) {
    if (idx == basis_.size()) {
      for (std::size_t t0 = (delta_ - total % delta_) % delta_; t0 <= zeros_; t0 += delta_) {
        if (total + t0 == 0) continue;
        finish(static_cast<std::uint32_t>(t0));
      }
      return;
    }
    for (std::uint32_t t = (forced >> idx) & 1U; 2 * t <= basis_[idx].mult; t += 2) {
      t_basis_[idx] = t;
      over_basis(idx + 1, forced, total + t);
    }
  }

  void finish(std::uint32_t t0) {
    if (delta_ == 8 && !mod4_condition()) return;
    const Point lift = Point{1} << j_;
    PointMultiset child(j_ + 1);
    auto place = [&](const Column& c, std::uint32_t t) {
      if (t < c.mult) child.add(c.p, c.mult - t);
      if (t > 0) child.add(c.p | lift, t);
    };
    for (std::size_t i = 0; i < free_.size(); ++i) place(free_[i], t_free_[i]);
    for (std::size_t i = 0; i < basis_.size(); ++i) place(basis_[i], t_basis_[i]);
    if (t0 > 0) child.add(lift, t0);
    emit_(child, zeros_ - t0);
  }

  // sum over a.p = 1 of t_p = 0 mod 4 for every functional a, via a
  // Walsh-Hadamard transform of the t counts.
  bool mod4_condition() {
    const std::size_t size = std::size_t{1} << j_;
    wht_.assign(size, 0);
    std::int64_t total = 0;
    auto add = [&](const Column& c, std::uint32_t t) {
      wht_[c.p] += t;
      total += t;
    };
    for (std::size_t i = 0; i < free_.size(); ++i) add(free_[i], t_free_[i]);
    for (std::size_t i = 0; i < basis_.size(); ++i) add(basis_[i], t_basis_[i]);
    for (std::size_t h = 1; h < size; h <<= 1) {
      for (std::size_t i = 0; i < size; i += h << 1) {
        for (std::size_t x = i; x < i + h; ++x) {
          const auto a = wht_[x];
          const auto b = wht_[x + h];
          wht_[x] = a + b;
          wht_[x + h] = a - b;
        }
      }
    }
    for (std::size_t a = 1; a < size; ++a) {
      if (((total - wht_[a]) / 2) % 4 != 0) return false;
    }
    return true;
  }

  std::size_t delta_;
  std::size_t j_;
  std::uint32_t zeros_;
  const Emit& emit_;
  std::vector<Column> basis_;
  std::vector<Column> free_;
  std::vector<Point> inv_rows_;
  std::vector<std::uint32_t> t_free_;
  std::vector<std::uint32_t> t_basis_;
  std::vector<std::int64_t> wht_;
};

bool record_less(const ClassificationRecord& a, const ClassificationRecord& b) {
  return std::tie(a.n, a.k, a.key) < std::tie(b.n, b.k, b.key);
}

}  // namespace

LinearCode ClassificationRecord::code() const { return LinearCode(form_of(key).generator()); }

ClassificationRecord make_record(const PointMultiset& points, std::size_t delta, const std::string& origin) {
  if (!points.is_spanning()) throw PreconditionError("make_record: points do not span their ambient space");
  ClassificationRecord rec;
  const auto code = points_to_code(points);
  rec.n = code.n();
  rec.k = code.k();
  rec.delta = delta;
  rec.wd = weight_distribution(code);
  if (!is_divisible(rec.wd, delta)) {
    throw VerificationError("make_record: code is not " + std::to_string(delta) + "-divisible");
  }
  rec.projective = points.is_set();
  rec.key = canonical_key(points);
  rec.origin = origin;
  return rec;
}

std::vector<ClassificationRecord> classify_2divisible(std::size_t n_max, const ClassifyOptions& options) {
  std::vector<ClassificationRecord> records;
  for (std::size_t n = 3; n <= n_max; ++n) {
    if (n - 1 > kCanonicalMaxDim) throw BudgetExceeded("classify_2divisible: even-weight code dimension above budget");
    // Even-weight code: unit vectors and their sum.
    PointMultiset even(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) even.add(Point{1} << i);
    even.add((Point{1} << (n - 1)) - 1);
    Level level;
    auto form = canonical_form(even);
    level.emplace(key_of(form), form);
    while (!level.empty()) {
      for (const auto& [key, f] : level) records.push_back(make_record(f.point_multiset(), 2, "descent"));
      level = expand_level(values(level), projective_subcodes, options);
    }
  }
  std::sort(records.begin(), records.end(), record_less);
  return records;
}

std::vector<ClassificationRecord> classify_divisible_upto(std::size_t delta, std::size_t n_max,
                                                          const ClassifyOptions& options) {
  if (delta != 4 && delta != 8) throw PreconditionError("classify_divisible: delta must be 4 or 8");
  if (n_max > kCanonicalMaxLength) throw BudgetExceeded("classify_divisible: length above budget");
  std::vector<ClassificationRecord> records;
  // Level 0 is the zero code: n_max zero columns.
  CanonicalForm zero;
  zero.zeros = static_cast<std::uint32_t>(n_max);
  Level level;
  level.emplace(key_of(zero), zero);
  auto expand = [delta](const CanonicalForm& parent, const Emit& emit) {
    if (parent.dim >= kCanonicalMaxDim) throw BudgetExceeded("classify_divisible: dimension above budget");
    Lifter(parent, delta, emit).run();
  };
  while (true) {
    level = expand_level(values(level), expand, options);
    if (level.empty()) break;
    for (const auto& [key, f] : level) records.push_back(make_record(f.point_multiset(), delta, "lift"));
  }
  std::sort(records.begin(), records.end(), record_less);
  return records;
}

std::vector<ClassificationRecord> classify_divisible(std::size_t delta, std::size_t n, const ClassifyOptions& options) {
  auto all = classify_divisible_upto(delta, n, options);
  std::vector<ClassificationRecord> out;
  for (auto& r : all) {
    if (r.n == n) out.push_back(std::move(r));
  }
  return out;
}

std::map<std::pair<std::size_t, std::size_t>, std::size_t> count_table(const std::vector<ClassificationRecord>& records,
                                                                       bool projective_only) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (const auto& r : records) {
    if (!projective_only || r.projective) ++out[{r.n, r.k}];
  }
  return out;
}

}  // namespace divcodes
