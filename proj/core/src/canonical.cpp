#include "divcodes/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "divcodes/error.hpp"

namespace divcodes {

namespace {

thread_local CanonicalStats g_stats;

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;
constexpr std::size_t kHyperplaneRefineMaxDim = 14;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xFF;
    h *= kFnvPrime;
  }
  return h;
}

int compare_seq(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

Point coordinates(const std::vector<Point>& inv_rows, Point p) {
  Point c = 0;
  for (std::size_t i = 0; i < inv_rows.size(); ++i) {
    if (dot(inv_rows[i], p)) c |= Point{1} << i;
  }
  return c;
}

struct Leaf {
  std::vector<std::uint64_t> trace;
  std::vector<std::uint64_t> form;
  std::vector<int> basis;
  std::vector<Point> inverse_rows;  // coordinate i of p is dot(row_i, p)
};

class Searcher {
 public:
  Searcher(std::size_t k, std::vector<Point> pts, std::vector<std::uint32_t> mult)
      : k_(k),
        s_(pts.size()),
        pts_(std::move(pts)),
        mult_(std::move(mult)),
        index_(std::size_t{1} << k, -1),
        use_hyperplanes_(k <= kHyperplaneRefineMaxDim) {
    for (std::size_t i = 0; i < s_; ++i) index_[pts_[i]] = static_cast<int>(i);
    if (use_hyperplanes_) {
      on_.assign(std::size_t{1} << k, 0);
      hcolor_.assign(on_.size(), 0);
      for (std::size_t a = 1; a < on_.size(); ++a) {
        for (std::size_t i = 0; i < s_; ++i) {
          if (!dot(a, pts_[i])) on_[a] |= std::uint64_t{1} << i;
        }
      }
    }
  }

  Leaf run() {
    const auto spectrum = hyperplane_spectra();
    std::vector<std::pair<std::uint32_t, std::uint64_t>> invariant(s_);
    for (std::size_t i = 0; i < s_; ++i) invariant[i] = {mult_[i], spectrum[i]};
    auto sorted = invariant;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(s_);
    for (std::size_t i = 0; i < s_; ++i) {
      colors[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), invariant[i]) - sorted.begin());
    }
    search(std::move(colors), 0);
    return best_;
  }

 private:
  // For every point, a hash of the weights of the hyperplanes through it.
  std::vector<std::uint64_t> hyperplane_spectra() const {
    const std::size_t size = std::size_t{1} << k_;
    std::vector<std::int64_t> f(size, 0);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < s_; ++i) {
      f[pts_[i]] += mult_[i];
      total += mult_[i];
    }
    for (std::size_t h = 1; h < size; h <<= 1) {
      for (std::size_t i = 0; i < size; i += h << 1) {
        for (std::size_t j = i; j < i + h; ++j) {
          const auto x = f[j];
          const auto y = f[j + h];
          f[j] = x + y;
          f[j + h] = x - y;
        }
      }
    }
    std::vector<std::uint64_t> out(s_);
    std::vector<std::uint32_t> hist(static_cast<std::size_t>(total) + 1);
    for (std::size_t i = 0; i < s_; ++i) {
      std::fill(hist.begin(), hist.end(), 0U);
      for (std::size_t a = 1; a < size; ++a) {
        if (!dot(a, pts_[i])) ++hist[static_cast<std::size_t>((total - f[a]) / 2)];
      }
      std::uint64_t h = kFnvOffset;
      for (auto c : hist) h = mix(h, c);
      out[i] = h;
    }
    return out;
  }

  // Refines the point colors. A point P is split by the multiset of
  // (color(Q), color(P+Q)) over the other points Q and, for k up to
  // kHyperplaneRefineMaxDim, by the colors of the hyperplanes through P, where
  // a hyperplane is colored by the multiset of point colors it contains.
  std::uint64_t refine(std::vector<int>& colors) {
    std::vector<int> order(s_);
    std::iota(order.begin(), order.end(), 0);
    auto relabel = [&](auto less, auto equal) {
      std::sort(order.begin(), order.end(), less);
      std::vector<int> fresh(s_);
      int rank = -1;
      for (std::size_t t = 0; t < s_; ++t) {
        if (t == 0 || !equal(order[t - 1], order[t])) ++rank;
        fresh[static_cast<std::size_t>(order[t])] = rank;
      }
      colors = std::move(fresh);
      return static_cast<std::size_t>(rank + 1);
    };
    std::size_t cells = relabel([&](int a, int b) { return colors[static_cast<std::size_t>(a)] < colors[static_cast<std::size_t>(b)]; },
                                [&](int a, int b) { return colors[static_cast<std::size_t>(a)] == colors[static_cast<std::size_t>(b)]; });
    std::vector<std::vector<std::uint64_t>> sig(s_);
    std::vector<std::uint64_t> through(s_, 0);
    std::size_t hcells = 1;
    if (use_hyperplanes_) std::fill(hcolor_.begin(), hcolor_.end(), 0);
    while (true) {
      std::size_t hnext = hcells;
      if (use_hyperplanes_) {
        hnext = refine_hyperplanes(colors);
        std::fill(through.begin(), through.end(), 0);
        for (std::size_t a = 1; a < on_.size(); ++a) {
          const std::uint64_t g = scramble(static_cast<std::uint64_t>(hcolor_[a]) + 1);
          for (std::uint64_t m = on_[a]; m != 0; m &= m - 1) through[static_cast<std::size_t>(std::countr_zero(m))] += g;
        }
      }
      for (std::size_t i = 0; i < s_; ++i) {
        auto& row = sig[i];
        row.clear();
        for (std::size_t j = 0; j < s_; ++j) {
          if (j == i) continue;
          const int third = index_[pts_[i] ^ pts_[j]];
          const std::uint32_t c3 = third < 0 ? 0U : static_cast<std::uint32_t>(colors[static_cast<std::size_t>(third)]) + 1U;
          row.push_back((static_cast<std::uint64_t>(colors[j]) << 32) | c3);
        }
        std::sort(row.begin(), row.end());
      }
      auto key_less = [&](int a, int b) {
        const auto ua = static_cast<std::size_t>(a);
        const auto ub = static_cast<std::size_t>(b);
        if (colors[ua] != colors[ub]) return colors[ua] < colors[ub];
        if (through[ua] != through[ub]) return through[ua] < through[ub];
        return sig[ua] < sig[ub];
      };
      auto key_eq = [&](int a, int b) {
        const auto ua = static_cast<std::size_t>(a);
        const auto ub = static_cast<std::size_t>(b);
        return colors[ua] == colors[ub] && through[ua] == through[ub] && sig[ua] == sig[ub];
      };
      const std::size_t next = relabel(key_less, key_eq);
      if (next == cells && hnext == hcells) break;
      cells = next;
      hcells = hnext;
    }
    std::uint64_t h = mix(mix(kFnvOffset, cells), hcells);
    for (std::size_t t = 0; t < s_; ++t) {
      const auto i = static_cast<std::size_t>(order[t]);
      if (t > 0 && colors[static_cast<std::size_t>(order[t - 1])] == colors[i]) continue;
      h = mix(mix(h, static_cast<std::uint64_t>(colors[i])), through[i]);
      for (auto v : sig[i]) h = mix(h, v);
    }
    return h;
  }

  // One refinement step of the hyperplane colors; returns the cell count.
  std::size_t refine_hyperplanes(const std::vector<int>& colors) {
    std::vector<std::uint64_t> g(s_);
    for (std::size_t i = 0; i < s_; ++i) g[i] = scramble(static_cast<std::uint64_t>(colors[i]));
    const std::size_t size = on_.size();
    hkeys_.resize(size - 1);
    for (std::size_t a = 1; a < size; ++a) {
      std::uint64_t sum = 0;
      for (std::uint64_t m = on_[a]; m != 0; m &= m - 1) sum += g[static_cast<std::size_t>(std::countr_zero(m))];
      hkeys_[a - 1] = {hcolor_[a], sum, static_cast<std::uint32_t>(a)};
    }
    std::sort(hkeys_.begin(), hkeys_.end());
    int rank = -1;
    for (std::size_t t = 0; t < hkeys_.size(); ++t) {
      if (t == 0 || std::get<0>(hkeys_[t - 1]) != std::get<0>(hkeys_[t]) || std::get<1>(hkeys_[t - 1]) != std::get<1>(hkeys_[t])) ++rank;
      hcolor_[std::get<2>(hkeys_[t])] = rank;
    }
    return static_cast<std::size_t>(rank + 1);
  }

  static std::uint64_t scramble(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  int compare_path_with_best() const {
    return compare_seq(path_trace_, best_.trace, path_trace_.size());
  }

  bool same_orbit(int c, const std::vector<int>& explored) const {
    if (auts_.empty()) return false;
    UnionFind uf(s_);
    for (const auto& perm : auts_) {
      bool fixes = std::all_of(prefix_.begin(), prefix_.end(),
                               [&](int b) { return perm[static_cast<std::size_t>(b)] == b; });
      if (!fixes) continue;
      for (std::size_t i = 0; i < s_; ++i) uf.unite(static_cast<int>(i), perm[i]);
    }
    const int root = uf.find(c);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return uf.find(e) == root; });
  }

  void search(std::vector<int> colors, std::size_t level) {
    ++g_stats.nodes;
    const std::uint64_t t = refine(colors);
    path_trace_.resize(level);
    path_trace_.push_back(t);
    if (have_best_ && compare_path_with_best() > 0) return;
    if (level == k_) {
      leaf();
      return;
    }
    SpanBuilder span;
    for (int b : prefix_) span.insert(pts_[static_cast<std::size_t>(b)]);
    // Target cell: the color class with fewest points outside the span.
    std::vector<std::size_t> outside(s_, 0);
    for (std::size_t i = 0; i < s_; ++i) {
      if (!span.contains(pts_[i])) ++outside[static_cast<std::size_t>(colors[i])];
    }
    std::size_t target = s_;
    for (std::size_t c = 0; c < s_; ++c) {
      if (outside[c] > 0 && (target == s_ || outside[c] < outside[target])) target = c;
    }
    std::vector<int> children;
    for (std::size_t i = 0; i < s_; ++i) {
      if (static_cast<std::size_t>(colors[i]) == target && !span.contains(pts_[i])) children.push_back(static_cast<int>(i));
    }
    std::vector<int> explored;
    for (int c : children) {
      if (have_best_) {
        path_trace_.resize(level + 1);
        if (compare_path_with_best() > 0) return;
      }
      if (!explored.empty() && same_orbit(c, explored)) continue;
      explored.push_back(c);
      auto child = colors;
      child[static_cast<std::size_t>(c)] = -1;
      prefix_.push_back(c);
      search(std::move(child), level + 1);
      prefix_.pop_back();
      if (jump_to_ >= 0) {
        if (static_cast<int>(level) > jump_to_) return;
        jump_to_ = -1;
      }
    }
  }

  std::vector<Point> inverse_rows() const {
    std::vector<Point> cols;
    for (int b : prefix_) cols.push_back(pts_[static_cast<std::size_t>(b)]);
    const BitMatrix inv = inverse(BitMatrix::from_columns(cols, k_));
    std::vector<Point> rows(k_);
    for (std::size_t i = 0; i < k_; ++i) rows[i] = inv.row_point(i);
    return rows;
  }

  void record_automorphism(const Leaf& from) {
    std::vector<int> perm(s_);
    bool identity = true;
    for (std::size_t i = 0; i < s_; ++i) {
      const Point c = coordinates(from.inverse_rows, pts_[i]);
      Point img = 0;
      for (std::size_t b = 0; b < k_; ++b) {
        if ((c >> b) & 1U) img ^= pts_[static_cast<std::size_t>(prefix_[b])];
      }
      perm[i] = index_[img];
      identity = identity && perm[i] == static_cast<int>(i);
    }
    if (identity) return;
    ++g_stats.automorphisms;
    auts_.push_back(std::move(perm));
    // The subtree below the divergence point is an image of one already seen.
    std::size_t common = 0;
    while (common < prefix_.size() && prefix_[common] == from.basis[common]) ++common;
    jump_to_ = static_cast<int>(common);
  }

  void leaf() {
    ++g_stats.leaves;
    Leaf cur;
    cur.trace = path_trace_;
    cur.basis = prefix_;
    cur.inverse_rows = inverse_rows();
    cur.form.reserve(s_);
    for (std::size_t i = 0; i < s_; ++i) {
      cur.form.push_back((coordinates(cur.inverse_rows, pts_[i]) << 16) | mult_[i]);
    }
    std::sort(cur.form.begin(), cur.form.end());
    if (!have_best_) {
      first_ = cur;
      best_ = std::move(cur);
      have_best_ = true;
      return;
    }
    if (cur.trace == first_.trace && cur.form == first_.form) {
      record_automorphism(first_);
      return;
    }
    int cmp = compare_seq(cur.trace, best_.trace, cur.trace.size());
    if (cmp == 0) cmp = cur.form < best_.form ? -1 : (cur.form == best_.form ? 0 : 1);
    if (cmp < 0) {
      best_ = std::move(cur);
    } else if (cmp == 0) {
      record_automorphism(best_);
    }
  }

  std::size_t k_;
  std::size_t s_;
  std::vector<Point> pts_;
  std::vector<std::uint32_t> mult_;
  std::vector<int> index_;
  bool use_hyperplanes_;
  std::vector<std::uint64_t> on_;  // on_[a]: points P with a.P = 0
  std::vector<int> hcolor_;
  std::vector<std::tuple<int, std::uint64_t, std::uint32_t>> hkeys_;

  bool have_best_ = false;
  Leaf best_;
  Leaf first_;
  std::vector<std::vector<int>> auts_;
  std::vector<std::uint64_t> path_trace_;
  std::vector<int> prefix_;
  int jump_to_ = -1;
};


// High-rate codes are labelled through their dual. Coordinates sharing a
// dual column can be swapped by an automorphism, so ordering coordinates by
// canonical dual label and reducing the primal generator is canonical.
CanonicalForm via_dual(std::size_t k, const std::vector<Point>& pts, const std::vector<std::uint32_t>& mult,
                       std::uint32_t zeros) {
  std::vector<Point> cols;
  for (std::size_t i = 0; i < pts.size(); ++i) cols.insert(cols.end(), mult[i], pts[i]);
  cols.insert(cols.end(), zeros, Point{0});
  const std::size_t n = cols.size();
  const BitMatrix g = BitMatrix::from_columns(cols, k);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (n > k) {
    const auto hcols = kernel_basis(g).columns();
    std::map<Point, std::uint32_t> dual;
    for (auto h : hcols) {
      if (h != 0) ++dual[h];
    }
    std::vector<Point> dpts;
    std::vector<std::uint32_t> dmult;
    for (const auto& [p, m] : dual) {
      dpts.push_back(p);
      dmult.push_back(m);
    }
    Searcher searcher(n - k, dpts, dmult);
    const Leaf best = searcher.run();
    std::vector<Point> label(n);
    for (std::size_t j = 0; j < n; ++j) label[j] = hcols[j] == 0 ? 0 : coordinates(best.inverse_rows, hcols[j]);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return label[a] < label[b]; });
  }
  BitMatrix reordered(k, n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t i = 0; i < k; ++i) {
      if (g.get(i, order[t])) reordered.set(i, t);
    }
  }
  const auto canonical = rref(reordered).reduced;
  std::map<Point, std::uint32_t> counts;
  CanonicalForm form;
  form.dim = k;
  for (auto c : canonical.columns()) {
    if (c == 0) {
      ++form.zeros;
    } else {
      ++counts[c];
    }
  }
  form.points.assign(counts.begin(), counts.end());
  return form;
}

}  // namespace

std::size_t CanonicalForm::length() const {
  std::size_t n = zeros;
  for (const auto& e : points) n += e.second;
  return n;
}

bool CanonicalForm::is_projective() const {
  return zeros == 0 && std::all_of(points.begin(), points.end(), [](const auto& e) { return e.second == 1; });
}

PointMultiset CanonicalForm::point_multiset() const {
  PointMultiset k(dim);
  for (const auto& [p, m] : points) k.add(p, m);
  return k;
}

BitMatrix CanonicalForm::generator() const {
  std::vector<Point> cols;
  for (const auto& [p, m] : points) cols.insert(cols.end(), m, p);
  cols.insert(cols.end(), zeros, Point{0});
  return BitMatrix::from_columns(cols, dim);
}

CanonicalForm canonical_form(const PointMultiset& columns, std::uint32_t zeros) {
  g_stats = {};
  if (columns.support_size() > kCanonicalMaxLength) {
    throw BudgetExceeded("canonical_form: more than " + std::to_string(kCanonicalMaxLength) + " distinct columns");
  }
  // Reduce to the span: coordinates with respect to a reduced echelon basis.
  SpanBuilder span;
  for (const auto& e : columns.entries()) span.insert(e.first);
  const auto& basis = span.basis();
  const std::size_t k = basis.size();
  if (k > kCanonicalMaxDim) {
    throw BudgetExceeded("canonical_form: dimension " + std::to_string(k) + " above " + std::to_string(kCanonicalMaxDim));
  }
  std::vector<Point> leads;
  for (auto b : basis) leads.push_back(Point{1} << (63 - std::countl_zero(b)));
  std::vector<Point> pts;
  std::vector<std::uint32_t> mult;
  for (const auto& [p, m] : columns.entries()) {
    Point c = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (p & leads[i]) c |= Point{1} << i;
    }
    pts.push_back(c);
    mult.push_back(m);
  }
  CanonicalForm form;
  form.dim = k;
  form.zeros = zeros;
  if (k == 0) return form;
  if (columns.size() < 2 * k) {
    form = via_dual(k, pts, mult, 0);
    form.zeros = zeros;
    return form;
  }
  Searcher searcher(k, std::move(pts), std::move(mult));
  const Leaf best = searcher.run();
  for (auto v : best.form) form.points.emplace_back(v >> 16, static_cast<std::uint32_t>(v & 0xFFFF));
  return form;
}

CanonicalForm canonical_form(const LinearCode& code) {
  if (code.n() > kCanonicalMaxLength) {
    throw BudgetExceeded("canonical_form: length above " + std::to_string(kCanonicalMaxLength));
  }
  if (code.k() > kCanonicalMaxDim) {
    throw BudgetExceeded("canonical_form: dimension above " + std::to_string(kCanonicalMaxDim));
  }
  PointMultiset cols(code.k());
  std::uint32_t zeros = 0;
  for (auto c : code.columns()) {
    if (c == 0) {
      ++zeros;
    } else {
      cols.add(c);
    }
  }
  return canonical_form(cols, zeros);
}

CanonicalKey key_of(const CanonicalForm& form) {
  CanonicalKey key;
  auto put = [&](std::uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i) key.bytes.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
  };
  put(form.dim, 1);
  put(form.zeros, 2);
  put(form.points.size(), 2);
  for (const auto& [p, m] : form.points) {
    put(p, 3);
    put(m, 2);
  }
  return key;
}

CanonicalForm form_of(const CanonicalKey& key) {
  const auto& b = key.bytes;
  std::size_t pos = 0;
  auto get = [&](int bytes) {
    if (pos + static_cast<std::size_t>(bytes) > b.size()) throw PreconditionError("canonical key: truncated");
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(b[pos++]) << (8 * i);
    return v;
  };
  CanonicalForm form;
  form.dim = get(1);
  form.zeros = static_cast<std::uint32_t>(get(2));
  const auto count = get(2);
  for (std::uint64_t i = 0; i < count; ++i) {
    const Point p = get(3);
    const auto m = static_cast<std::uint32_t>(get(2));
    form.points.emplace_back(p, m);
  }
  if (pos != b.size()) throw PreconditionError("canonical key: trailing bytes");
  return form;
}

CanonicalKey canonical_key(const LinearCode& code) { return key_of(canonical_form(code)); }

CanonicalKey canonical_key(const PointMultiset& columns, std::uint32_t zeros) {
  return key_of(canonical_form(columns, zeros));
}

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto v : bytes) {
    out.push_back(kDigits[v >> 4]);
    out.push_back(kDigits[v & 0xF]);
  }
  return out;
}

CanonicalKey CanonicalKey::from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw PreconditionError("canonical key: odd hex length");
  auto nibble = [](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
    throw PreconditionError("canonical key: invalid hex digit");
  };
  CanonicalKey key;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    key.bytes.push_back(static_cast<std::uint8_t>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  }
  return key;
}

CanonicalStats last_canonical_stats() { return g_stats; }

}  // namespace divcodes
