#include "divcodes/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "divcodes/error.hpp"

namespace divcodes {

namespace {

Point ambient_mask(std::size_t ambient) {
  return ambient >= 64 ? ~Point{0} : ((Point{1} << ambient) - 1);
}

void require_scannable(std::size_t ambient, const char* what) {
  if (ambient > kMaxScanAmbient) {
    throw BudgetExceeded(std::string(what) + ": ambient dimension " + std::to_string(ambient) + " above " +
                         std::to_string(kMaxScanAmbient));
  }
}

void require_set(const PointMultiset& k, const char* what) {
  if (!k.is_set()) throw PreconditionError(std::string(what) + ": point multiset has a multiplicity above 1");
}

}  // namespace

PointMultiset::PointMultiset(std::size_t ambient) : ambient_(ambient) {
  if (ambient > 64) throw PreconditionError("PointMultiset: ambient dimension above 64");
}

PointMultiset PointMultiset::from_points(std::size_t ambient, std::span<const Point> points) {
  PointMultiset k(ambient);
  for (auto p : points) k.add(p);
  return k;
}

void PointMultiset::add(Point p, std::uint32_t count) {
  if (p == 0) throw PreconditionError("PointMultiset: the zero vector is not a point");
  if ((p & ~ambient_mask(ambient_)) != 0) throw PreconditionError("PointMultiset: point outside the ambient space");
  if (count == 0) return;
  mult_[p] += count;
  size_ += count;
}

void PointMultiset::add(const PointMultiset& other) {
  if (other.ambient_ > ambient_) throw PreconditionError("PointMultiset::add: ambient dimension mismatch");
  for (const auto& [p, m] : other.mult_) add(p, m);
}

void PointMultiset::remove(Point p, std::uint32_t count) {
  auto it = mult_.find(p);
  if (it == mult_.end() || it->second < count) throw PreconditionError("PointMultiset::remove: point not present");
  it->second -= count;
  size_ -= count;
  if (it->second == 0) mult_.erase(it);
}

std::uint32_t PointMultiset::multiplicity(Point p) const {
  auto it = mult_.find(p);
  return it == mult_.end() ? 0 : it->second;
}

bool PointMultiset::is_set() const {
  return std::all_of(mult_.begin(), mult_.end(), [](const auto& e) { return e.second == 1; });
}

std::size_t PointMultiset::span_dim() const {
  SpanBuilder sb;
  for (const auto& e : mult_) sb.insert(e.first);
  return sb.dim();
}

std::vector<Point> PointMultiset::points() const {
  std::vector<Point> out;
  out.reserve(size_);
  for (const auto& [p, m] : mult_) out.insert(out.end(), m, p);
  return out;
}

PointMultiset PointMultiset::embed(std::size_t new_ambient) const {
  if (new_ambient < ambient_) throw PreconditionError("embed: target dimension smaller than ambient");
  PointMultiset out(new_ambient);
  out.add(*this);
  return out;
}

Subspace::Subspace(std::size_t ambient, std::span<const Point> generators) : ambient_(ambient) {
  if (ambient > 64) throw PreconditionError("Subspace: ambient dimension above 64");
  for (auto g : generators) {
    if ((g & ~ambient_mask(ambient)) != 0) throw PreconditionError("Subspace: generator outside the ambient space");
    span_.insert(g);
  }
}

Subspace Subspace::from_basis(const BitMatrix& basis) {
  std::vector<Point> rows;
  for (std::size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row_point(i));
  Subspace s(basis.cols(), rows);
  if (s.dim() != basis.rows()) throw PreconditionError("Subspace: basis rows are linearly dependent");
  return s;
}

BitMatrix Subspace::basis_matrix() const { return BitMatrix::from_row_points(basis(), ambient_); }

std::vector<Point> Subspace::points() const { return span_points(basis()); }

bool Subspace::meets_trivially(const Subspace& other) const {
  SpanBuilder sb;
  for (auto b : basis()) sb.insert(b);
  for (auto b : other.basis()) sb.insert(b);
  return sb.dim() == dim() + other.dim();
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis().begin(), other.basis().end(), [&](Point b) { return contains(b); });
}

PointMultiset code_to_points(const LinearCode& code) {
  PointMultiset k(code.k());
  for (auto c : code.columns()) {
    if (c == 0) throw PreconditionError("code_to_points: code has a zero coordinate");
    k.add(c);
  }
  return k;
}

LinearCode points_to_code(const PointMultiset& k) {
  if (k.empty()) throw PreconditionError("points_to_code: empty multiset");
  const auto pts = k.points();
  return LinearCode::from_spanning_rows(BitMatrix::from_columns(pts, k.ambient()));
}

std::size_t hyperplane_weight(const PointMultiset& k, Point a) {
  if (a == 0) throw PreconditionError("hyperplane_weight: zero functional");
  std::size_t w = 0;
  for (const auto& [p, m] : k.entries()) {
    if (dot(a, p)) w += m;
  }
  return w;
}

std::vector<std::size_t> hyperplane_weights(const PointMultiset& k) {
  require_scannable(k.ambient(), "hyperplane_weights");
  // Walsh-Hadamard transform of the multiplicity function:
  // sum_P mult(P) (-1)^{a.P} = |K| - 2 w(a).
  const std::size_t total = std::size_t{1} << k.ambient();
  std::vector<std::int32_t> f(total, 0);
  for (const auto& [p, m] : k.entries()) f[p] += static_cast<std::int32_t>(m);
  for (std::size_t h = 1; h < total; h <<= 1) {
    for (std::size_t i = 0; i < total; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const auto x = f[j];
        const auto y = f[j + h];
        f[j] = x + y;
        f[j + h] = x - y;
      }
    }
  }
  std::vector<std::size_t> w(total);
  const auto n = static_cast<std::int64_t>(k.size());
  for (std::size_t a = 0; a < total; ++a) w[a] = static_cast<std::size_t>((n - f[a]) / 2);
  return w;
}

bool is_divisible_pointset(const PointMultiset& k, std::size_t delta) {
  if (delta == 0) throw PreconditionError("is_divisible_pointset: delta must be >= 1");
  const auto w = hyperplane_weights(k);
  return std::all_of(w.begin() + 1, w.end(), [&](std::size_t x) { return x % delta == 0; });
}

std::size_t max_power_of_two_divisor(const PointMultiset& k) {
  const auto w = hyperplane_weights(k);
  std::size_t g = 0;
  for (std::size_t i = 1; i < w.size(); ++i) g = std::gcd(g, w[i]);
  if (g == 0) return 0;
  return g & (~g + 1);
}

PointMultiset complement(const PointMultiset& k) {
  require_set(k, "complement");
  require_scannable(k.ambient(), "complement");
  PointMultiset out(k.ambient());
  for (Point p = 1; p < (Point{1} << k.ambient()); ++p) {
    if (!k.contains(p)) out.add(p);
  }
  return out;
}

PointMultiset tangent_switch(const PointMultiset& k, const Subspace& line) {
  require_set(k, "tangent_switch");
  if (line.dim() != 2) throw PreconditionError("tangent_switch: subspace is not a line");
  const auto pts = line.points();
  std::vector<Point> on_k;
  for (auto p : pts) {
    if (k.contains(p)) on_k.push_back(p);
  }
  if (on_k.size() != 1) {
    throw PreconditionError("tangent_switch: line meets the set in " + std::to_string(on_k.size()) +
                            " points, not exactly one");
  }
  PointMultiset out(std::max(k.ambient(), line.ambient()));
  out.add(k);
  out.remove(on_k.front());
  for (auto p : pts) {
    if (p != on_k.front()) out.add(p);
  }
  return out;
}

std::vector<Subspace> tangent_lines(const PointMultiset& k) {
  require_set(k, "tangent_lines");
  require_scannable(k.ambient(), "tangent_lines");
  std::vector<Subspace> out;
  for (const auto& [p, m] : k.entries()) {
    for (Point q = 1; q < (Point{1} << k.ambient()); ++q) {
      const Point r = p ^ q;
      if (r == 0 || q > r || k.contains(q) || k.contains(r)) continue;
      const Point gens[] = {p, q};
      out.emplace_back(k.ambient(), gens);
    }
  }
  return out;
}

PointMultiset sunflower_switch(const PointMultiset& k, const Subspace& t, const Subspace& s2) {
  if (s2.dim() != t.dim() + 1) throw PreconditionError("sunflower_switch: dim(S2) must equal dim(T) + 1");
  if (!s2.contains(t)) throw PreconditionError("sunflower_switch: S2 does not contain T");
  const auto t_pts = t.points();
  for (auto p : t_pts) {
    if (!k.contains(p)) throw PreconditionError("sunflower_switch: a point of T is not in K");
  }
  std::vector<Point> fresh;
  for (auto p : s2.points()) {
    if (t.contains(p)) continue;
    if (k.contains(p)) throw PreconditionError("sunflower_switch: S2 \\ T meets K");
    fresh.push_back(p);
  }
  PointMultiset out(std::max(k.ambient(), s2.ambient()));
  out.add(k);
  for (auto p : t_pts) out.remove(p);
  for (auto p : fresh) out.add(p);
  return out;
}

ConeResult cone(const PointMultiset& base, std::size_t s, bool include_vertex) {
  const std::size_t kb = base.ambient();
  const std::size_t ambient = kb + s + 1;
  if (ambient > 64) throw PreconditionError("cone: resulting ambient dimension above 64");
  const std::size_t vsize = std::size_t{1} << (s + 1);
  ConeResult res{PointMultiset(ambient), 0};
  for (const auto& [q, m] : base.entries()) {
    for (std::size_t v = 0; v < vsize; ++v) res.points.add(q | (Point{v} << kb), m);
  }
  if (include_vertex) {
    for (std::size_t v = 1; v < vsize; ++v) res.points.add(Point{v} << kb);
  }
  res.divisor = max_power_of_two_divisor(res.points);
  return res;
}

PointMultiset cone_checked(const PointMultiset& base, std::size_t s, bool include_vertex, std::size_t delta) {
  auto res = cone(base, s, include_vertex);
  if (res.divisor == 0 || res.divisor % delta != 0) {
    throw VerificationError("cone: result is only " + std::to_string(res.divisor) + "-divisible, not " +
                            std::to_string(delta) + "-divisible");
  }
  return std::move(res.points);
}

namespace {

struct EmptySearch {
  const PointMultiset& k;
  std::vector<Point> best;

  std::size_t cap;

  void run(std::vector<Point>& basis, std::vector<Point>& span, Point start) {
    if (basis.size() > best.size()) best = basis;
    const std::size_t ambient = k.ambient();
    if (best.size() >= cap || basis.size() + 1 > cap) return;
    for (Point v = start; v < (Point{1} << ambient); ++v) {
      bool ok = true;
      for (auto s : span) {
        const Point w = v ^ s;
        if (w < v && s != 0) {
          ok = false;
          break;
        }
        if (w == 0 || k.contains(w)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const std::size_t old = span.size();
      for (std::size_t i = 0; i < old; ++i) span.push_back(span[i] ^ v);
      basis.push_back(v);
      run(basis, span, v + 1);
      basis.pop_back();
      span.resize(old);
      if (best.size() == ambient) return;
    }
  }
};

}  // namespace

std::vector<Point> empty_subspace_basis(const PointMultiset& k) {
  require_scannable(k.ambient(), "empty_subspace_max_dim");
  const std::size_t total = (std::size_t{1} << k.ambient()) - 1;
  const std::size_t free_points = total - k.support_size();
  std::size_t cap = 0;
  while (cap < k.ambient() && ((std::size_t{1} << (cap + 1)) - 1) <= free_points) ++cap;
  EmptySearch search{k, {}, cap};
  std::vector<Point> basis;
  std::vector<Point> span{0};
  search.run(basis, span, 1);
  return search.best;
}

std::size_t empty_subspace_max_dim(const PointMultiset& k) { return empty_subspace_basis(k).size(); }

DimensionRange disjoint_embedding_range(const PointMultiset& k1, const PointMultiset& k2) {
  const std::size_t m = std::max(empty_subspace_max_dim(k1), empty_subspace_max_dim(k2));
  const std::size_t hi = k1.ambient() + k2.ambient();
  return {hi - std::min(m, hi), hi};
}

PointMultiset apply_linear(const PointMultiset& k, const BitMatrix& m) {
  if (m.cols() != k.ambient()) throw PreconditionError("apply_linear: matrix width differs from ambient dimension");
  std::vector<Point> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_point(i));
  PointMultiset out(m.rows());
  for (const auto& [p, mult] : k.entries()) {
    Point img = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (dot(rows[i], p)) img |= Point{1} << i;
    }
    out.add(img, mult);
  }
  return out;
}

namespace {

// K1 keeps coordinates 0..k1-1; d vectors of an empty subspace of K2 are sent
// onto e_0..e_{d-1} and a complement onto fresh coordinates k1, k1+1, ...
PointMultiset embed_over_empty(const PointMultiset& k1, const PointMultiset& k2, std::size_t d) {
  const std::size_t k2dim = k2.ambient();
  const auto empty = empty_subspace_basis(k2);
  std::vector<Point> src(empty.begin(), empty.begin() + static_cast<std::ptrdiff_t>(d));
  SpanBuilder sb;
  for (auto v : src) sb.insert(v);
  for (std::size_t i = 0; i < k2dim && src.size() < k2dim; ++i) {
    if (sb.insert(Point{1} << i)) src.push_back(Point{1} << i);
  }
  const std::size_t target = k1.ambient() + k2dim - d;
  // B has the source vectors as columns; the map is Img * B^{-1}.
  const BitMatrix binv = inverse(BitMatrix::from_columns(src, k2dim));
  std::vector<Point> img(k2dim);
  for (std::size_t i = 0; i < k2dim; ++i) img[i] = i < d ? (Point{1} << i) : (Point{1} << (k1.ambient() + i - d));
  const BitMatrix map = BitMatrix::from_columns(img, target) * binv;
  PointMultiset out = k1.embed(target);
  out.add(apply_linear(k2, map));
  return out;
}

}  // namespace

PointMultiset disjoint_embed(const PointMultiset& k1, const PointMultiset& k2, std::size_t k) {
  if (!k1.is_spanning() || !k2.is_spanning()) throw PreconditionError("disjoint_embed: inputs must span their ambient spaces");
  const auto range = disjoint_embedding_range(k1, k2);
  if (k < range.lo || k > range.hi) {
    throw PreconditionError("disjoint_embed: dimension " + std::to_string(k) + " outside realizable range [" +
                            std::to_string(range.lo) + ", " + std::to_string(range.hi) + "]");
  }
  const std::size_t d = range.hi - k;
  if (empty_subspace_max_dim(k2) >= d) return embed_over_empty(k1, k2, d);
  return embed_over_empty(k2, k1, d);
}

}  // namespace divcodes
