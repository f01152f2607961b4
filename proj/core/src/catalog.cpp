#include "divcodes/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <utility>

#include "divcodes/error.hpp"

namespace divcodes {

namespace {

constexpr Point bit(std::size_t i) { return Point{1} << i; }

// Nonzero vectors of span{bit(lo), ..., bit(lo + dim - 1)}.
std::vector<Point> coordinate_flat(std::size_t lo, std::size_t dim) {
  std::vector<Point> gens;
  for (std::size_t i = 0; i < dim; ++i) gens.push_back(bit(lo + i));
  return span_points(gens);
}

void add_all(PointMultiset& k, const std::vector<Point>& pts) {
  for (auto p : pts) k.add(p);
}

// Base point set coned over a vertex of vector dimension r - 1.
PointMultiset vertex_cone(const PointMultiset& base, std::size_t r, bool include_vertex) {
  if (r == 1) return base;
  return cone(base, r - 2, include_vertex).points;
}

PointMultiset flat_plus_affine(std::size_t r, std::size_t s) {
  const std::size_t k = 2 * r + 3 - s;
  PointMultiset out(k);
  for (auto p : coordinate_flat(0, r + 2)) {
    if (p & bit(r + 1)) out.add(p);
  }
  std::vector<Point> gens;
  for (std::size_t i = 0; i < s; ++i) gens.push_back(bit(i));
  for (std::size_t i = 0; i < r + 1 - s; ++i) gens.push_back(bit(r + 2 + i));
  add_all(out, span_points(gens));
  return out;
}

PointMultiset two_affine_flats(std::size_t r, std::size_t k, std::size_t variant) {
  const std::size_t d = 2 * r + 4 - k;
  const std::size_t m = r + 2 - d;
  PointMultiset out(k);
  for (auto p : coordinate_flat(0, r + 2)) {
    if (p & bit(r + 1)) out.add(p);
  }
  std::vector<Point> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(bit(i));
  for (std::size_t i = 0; i < m; ++i) gens.push_back(bit(r + 2 + i));
  const Point last = bit(r + 1 + m);
  // Variant 0: the second flat's hyperplane at infinity contains the
  // common part of the two spans; variant 1: it meets it in a hyperplane.
  const Point functional = variant == 0 ? last : (last | bit(0));
  for (auto p : span_points(gens)) {
    if (std::popcount(p & functional) % 2 == 1) out.add(p);
  }
  return out;
}

PointMultiset three_flats(std::size_t r, std::size_t k) {
  const std::size_t c = 3 * r + 3 - k;
  PointMultiset out(k);
  add_all(out, coordinate_flat(0, r + 1));
  add_all(out, coordinate_flat(r + 1, r + 1));
  std::vector<Point> gens;
  for (std::size_t i = 0; i < c; ++i) gens.push_back(bit(i) | bit(r + 1 + i));
  for (std::size_t i = 0; i < r + 1 - c; ++i) gens.push_back(bit(2 * r + 2 + i));
  add_all(out, span_points(gens));
  return out;
}

PointMultiset line_plus_basis() {
  PointMultiset out(6);
  add_all(out, coordinate_flat(0, 2));
  out.add(bit(2));
  out.add(bit(3));
  out.add(bit(4));
  out.add(bit(5));
  out.add(bit(2) | bit(3) | bit(4) | bit(5));
  return out;
}

constexpr std::array<std::pair<Family, const char*>, 9> kFamilyNames{{
    {Family::ProjectiveFlat, "projective-flat"},
    {Family::AffineFlat, "affine-flat"},
    {Family::TwoFlats, "two-flats"},
    {Family::FlatPlusAffine, "flat-plus-affine"},
    {Family::SevenFlatsVertex, "seven-flats-vertex"},
    {Family::TwoAffineFlats, "two-affine-flats"},
    {Family::EightFlatsVertex, "eight-flats-vertex"},
    {Family::LineBasisVertex, "line-basis-vertex"},
    {Family::ThreeFlats, "three-flats"},
}};

}  // namespace

LinearCode simplex(std::size_t dim) {
  if (dim < 1 || dim > 20) throw PreconditionError("simplex: dimension must lie in 1..20");
  return points_to_code(PointMultiset::from_points(dim, coordinate_flat(0, dim)));
}

PointMultiset affine_flat(std::size_t dim) {
  if (dim < 1 || dim > 20) throw PreconditionError("affine_flat: dimension must lie in 1..20");
  PointMultiset out(dim + 1);
  for (Point p = 0; p < bit(dim); ++p) out.add(p | bit(dim));
  return out;
}

LinearCode even_weight(std::size_t n) {
  if (n < 3) throw PreconditionError("even_weight: n must be at least 3");
  BitMatrix g(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.set(i, i);
    g.set(i, n - 1);
  }
  return LinearCode(g);
}

PointMultiset projective_basis(std::size_t k) {
  if (k < 1 || k > 64) throw PreconditionError("projective_basis: k must lie in 1..64");
  PointMultiset out(k);
  for (std::size_t i = 0; i < k; ++i) out.add(bit(i));
  if (k > 1) out.add(k == 64 ? ~Point{0} : bit(k) - 1);
  return out;
}

std::string family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  throw PreconditionError("family_name: unknown family");
}

std::optional<Family> parse_family(const std::string& name) {
  for (const auto& [fam, n] : kFamilyNames) {
    if (name == n) return fam;
  }
  return std::nullopt;
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& [fam, name] : kFamilyNames) out.push_back(fam);
  return out;
}

CatalogEntry make_entry(Family f, std::size_t r, std::size_t s, std::size_t k, std::size_t variant) {
  if (r < 1 || r > 6) throw PreconditionError("make_entry: r must lie in 1..6");
  CatalogEntry e{f, r, s, k, variant, 0, 0, std::size_t{1} << r};
  const std::size_t flat = (std::size_t{1} << (r + 1)) - 1;
  auto bad = [&](const char* what) { throw PreconditionError(family_name(f) + ": " + what); };
  switch (f) {
    case Family::ProjectiveFlat:
      e.expected_n = flat;
      e.expected_k = r + 1;
      break;
    case Family::AffineFlat:
      e.expected_n = flat + 1;
      e.expected_k = r + 2;
      break;
    case Family::TwoFlats:
      e.expected_n = 2 * flat;
      e.expected_k = 2 * r + 2;
      break;
    case Family::FlatPlusAffine:
      if (s > r + 1) bad("s must lie in 0..r+1");
      e.expected_n = 2 * flat + 1;
      e.expected_k = 2 * r + 3 - s;
      break;
    case Family::SevenFlatsVertex:
      e.expected_n = 2 * flat + 1;
      e.expected_k = r + 5;
      break;
    case Family::TwoAffineFlats:
      if (k < r + 3 || k > 2 * r + 4) bad("k must lie in r+3..2r+4");
      if (variant > 1 || (variant == 1 && k == 2 * r + 4)) bad("variant out of range");
      e.expected_n = 2 * flat + 2;
      e.expected_k = k;
      break;
    case Family::EightFlatsVertex:
      e.expected_n = 2 * flat + 2;
      e.expected_k = r + 6;
      break;
    case Family::LineBasisVertex:
      e.expected_n = 2 * flat + 2;
      e.expected_k = r + 5;
      break;
    case Family::ThreeFlats:
      if (k < 2 * r + 2 || k > 3 * r + 3) bad("k must lie in 2r+2..3r+3");
      e.expected_n = 3 * flat;
      e.expected_k = k;
      break;
  }
  return e;
}

std::vector<CatalogEntry> catalog_entries(std::size_t r) {
  std::vector<CatalogEntry> out;
  out.push_back(make_entry(Family::ProjectiveFlat, r));
  out.push_back(make_entry(Family::AffineFlat, r));
  out.push_back(make_entry(Family::TwoFlats, r));
  for (std::size_t s = 0; s <= r + 1; ++s) out.push_back(make_entry(Family::FlatPlusAffine, r, s));
  out.push_back(make_entry(Family::SevenFlatsVertex, r));
  for (std::size_t k = r + 3; k <= 2 * r + 4; ++k) {
    out.push_back(make_entry(Family::TwoAffineFlats, r, 0, k, 0));
    if (k < 2 * r + 4) out.push_back(make_entry(Family::TwoAffineFlats, r, 0, k, 1));
  }
  out.push_back(make_entry(Family::EightFlatsVertex, r));
  out.push_back(make_entry(Family::LineBasisVertex, r));
  for (std::size_t k = 2 * r + 2; k <= 3 * r + 3; ++k) out.push_back(make_entry(Family::ThreeFlats, r, 0, k));
  return out;
}

PointMultiset family(const CatalogEntry& entry) {
  const auto e = make_entry(entry.family, entry.r, entry.s, entry.k, entry.variant);
  const std::size_t r = e.r;
  PointMultiset out;
  switch (e.family) {
    case Family::ProjectiveFlat:
      out = PointMultiset::from_points(r + 1, coordinate_flat(0, r + 1));
      break;
    case Family::AffineFlat:
      out = affine_flat(r + 1);
      break;
    case Family::TwoFlats:
      out = PointMultiset(2 * r + 2);
      add_all(out, coordinate_flat(0, r + 1));
      add_all(out, coordinate_flat(r + 1, r + 1));
      break;
    case Family::FlatPlusAffine:
      out = flat_plus_affine(r, e.s);
      break;
    case Family::SevenFlatsVertex:
      out = vertex_cone(projective_basis(6), r, true);
      break;
    case Family::TwoAffineFlats:
      out = two_affine_flats(r, e.k, e.variant);
      break;
    case Family::EightFlatsVertex:
      out = vertex_cone(projective_basis(7), r, false);
      break;
    case Family::LineBasisVertex:
      out = vertex_cone(line_plus_basis(), r, false);
      break;
    case Family::ThreeFlats:
      out = three_flats(r, e.k);
      break;
  }
  if (out.size() != e.expected_n || out.ambient() != e.expected_k || !out.is_set() || !out.is_spanning() ||
      !is_divisible_pointset(out, e.expected_delta)) {
    throw VerificationError(family_name(e.family) + ": construction failed its parameter check");
  }
  return out;
}

PointMultiset two_weight_45() {
  const auto basis = projective_basis(8).points();
  PointMultiset out(8);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out.add(basis[i]);
    for (std::size_t j = i + 1; j < basis.size(); ++j) out.add(basis[i] ^ basis[j]);
  }
  return out;
}

PointMultiset example19(std::size_t variant) {
  // Line spread of the solid on coordinates 0..3, points written as 4-bit masks.
  constexpr std::array<std::array<Point, 2>, 5> kSpread{{{1, 2}, {4, 8}, {5, 10}, {6, 11}, {7, 9}}};
  std::array<Point, 4> lift{};
  switch (variant) {
    case 1:
      lift = {bit(4), bit(5), bit(6), bit(4) | bit(5) | bit(6)};
      break;
    case 2:
      lift = {bit(4), bit(5), bit(4) | bit(5), bit(6)};
      break;
    case 3:
      lift = {bit(4), bit(5), bit(6), bit(7)};
      break;
    default:
      throw PreconditionError("example19: variant must be 1, 2 or 3");
  }
  PointMultiset out(variant == 3 ? 8 : 7);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto [a, b] = kSpread[i];
    for (Point x : {Point{0}, a, b, a ^ b}) out.add(lift[i] | x);
  }
  const auto [a, b] = kSpread[4];
  for (Point x : {a, b, a ^ b}) out.add(x);
  return out;
}

LinearCode example2_code(std::size_t k) {
  std::vector<std::string> rows;
  if (k == 6) {
    rows = {"111100000000000", "110011000000000", "110000110000000", "110000001100000",
            "110000000011000", "110000000000110", "101010101010101"};
  } else if (k == 7) {
    rows = {"1111000000000000", "1100110000000000", "1100001100000000", "1100000011000000",
            "1100000000110000", "1100000000001100", "1100000000000011", "1010101010101010"};
  } else {
    throw PreconditionError("example2_code: k must be 6 or 7");
  }
  return LinearCode(BitMatrix::from_strings(rows));
}

namespace {

std::size_t gcd_power_of_two(const std::vector<std::uint64_t>& counts) {
  std::size_t g = 0;
  for (std::size_t w = 1; w < counts.size(); ++w) {
    if (counts[w] != 0) g = std::gcd(g, w);
  }
  return g == 0 ? 0 : (g & (~g + 1));
}

}  // namespace

namespace {

PointMultiset concatenated_points(const std::vector<std::vector<std::uint32_t>>& outer_columns, const FieldRep& field) {
  if (outer_columns.empty()) throw PreconditionError("concatenate: no outer columns");
  const std::size_t e = field.m;
  const std::size_t len = outer_columns.front().size();
  if (e < 1 || len * e > 24 || len * e < 1) throw PreconditionError("concatenate: ambient dimension out of range");
  const std::uint32_t q = 1U << e;
  for (const auto& col : outer_columns) {
    if (col.size() != len) throw PreconditionError("concatenate: ragged outer columns");
    for (auto x : col) {
      if (x >= q) throw PreconditionError("concatenate: entry outside the field");
    }
  }
  PointMultiset pts(len * e);
  for (const auto& col : outer_columns) {
    for (std::uint32_t lambda = 1; lambda < q; ++lambda) {
      Point p = 0;
      for (std::size_t i = 0; i < len; ++i) p |= Point{field.mul(lambda, col[i])} << (e * i);
      if (p == 0) throw PreconditionError("concatenate: zero outer column");
      pts.add(p);
    }
  }
  return pts;
}

// 2^(e-1) times the largest power of two dividing every outer weight,
// with the outer weights found by enumerating all messages.
std::size_t concatenated_divisor(const std::vector<std::vector<std::uint32_t>>& outer_columns, const FieldRep& field) {
  const std::size_t e = field.m;
  const std::size_t len = outer_columns.front().size();
  const std::uint32_t q = 1U << e;
  std::vector<std::uint64_t> outer(outer_columns.size() + 1, 0);
  const std::uint64_t messages = std::uint64_t{1} << (e * len);
  for (std::uint64_t msg = 1; msg < messages; ++msg) {
    std::size_t w = 0;
    for (const auto& col : outer_columns) {
      std::uint32_t s = 0;
      for (std::size_t i = 0; i < len; ++i) {
        s ^= field.mul(static_cast<std::uint32_t>((msg >> (e * i)) & (q - 1)), col[i]);
      }
      if (s != 0) ++w;
    }
    ++outer[w];
  }
  return gcd_power_of_two(outer) << (e - 1);
}

}  // namespace

LinearCode concatenate(const std::vector<std::vector<std::uint32_t>>& outer_columns, const FieldRep& field) {
  const auto pts = concatenated_points(outer_columns, field);
  const std::size_t divisor = concatenated_divisor(outer_columns, field);
  if (divisor == 0 || !is_divisible_pointset(pts, divisor)) {
    throw VerificationError("concatenate: result is not " + std::to_string(divisor) + "-divisible");
  }
  return points_to_code(pts);
}

std::vector<std::vector<std::uint32_t>> ovoid_points() {
  const auto f = field_rep(2);
  const std::uint32_t w = f.exp[1];
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t v = 1; v < 256; ++v) {
    std::vector<std::uint32_t> x{v & 3, (v >> 2) & 3, (v >> 4) & 3, (v >> 6) & 3};
    const auto lead = *std::find_if(x.begin(), x.end(), [](std::uint32_t c) { return c != 0; });
    if (lead != 1) continue;
    const std::uint32_t qv =
        f.mul(x[0], x[1]) ^ f.mul(x[2], x[2]) ^ f.mul(x[2], x[3]) ^ f.mul(w, f.mul(x[3], x[3]));
    if (qv == 0) out.push_back(x);
  }
  if (out.size() != 17) throw VerificationError("ovoid_points: quadric does not have 17 points");
  return out;
}

LinearCode ovoid_concat() { return concatenate(ovoid_points(), field_rep(2)); }

std::vector<std::vector<std::uint32_t>> projective_line_points(const FieldRep& field) {
  std::vector<std::vector<std::uint32_t>> out{{0, 1}};
  for (std::uint32_t t = 0; t < (1U << field.m); ++t) out.push_back({1, t});
  return out;
}

std::vector<std::vector<std::uint32_t>> hyperoval_points() {
  const auto f = field_rep(3);
  std::vector<std::vector<std::uint32_t>> out{{0, 0, 1}, {0, 1, 0}};
  for (std::uint32_t t = 0; t < 8; ++t) out.push_back({1, t, f.mul(t, t)});
  return out;
}

PointMultiset switched_concatenation(const std::vector<std::vector<std::uint32_t>>& outer_columns,
                                     const FieldRep& field, std::size_t switches) {
  const auto base = concatenated_points(outer_columns, field);
  if (switches > outer_columns.size()) throw PreconditionError("switched_concatenation: too many switches");
  const std::size_t e = field.m;
  const std::size_t amb = base.ambient();
  if (amb + switches > kMaxScanAmbient) throw PreconditionError("switched_concatenation: ambient dimension too large");
  PointMultiset out = base.embed(amb + switches);
  for (std::size_t i = 0; i < switches; ++i) {
    const Point fresh = bit(amb + i);
    out.add(fresh);
    for (std::uint32_t lambda = 1; lambda < (1U << e); ++lambda) {
      Point p = 0;
      for (std::size_t j = 0; j < outer_columns[i].size(); ++j) {
        p |= Point{field.mul(lambda, outer_columns[i][j])} << (e * j);
      }
      out.remove(p);
      out.add(p | fresh);
    }
  }
  const std::size_t delta = std::size_t{1} << e;
  if (!out.is_set() || !is_divisible_pointset(out, delta)) {
    throw VerificationError("switched_concatenation: result is not a " + std::to_string(delta) + "-divisible set");
  }
  return out;
}

std::vector<LengthWitness> length_witnesses(std::size_t r) {
  if (r < 1 || r > 3) throw PreconditionError("length_witnesses: r must lie in 1..3");
  std::vector<LengthWitness> out;
  const std::size_t delta = std::size_t{1} << r;
  auto add = [&](const PointMultiset& k, std::string what) {
    if (!k.is_set() || !is_divisible_pointset(k, delta)) {
      throw VerificationError("length_witnesses: " + what + " failed verification");
    }
    out.push_back({k.size(), std::move(what)});
  };
  for (const auto& e : catalog_entries(r)) {
    std::string what = family_name(e.family) + " r=" + std::to_string(r);
    if (e.family == Family::FlatPlusAffine) what += " s=" + std::to_string(e.s);
    if (e.family == Family::TwoAffineFlats || e.family == Family::ThreeFlats) what += " k=" + std::to_string(e.k);
    if (e.family == Family::TwoAffineFlats) what += " variant=" + std::to_string(e.variant);
    add(family(e), what);
  }
  if (r == 1) {
    for (std::size_t n = 3; n <= 5; ++n) add(code_to_points(even_weight(n)), "even-weight n=" + std::to_string(n));
    std::stable_sort(out.begin(), out.end(), [](const LengthWitness& a, const LengthWitness& b) { return a.n < b.n; });
    return out;
  }
  const auto field = field_rep(static_cast<unsigned>(r));
  const auto line = projective_line_points(field);
  for (std::size_t j = 0; j <= line.size(); ++j) {
    add(switched_concatenation(line, field, j), "switched PG(1," + std::to_string(delta) + ") j=" + std::to_string(j));
  }
  if (r == 2) {
    for (std::size_t v = 1; v <= 3; ++v) add(example19(v), "example19 variant " + std::to_string(v));
  } else {
    add(two_weight_45(), "two-weight-45");
    add(code_to_points(ovoid_concat()), "ovoid-concat");
    const auto oval = hyperoval_points();
    for (std::size_t j = 0; j <= oval.size(); ++j) {
      add(switched_concatenation(oval, field, j), "switched hyperoval j=" + std::to_string(j));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const LengthWitness& a, const LengthWitness& b) { return a.n < b.n; });
  return out;
}

std::set<std::size_t> reported_lengths(std::size_t r) {
  if (r == 3) return {49, 50};
  return {};
}

PartialSpread corollary2_spread(std::size_t v, std::size_t r) {
  if (r < 2 || v < 2 * r + 1 || v % r != 1 || v > kMaxScanAmbient) {
    throw PreconditionError("corollary2_spread: requires r >= 2, v >= 2r+1, v = 1 mod r, v <= 24");
  }
  PartialSpread out{v, r, {}};
  // Members sit in the trailing coordinates cur..v-1; each step prepends r coordinates.
  std::size_t cur = v - (2 * r + 1);
  {
    std::vector<Point> gens;
    for (std::size_t i = 0; i < r; ++i) gens.push_back(bit(cur + r + 1 + i));
    out.members.emplace_back(v, gens);
  }
  for (;;) {
    const std::size_t m = v - cur - r;
    const auto field = field_rep(static_cast<unsigned>(m));
    for (const auto& a : field.elements) {
      std::vector<Point> gens;
      for (std::size_t j = 0; j < r; ++j) {
        Point g = bit(cur + j);
        for (std::size_t i = 0; i < m; ++i) {
          if (a.get(i, j)) g |= bit(cur + r + i);
        }
        gens.push_back(g);
      }
      out.members.emplace_back(v, gens);
    }
    if (cur == 0) break;
    cur -= r;
  }
  if (out.members.size() != max_size(v, r) || !validate(out)) {
    throw VerificationError("corollary2_spread: construction failed its check");
  }
  return out;
}

}  // namespace divcodes
