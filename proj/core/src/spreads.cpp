#include "divcodes/spreads.hpp"

#include <algorithm>
#include <vector>

#include "divcodes/error.hpp"

namespace divcodes {

namespace {

void require_valid(const PartialSpread& spread, const char* what) {
  if (!validate(spread)) throw PreconditionError(std::string(what) + ": not a partial spread");
}

}  // namespace

bool validate(const PartialSpread& spread) {
  if (spread.v == 0 || spread.v > kMaxScanAmbient) return false;
  for (const auto& m : spread.members) {
    if (m.ambient() != spread.v || m.dim() != spread.r) return false;
  }
  for (std::size_t i = 0; i < spread.members.size(); ++i) {
    for (std::size_t j = i + 1; j < spread.members.size(); ++j) {
      if (!spread.members[i].meets_trivially(spread.members[j])) return false;
    }
  }
  return true;
}

PointMultiset holes(const PartialSpread& spread) {
  require_valid(spread, "holes");
  const Point total = Point{1} << spread.v;
  std::vector<bool> covered(total, false);
  for (const auto& m : spread.members) {
    for (auto p : m.points()) covered[p] = true;
  }
  PointMultiset out(spread.v);
  for (Point p = 1; p < total; ++p) {
    if (!covered[p]) out.add(p);
  }
  return out;
}

LinearCode hole_code(const PartialSpread& spread) {
  const auto h = holes(spread);
  if (h.empty()) throw PreconditionError("hole_code: the spread has no holes");
  return points_to_code(h);
}

bool Prop1Report::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Prop1Assertion& a) { return a.passed; });
}

Prop1Report prop1_check(const PartialSpread& spread) {
  const auto h = holes(spread);
  if (h.empty()) throw PreconditionError("prop1_check: the spread has no holes");
  const auto code = points_to_code(h);
  Prop1Report rep;
  rep.n = code.n();
  rep.k = code.k();
  const std::size_t divisor = std::size_t{1} << (spread.r - 1);
  const std::size_t expected_n =
      ((std::size_t{1} << spread.v) - 1) - spread.members.size() * ((std::size_t{1} << spread.r) - 1);
  rep.assertions.push_back({"projective", is_projective(code), ""});
  rep.assertions.push_back(
      {"divisible", is_divisible_pointset(h, divisor), "divisor " + std::to_string(divisor)});
  rep.assertions.push_back(
      {"length", rep.n == expected_n, std::to_string(rep.n) + " vs " + std::to_string(expected_n)});
  rep.assertions.push_back({"dimension", rep.k <= spread.v, std::to_string(rep.k) + " <= " + std::to_string(spread.v)});
  return rep;
}

std::uint64_t max_size(std::size_t v, std::size_t r) {
  if (r < 1 || v < 2 * r + 1 || v % r != 1 % r || v > 62) {
    throw PreconditionError("max_size: requires v >= 2r+1 and v = 1 mod r");
  }
  std::uint64_t s = 1;
  for (std::size_t e = v - r; e >= r + 1; e -= r) s += std::uint64_t{1} << e;
  return s;
}

void greedy_extend(PartialSpread& spread, std::mt19937_64& rng, std::size_t attempts) {
  require_valid(spread, "greedy_extend");
  if (spread.r == 0 || spread.r > spread.v) throw PreconditionError("greedy_extend: bad member dimension");
  const Point mask = (Point{1} << spread.v) - 1;
  std::size_t failures = 0;
  while (failures < attempts) {
    std::vector<Point> gens;
    SpanBuilder sb;
    while (sb.dim() < spread.r) {
      const Point g = rng() & mask;
      if (sb.insert(g)) gens.push_back(g);
    }
    Subspace cand(spread.v, gens);
    const bool ok = std::all_of(spread.members.begin(), spread.members.end(),
                                [&](const Subspace& m) { return m.meets_trivially(cand); });
    if (ok) {
      spread.members.push_back(std::move(cand));
      failures = 0;
    } else {
      ++failures;
    }
  }
}

}  // namespace divcodes
