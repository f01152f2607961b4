#pragma once

// Isomorph-free classification of divisible binary codes.
//
// Delta = 2: descent from the even-weight code through codimension-one
// subcodes, keeping projective codes only.
// Delta = 4, 8: dimension-by-dimension lifting. A code of dimension j+1 and
// length n arises from any of its codimension-one subcodes by appending one
// coordinate bit to every column; the lifted column counts are constrained
// so that the result stays delta-divisible. Classes are deduplicated per
// level by canonical key.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "divcodes/canonical.hpp"
#include "divcodes/codes.hpp"

namespace divcodes {

struct ClassificationRecord {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t delta = 0;
  CanonicalKey key;
  WeightDistribution wd;
  bool projective = false;
  std::string origin;

  /// Representative generator decoded from the key.
  LinearCode code() const;
};

struct ClassifyOptions {
  std::size_t workers = 1;
  /// Upper bound on classes held in one level; 0 means unlimited.
  std::size_t max_classes = 0;
};

/// Projective 2-divisible codes of every length 1..n_max, sorted by (n, k, key).
std::vector<ClassificationRecord> classify_2divisible(std::size_t n_max, const ClassifyOptions& options = {});

/// All delta-divisible codes without zero coordinates of every length
/// 1..n_max (delta in {4, 8}), sorted by (n, k, key).
std::vector<ClassificationRecord> classify_divisible_upto(std::size_t delta, std::size_t n_max,
                                                          const ClassifyOptions& options = {});
/// The records of classify_divisible_upto() with length exactly n.
std::vector<ClassificationRecord> classify_divisible(std::size_t delta, std::size_t n, const ClassifyOptions& options = {});

/// (n, k) -> number of records, optionally counting projective ones only.
std::map<std::pair<std::size_t, std::size_t>, std::size_t> count_table(const std::vector<ClassificationRecord>& records,
                                                                       bool projective_only);

/// Builds and validates a record for a delta-divisible code without zero columns.
ClassificationRecord make_record(const PointMultiset& points, std::size_t delta, const std::string& origin);

}  // namespace divcodes
