#pragma once

// Line-delimited JSON store of classification records, one class per line:
// {"n":..,"k":..,"delta":..,"key":"hex","wd":[..],"projective":bool,"origin":".."}

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "divcodes/classify.hpp"

namespace divcodes {

class CodeDatabase {
 public:
  /// Validates the record against its key and inserts it. Returns false if a
  /// record with the same (delta, key) is already present.
  bool insert(const ClassificationRecord& record);
  std::vector<ClassificationRecord> query(std::size_t n, std::size_t k, std::size_t delta) const;
  std::vector<ClassificationRecord> all() const;
  std::size_t size() const { return records_.size(); }

  void load(std::istream& in);
  void save(std::ostream& out) const;
  void load_file(const std::string& path);
  void save_file(const std::string& path) const;

 private:
  std::map<std::pair<std::size_t, CanonicalKey>, ClassificationRecord> records_;
};

/// Throws PreconditionError naming the first violated invariant.
void validate_record(const ClassificationRecord& record);

std::string record_to_json(const ClassificationRecord& record);
ClassificationRecord record_from_json(const std::string& line);

}  // namespace divcodes
