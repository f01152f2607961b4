#include "divcodes/database.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <tuple>

#include "divcodes/error.hpp"

namespace divcodes {

using nlohmann::json;

void validate_record(const ClassificationRecord& record) {
  if (record.delta == 0) throw PreconditionError("record: delta must be positive");
  const CanonicalForm form = form_of(record.key);
  if (form.zeros != 0) throw PreconditionError("record: representative has zero columns");
  if (form.length() != record.n) throw PreconditionError("record: n does not match the key");
  if (form.dim != record.k) throw PreconditionError("record: k does not match the key");
  if (form.is_projective() != record.projective) throw PreconditionError("record: projective flag does not match the key");
  const LinearCode code(form.generator());
  const auto wd = weight_distribution(code);
  if (wd != record.wd) throw PreconditionError("record: weight distribution does not match the key");
  if (!is_divisible(wd, record.delta)) throw PreconditionError("record: code is not delta-divisible");
}

bool CodeDatabase::insert(const ClassificationRecord& record) {
  validate_record(record);
  return records_.try_emplace({record.delta, record.key}, record).second;
}

std::vector<ClassificationRecord> CodeDatabase::query(std::size_t n, std::size_t k, std::size_t delta) const {
  std::vector<ClassificationRecord> out;
  for (const auto& [id, rec] : records_) {
    if (rec.n == n && rec.k == k && rec.delta == delta) out.push_back(rec);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return out;
}

std::vector<ClassificationRecord> CodeDatabase::all() const {
  std::vector<ClassificationRecord> out;
  for (const auto& [id, rec] : records_) out.push_back(rec);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.delta, a.n, a.k, a.key) < std::tie(b.delta, b.n, b.k, b.key);
  });
  return out;
}

std::string record_to_json(const ClassificationRecord& record) {
  json j;
  j["n"] = record.n;
  j["k"] = record.k;
  j["delta"] = record.delta;
  j["key"] = record.key.hex();
  j["wd"] = record.wd.counts;
  j["projective"] = record.projective;
  j["origin"] = record.origin;
  return j.dump();
}

ClassificationRecord record_from_json(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
    ClassificationRecord rec;
    rec.n = j.at("n").get<std::size_t>();
    rec.k = j.at("k").get<std::size_t>();
    rec.delta = j.at("delta").get<std::size_t>();
    rec.key = CanonicalKey::from_hex(j.at("key").get<std::string>());
    rec.wd.counts = j.at("wd").get<std::vector<std::uint64_t>>();
    rec.projective = j.at("projective").get<bool>();
    rec.origin = j.value("origin", "");
    return rec;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("record: malformed JSON: ") + e.what());
  }
}

void CodeDatabase::load(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      insert(record_from_json(line));
    } catch (const PreconditionError& e) {
      throw PreconditionError("database line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void CodeDatabase::save(std::ostream& out) const {
  for (const auto& rec : all()) out << record_to_json(rec) << '\n';
}

void CodeDatabase::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  load(in);
}

void CodeDatabase::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  save(out);
}

}  // namespace divcodes
