#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "divcodes/bounds.hpp"
#include "divcodes/catalog.hpp"
#include "divcodes/classify.hpp"
#include "divcodes/codes.hpp"
#include "divcodes/database.hpp"
#include "divcodes/error.hpp"
#include "divcodes/geometry.hpp"
#include "divcodes/matrix_io.hpp"
#include "divcodes/spreads.hpp"

namespace divcodes::cli {

namespace {

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw PreconditionError(std::string("missing required flag ") + flag);
  return *v;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? ", " : "") << xs[i];
  return s.str();
}

// Writes `text` to job.out if set, else to `out`.
void emit(const JobConfig& job, const std::string& text, std::ostream& out) {
  if (job.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(job.out);
  if (!f) throw std::runtime_error("cannot write " + job.out);
  f << text;
}

void print_table(const std::vector<ClassificationRecord>& recs, std::ostream& out) {
  const auto table = count_table(recs, true);
  if (table.empty()) {
    out << "no projective codes\n";
    return;
  }
  std::size_t kmin = SIZE_MAX;
  std::size_t kmax = 0;
  std::map<std::size_t, std::size_t> totals;
  for (const auto& [nk, c] : table) {
    kmin = std::min(kmin, nk.second);
    kmax = std::max(kmax, nk.second);
    totals[nk.first] += c;
  }
  std::size_t w = 3;
  for (const auto& [n, t] : totals) w = std::max(w, std::to_string(t).size() + 1);
  out << std::setw(4) << "n" << " |" << std::setw(w + 2) << "\u03a3" << " | k=";
  for (auto k = kmin; k <= kmax; ++k) out << std::setw(w) << k;
  out << '\n';
  for (const auto& [n, t] : totals) {
    out << std::setw(4) << n << " |" << std::setw(w + 1) << t << " |   ";
    for (auto k = kmin; k <= kmax; ++k) {
      const auto it = table.find({n, k});
      out << std::setw(w) << (it == table.end() ? std::string() : std::to_string(it->second));
    }
    out << '\n';
  }
}

}  // namespace

std::string format_ranges(const std::set<std::size_t>& values) {
  if (values.empty()) return "none";
  std::ostringstream s;
  bool first = true;
  for (auto it = values.begin(); it != values.end();) {
    auto lo = *it;
    auto hi = lo;
    for (++it; it != values.end() && *it == hi + 1; ++it) hi = *it;
    s << (first ? "" : ", ");
    first = false;
    if (hi == lo) {
      s << lo;
    } else if (hi == lo + 1) {
      s << lo << ", " << hi;
    } else {
      s << lo << ".." << hi;
    }
  }
  return s.str();
}

int cmd_check(const JobConfig& job, std::ostream& out, std::ostream& err) {
  const std::size_t delta = need(job.delta, "--delta");
  if (job.input.empty()) throw PreconditionError("check needs a matrix file");
  const BitMatrix g = read_matrix_file(job.input);
  const LinearCode code = LinearCode::from_spanning_rows(g);
  if (code.k() < g.rows()) {
    err << "warning: generator has rank " << code.k() << " < " << g.rows() << " rows; using the row space\n";
  }
  const auto wd = weight_distribution(code);
  const bool proj = is_projective(code);
  const bool div = is_divisible(wd, delta);
  const auto dual_wd = macwilliams(wd, code.k());
  out << "n: " << code.n() << "\nk: " << code.k() << "\nprojective: " << (proj ? "yes" : "no") << "\n"
      << "divisible by " << delta << ": " << (div ? "yes" : "no") << "\nweights: " << join(wd.support())
      << "\nweight distribution:";
  for (auto w : wd.support()) out << ' ' << w << ':' << wd.counts[w];
  out << "\ndual distance: ";
  if (dual_wd.min_distance() == 0) {
    out << "none";
  } else {
    out << dual_wd.min_distance();
  }
  out << "\nself-dual: " << (code.n() == 2 * code.k() && dual(code) == code ? "yes" : "no") << '\n';
  return proj && div ? kOk : kVerifyFailed;
}

int cmd_classify(const JobConfig& job, std::ostream& out, std::ostream&) {
  const std::size_t delta = need(job.delta, "--delta");
  const std::size_t n = need(job.n, "--n");
  if (delta != 2 && delta != 4 && delta != 8) throw PreconditionError("classify: --delta must be 2, 4 or 8");
  const ClassifyOptions opts{job.workers, job.budget};
  const auto recs = delta == 2 ? classify_2divisible(n, opts) : classify_divisible_upto(delta, n, opts);
  print_table(recs, out);
  if (!job.out.empty()) {
    CodeDatabase db;
    for (const auto& r : recs) db.insert(r);
    const std::string tmp = job.out + ".tmp";
    db.save_file(tmp);
    std::filesystem::rename(tmp, job.out);
  }
  return kOk;
}

namespace {

std::string normalize(std::string name) {
  std::replace(name.begin(), name.end(), '_', '-');
  return name;
}

LinearCode construct_code(const JobConfig& job) {
  const std::string name = normalize(job.family);
  if (name.empty()) throw PreconditionError("missing required flag --family");
  if (name == "two-weight-45") return points_to_code(two_weight_45());
  if (name == "ovoid-concat") return ovoid_concat();
  if (name == "golay24") return golay24();
  if (name == "simplex") return simplex(need(job.k, "--k"));
  if (name == "example19") return points_to_code(example19(need(job.variant, "--variant")));
  if (name == "example2") return example2_code(need(job.k, "--k"));
  const auto f = parse_family(name);
  if (!f) throw PreconditionError("unknown family " + job.family);
  const auto entry = make_entry(*f, need(job.r, "--r"), job.s.value_or(0), job.k.value_or(0), job.variant.value_or(0));
  return points_to_code(family(entry));
}

}  // namespace

int cmd_construct(const JobConfig& job, std::ostream& out, std::ostream& err) {
  const LinearCode code = construct_code(job);
  err << "constructed [" << code.n() << "," << code.k() << "]\n";
  emit(job, format_matrix(code.gen()), out);
  return kOk;
}

int cmd_spread(const JobConfig& job, std::ostream& out, std::ostream&) {
  const std::size_t v = need(job.v, "--v");
  const std::size_t r = need(job.r, "--r");
  PartialSpread spread = corollary2_spread(v, r);
  if (job.greedy > 0) {
    // Random non-extremal spread: keep a prefix, then extend greedily.
    std::mt19937_64 rng(job.seed);
    if (job.greedy < spread.members.size()) spread.members.erase(spread.members.begin() + job.greedy, spread.members.end());
    greedy_extend(spread, rng);
  }
  const bool valid = validate(spread);
  const auto hole_set = holes(spread);
  out << "v: " << v << "\nr: " << r << "\nmembers: " << spread.members.size() << "\nvalid: " << (valid ? "yes" : "no")
      << "\nholes: " << hole_set.size() << '\n';
  int rc = valid ? kOk : kVerifyFailed;
  if (job.verify) {
    const auto report = prop1_check(spread);
    out << "hole code: [" << report.n << "," << report.k << "]\n";
    for (const auto& a : report.assertions) {
      out << (a.passed ? "PASS " : "FAIL ") << a.name;
      if (!a.detail.empty()) out << " (" << a.detail << ")";
      out << '\n';
    }
    if (!report.passed()) rc = kVerifyFailed;
  }
  if (!job.out.empty() && hole_set.size() > 0) emit(job, format_matrix(hole_code(spread).gen()), out);
  return rc;
}

int cmd_bounds(const JobConfig& job, std::ostream& out, std::ostream&) {
  const std::size_t n = need(job.n, "--n");
  const std::size_t delta = need(job.delta, "--delta");
  std::size_t lo = 1;
  std::size_t hi = n;
  if (job.k) lo = hi = *job.k;
  bool any = false;
  for (auto k = lo; k <= hi; ++k) {
    const auto res = moment_lp(n, k, delta);
    out << "[" << n << "," << k << "] delta=" << delta << ": " << (res.feasible ? "Feasible" : "Infeasible") << '\n';
    any = any || res.feasible;
    if (res.certificate) {
      const auto sys = moment_system(n, k, delta);
      for (std::size_t j = 0; j < sys.rows.size(); ++j) {
        out << "  y[" << sys.rows[j].name << "] = " << res.certificate->multipliers[j] << '\n';
      }
      out << "  certificate " << (verify_certificate(sys, *res.certificate) ? "verified" : "INVALID") << '\n';
    }
  }
  if (!job.k) out << "length " << n << ": " << (any ? "not excluded" : "excluded") << '\n';
  return kOk;
}

int cmd_lengths(const JobConfig& job, std::ostream& out, std::ostream&) {
  const std::size_t r = need(job.r, "--r");
  if (r < 1 || r > 3) throw PreconditionError("lengths: --r must lie in 1..3");
  std::set<std::size_t> seeds;
  for (const auto& w : length_witnesses(r)) seeds.insert(w.n);
  const auto reported = reported_lengths(r);
  seeds.insert(reported.begin(), reported.end());
  const std::size_t horizon = theorem3_bound(r) + (std::size_t{1} << (r + 1));
  const auto ls = length_closure(r, seeds, horizon);
  out << "r: " << r << "\ndelta: " << (std::size_t{1} << r) << "\nrealizable: ";
  if (!ls.realizable.empty()) out << format_ranges(ls.realizable) << (ls.threshold != 0 ? ", " : "");
  if (ls.threshold != 0) out << ">=" << ls.threshold;
  out << "\nexcluded: " << format_ranges(ls.excluded) << "\nunknown: " << format_ranges(ls.unknown) << '\n';
  if (!reported.empty()) out << "reported without construction: " << format_ranges(reported) << '\n';
  return kOk;
}

}  // namespace divcodes::cli
