#include "divcodes/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "divcodes/error.hpp"

namespace divcodes {

namespace {

constexpr std::size_t kMaxEliminationRows = 200000;

Rational pow2(std::ptrdiff_t e) {
  Rational out = 1;
  const Rational two = e >= 0 ? Rational(2) : Rational(1, 2);
  for (std::ptrdiff_t i = 0; i < std::abs(e); ++i) out *= two;
  return out;
}

// c0 + sum c[i] x_i >= 0 (or == 0), as the combination
// sum mu[j] e_j + sum nu[i] x_i of the system rows e_j and the bounds x_i >= 0.
struct Form {
  std::vector<Rational> c;
  Rational c0;
  std::vector<Rational> mu;
  std::vector<Rational> nu;
};

void axpy(Form& dst, const Rational& a, const Form& src) {
  for (std::size_t i = 0; i < dst.c.size(); ++i) dst.c[i] += a * src.c[i];
  dst.c0 += a * src.c0;
  for (std::size_t j = 0; j < dst.mu.size(); ++j) dst.mu[j] += a * src.mu[j];
  for (std::size_t i = 0; i < dst.nu.size(); ++i) dst.nu[i] += a * src.nu[i];
}

Form scaled(const Form& f, const Rational& a) {
  Form out{std::vector<Rational>(f.c.size()), 0, std::vector<Rational>(f.mu.size()),
           std::vector<Rational>(f.nu.size())};
  axpy(out, a, f);
  return out;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Farkas multipliers in the orientation of verify_certificate().
Certificate to_certificate(const MomentSystem& sys, const Form& f, std::vector<std::size_t> order) {
  Certificate cert;
  cert.eliminated = std::move(order);
  for (std::size_t j = 0; j < sys.rows.size(); ++j) {
    cert.multipliers.push_back(sys.rows[j].relation == MomentRow::Relation::Equal ? Rational(-f.mu[j]) : f.mu[j]);
  }
  return cert;
}

// Divides by the absolute value of the leading nonzero variable coefficient.
std::pair<std::vector<Rational>, Rational> normalized(const Form& f) {
  Rational lead = 0;
  for (const auto& x : f.c) {
    if (x != 0) {
      lead = abs(x);
      break;
    }
  }
  if (lead == 0) lead = 1;
  std::vector<Rational> c;
  for (const auto& x : f.c) c.push_back(x / lead);
  return {c, f.c0 / lead};
}

}  // namespace

MomentSystem moment_system(std::size_t n, std::size_t k, std::size_t delta, const MomentOptions& options) {
  if (delta < 2) throw PreconditionError("moment_system: delta must be at least 2");
  if (k < 1 || k > n) throw PreconditionError("moment_system: requires 1 <= k <= n");
  MomentSystem sys{n, k, delta, {}, {}};
  for (std::size_t w = delta; w <= n; w += delta) sys.weights.push_back(w);
  const auto ki = static_cast<std::ptrdiff_t>(k);
  const Rational nn(static_cast<long long>(n));
  auto moment = [&](std::size_t t) {
    std::vector<Rational> c;
    for (auto w : sys.weights) {
      Rational p = 1;
      for (std::size_t i = 0; i < t; ++i) p *= Rational(static_cast<long long>(w));
      c.push_back(p);
    }
    return c;
  };
  using R = MomentRow::Relation;
  sys.rows.push_back({"count", moment(0), R::Equal, pow2(ki) - 1});
  sys.rows.push_back({"first moment", moment(1), R::Equal, pow2(ki - 1) * nn});
  sys.rows.push_back({"second moment", moment(2), R::Equal, pow2(ki - 2) * nn * (nn + 1)});
  sys.rows.push_back({"third moment", moment(3), R::LessEqual, pow2(ki - 3) * nn * nn * (nn + 3)});
  if (options.all_ones_at_most_one && !sys.weights.empty() && sys.weights.back() == n) {
    std::vector<Rational> c(sys.weights.size(), 0);
    c.back() = 1;
    sys.rows.push_back({"all-ones word", c, R::LessEqual, 1});
  }
  return sys;
}

bool verify_certificate(const MomentSystem& system, const Certificate& cert) {
  if (cert.multipliers.size() != system.rows.size()) return false;
  std::vector<Rational> lhs(system.weights.size(), 0);
  Rational rhs = 0;
  for (std::size_t j = 0; j < system.rows.size(); ++j) {
    const auto& row = system.rows[j];
    const auto& y = cert.multipliers[j];
    if (row.relation == MomentRow::Relation::LessEqual && y < 0) return false;
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += y * row.coeffs[i];
    rhs += y * row.rhs;
  }
  return std::all_of(lhs.begin(), lhs.end(), [](const Rational& x) { return x >= 0; }) && rhs < 0;
}

LpResult moment_lp(std::size_t n, std::size_t k, std::size_t delta, const MomentOptions& options) {
  const auto sys = moment_system(n, k, delta, options);
  const std::size_t vars = sys.weights.size();
  const std::size_t m = sys.rows.size();
  std::vector<Form> eqs;
  std::vector<Form> ineqs;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& row = sys.rows[j];
    Form f{row.coeffs, -row.rhs, std::vector<Rational>(m, 0), std::vector<Rational>(vars, 0)};
    f.mu[j] = 1;
    if (row.relation == MomentRow::Relation::Equal) {
      eqs.push_back(std::move(f));
    } else {
      // rhs - lhs >= 0
      ineqs.push_back(scaled(f, -1));
      ineqs.back().mu[j] = 1;
    }
  }
  for (std::size_t i = 0; i < vars; ++i) {
    Form f{std::vector<Rational>(vars, 0), 0, std::vector<Rational>(m, 0), std::vector<Rational>(vars, 0)};
    f.c[i] = 1;
    f.nu[i] = 1;
    ineqs.push_back(std::move(f));
  }

  std::vector<std::size_t> order;
  std::vector<bool> gone(vars, false);
  auto infeasible = [&](const Form& f) { return LpResult{false, to_certificate(sys, f, order)}; };

  // Substitute the equalities.
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    Form& piv = eqs[e];
    std::size_t v = vars;
    for (std::size_t i = 0; i < vars; ++i) {
      if (!gone[i] && piv.c[i] != 0) {
        v = i;
        break;
      }
    }
    if (v == vars) {
      if (piv.c0 == 0) continue;
      return infeasible(piv.c0 < 0 ? piv : scaled(piv, -1));
    }
    const Rational p = piv.c[v];
    for (std::size_t o = e + 1; o < eqs.size(); ++o) {
      if (eqs[o].c[v] != 0) axpy(eqs[o], -eqs[o].c[v] / p, piv);
    }
    for (auto& f : ineqs) {
      if (f.c[v] != 0) axpy(f, -f.c[v] / p, piv);
    }
    gone[v] = true;
    order.push_back(v);
  }

  // Fourier-Motzkin on the remaining variables.
  for (;;) {
    std::vector<Form> kept;
    std::set<std::pair<std::vector<Rational>, Rational>> seen;
    for (auto& f : ineqs) {
      if (all_zero(f.c)) {
        if (f.c0 < 0) return infeasible(f);
        continue;
      }
      if (seen.insert(normalized(f)).second) kept.push_back(std::move(f));
    }
    ineqs = std::move(kept);
    std::size_t best = vars;
    std::size_t best_cost = 0;
    for (std::size_t i = 0; i < vars; ++i) {
      if (gone[i]) continue;
      std::size_t pos = 0;
      std::size_t neg = 0;
      for (const auto& f : ineqs) {
        pos += f.c[i] > 0;
        neg += f.c[i] < 0;
      }
      const std::size_t cost = pos * neg;
      if (best == vars || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best == vars) return LpResult{true, std::nullopt};
    if (best_cost + ineqs.size() > kMaxEliminationRows) {
      throw BudgetExceeded("moment_lp: elimination exceeds the row budget");
    }
    std::vector<Form> next;
    std::vector<const Form*> pos;
    std::vector<const Form*> neg;
    for (const auto& f : ineqs) {
      if (f.c[best] > 0) {
        pos.push_back(&f);
      } else if (f.c[best] < 0) {
        neg.push_back(&f);
      } else {
        next.push_back(f);
      }
    }
    for (const auto* p : pos) {
      for (const auto* q : neg) {
        Form f = scaled(*p, -q->c[best]);
        axpy(f, p->c[best], *q);
        f.c[best] = 0;
        next.push_back(std::move(f));
      }
    }
    ineqs = std::move(next);
    gone[best] = true;
    order.push_back(best);
  }
}

bool exclude_length(std::size_t n, std::size_t delta, const MomentOptions& options) {
  if (n == 0) return true;
  for (std::size_t k = 1; k <= n; ++k) {
    if (moment_lp(n, k, delta, options).feasible) return false;
  }
  return true;
}

std::uint64_t frobenius(std::uint64_t a, std::uint64_t b) {
  if (a < 2 || b < 2 || std::gcd(a, b) != 1) throw PreconditionError("frobenius: requires coprime a, b >= 2");
  return (a - 1) * (b - 1) - 1;
}

std::uint64_t eq1_bound(std::size_t r) {
  if (r < 1 || r > 30) throw PreconditionError("eq1_bound: r must lie in 1..30");
  const std::uint64_t s = std::uint64_t{1} << (r + 1);
  return frobenius(s - 1, s);
}

std::uint64_t theorem3_bound(std::size_t r) {
  if (r < 1 || r > 30) throw PreconditionError("theorem3_bound: r must lie in 1..30");
  return (std::uint64_t{1} << (2 * r)) - (std::uint64_t{1} << (r - 1)) - 1;
}

bool LengthSet::is_realizable(std::size_t n) const {
  return (threshold != 0 && n >= threshold) || realizable.count(n) > 0;
}

LengthSet length_closure(std::size_t r, const std::set<std::size_t>& seeds, std::size_t horizon) {
  if (r < 1 || r > 10) throw PreconditionError("length_closure: r must lie in 1..10");
  LengthSet out;
  out.r = r;
  const std::size_t delta = std::size_t{1} << r;
  std::vector<std::size_t> gens;
  for (auto s : seeds) {
    if (s > 0) gens.push_back(s);
  }
  std::size_t limit = horizon;
  if (!gens.empty()) limit = std::max(limit, gens.front() * gens.back() + gens.back());
  std::vector<bool> reach(limit + 1, false);
  reach[0] = true;
  for (std::size_t x = 1; x <= limit; ++x) {
    for (auto g : gens) {
      if (g <= x && reach[x - g]) {
        reach[x] = true;
        break;
      }
    }
  }
  if (!gens.empty()) {
    const std::size_t run = gens.front();
    std::size_t streak = 0;
    for (std::size_t x = 1; x <= limit; ++x) {
      streak = reach[x] ? streak + 1 : 0;
      if (streak == run) {
        out.threshold = x + 1 - run;
        break;
      }
    }
  }
  const std::size_t top = out.threshold != 0 ? out.threshold - 1 : horizon;
  for (std::size_t x = 1; x <= top; ++x) {
    const bool excluded = exclude_length(x, delta);
    if (reach[x]) {
      if (excluded) {
        throw VerificationError("length_closure: length " + std::to_string(x) + " is both realizable and excluded");
      }
      out.realizable.insert(x);
    } else if (excluded) {
      out.excluded.insert(x);
    } else {
      out.unknown.insert(x);
    }
  }
  return out;
}

bool pd21_predicate(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1) return false;
  if (k >= 63) return n >= k + 1;
  const std::size_t full = (std::size_t{1} << k) - 1;
  return n >= k + 1 && n <= full && n + 2 != full && n + 1 != full;
}

}  // namespace divcodes
