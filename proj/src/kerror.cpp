#include "kelc/kerror.hpp"

#include <stdexcept>
#include <thread>

#include "kelc/error.hpp"
#include "linalg.hpp"
#include "support_search.hpp"

namespace kelc {
namespace {

std::size_t checked_period(const SequenceFp& s) {
  const std::size_t p = s.modulus;
  const std::size_t n = s.period();
  if (p < 3 || (n != p && n != 2 * p)) {
    throw Error(Errc::kBadPeriod, "period " + std::to_string(n) + " with p = " + std::to_string(p));
  }
  return n;
}

// Rows (+1, n < m0) then (-1, n < m1), one column per support position.
detail::DenseMatrix vanishing_rows(std::uint32_t p, const std::vector<std::size_t>& support,
                                   std::size_t m0, std::size_t m1) {
  const Binomials& binom = binomials_for(p);
  const Modulus& mod = binom.field();
  detail::DenseMatrix a(m0 + m1, support.size());
  for (std::size_t c = 0; c < support.size(); ++c) {
    const std::size_t t = support[c];
    for (std::size_t n = 0; n < m0; ++n) a.at(n, c) = binom.choose(t, n);
    for (std::size_t n = 0; n < m1; ++n) {
      const Residue v = binom.choose(t, n);
      a.at(m0 + n, c) = (t >= n && (t - n) % 2 == 1) ? mod.neg(v) : v;
    }
  }
  return a;
}

std::vector<Residue> vanishing_rhs(const PolyFp& s, std::size_t m0, std::size_t m1) {
  const Modulus mod(s.modulus());
  std::vector<Residue> b;
  b.reserve(m0 + m1);
  for (std::size_t n = 0; n < m0; ++n) b.push_back(mod.neg(hasse_eval(s, n, Point::kPlusOne)));
  for (std::size_t n = 0; n < m1; ++n) b.push_back(mod.neg(hasse_eval(s, n, Point::kMinusOne)));
  return b;
}

std::optional<std::vector<Residue>> solve_on_support(const PolyFp& s,
                                                     const std::vector<std::size_t>& support,
                                                     std::size_t m0, std::size_t m1) {
  const Modulus mod(s.modulus());
  return detail::solve(mod, vanishing_rows(s.modulus(), support, m0, m1),
                       vanishing_rhs(s, m0, m1));
}

}  // namespace

JointMultiplicity max_joint_multiplicity(const PolyFp& s, const std::vector<std::size_t>& support,
                                         std::size_t period) {
  const std::size_t p = s.modulus();
  if (period != p && period != 2 * p) {
    throw Error(Errc::kBadPeriod, "period must be p or 2p");
  }
  const std::size_t cap_plus = p;
  const std::size_t cap_minus = period == 2 * p ? p : 0;
  auto feasible = [&](std::size_t m0, std::size_t m1) {
    return solve_on_support(s, support, m0, m1).has_value();
  };

  JointMultiplicity best;
  std::size_t m1 = 0;
  while (m1 < cap_minus && feasible(0, m1 + 1)) ++m1;
  best = {0, m1, m1};
  for (std::size_t m0 = 1; m0 <= cap_plus; ++m0) {
    if (!feasible(m0, 0)) break;
    while (m1 > 0 && !feasible(m0, m1)) --m1;
    if (!feasible(m0 - 1, m1)) {
      throw std::logic_error("vanishing staircase is not monotone");
    }
    if (m0 + m1 > best.best_sum) best = {m0, m1, m0 + m1};
  }
  return best;
}

std::uint64_t oracle_cost(std::size_t period, std::size_t k) {
  return detail::count_supports(period, k);
}

std::vector<KErrorResult> kerror_profile(const SequenceFp& s, std::size_t k_max,
                                         const OracleOptions& options) {
  const std::size_t n = checked_period(s);
  const PolyFp poly = poly_from_sequence(s);
  const detail::ConstraintSystem sys = detail::build_constraints(poly, n);
  unsigned workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const detail::SearchOutcome found = detail::search_supports(sys, k_max, options.limit, workers);

  std::vector<KErrorResult> rows;
  const detail::SizeBest* best = nullptr;
  for (std::size_t k = 0; k <= k_max; ++k) {
    if (k < found.per_size.size()) {
      const detail::SizeBest& cand = found.per_size[k];
      if (cand.found && (best == nullptr || cand.best_sum > best->best_sum)) best = &cand;
    }
    KErrorResult row;
    row.k = k;
    row.method = "oracle";
    if (best == nullptr) {
      // Nothing visited at all (limit 0): only the trivial bracket is known.
      row.upper = n;
      row.budget_exceeded = true;
      rows.push_back(std::move(row));
      continue;
    }
    row.m0 = best->m0;
    row.m1 = best->m1;
    row.upper = n - best->best_sum;
    row.support.assign(best->support.begin(), best->support.end());
    if (found.truncated) {
      row.budget_exceeded = true;
    } else {
      row.lower = row.upper;
      row.exact = row.upper;
    }
    const auto values = solve_on_support(poly, row.support, row.m0, row.m1);
    if (!values) throw std::logic_error("oracle support lost feasibility on re-solve");
    PolyFp f(s.modulus);
    for (std::size_t i = 0; i < row.support.size(); ++i) {
      f += PolyFp::monomial(s.modulus, row.support[i], (*values)[i]);
    }
    const PolyFp total = poly + f;
    if (root_multiplicity(total, Point::kPlusOne, s.modulus).multiplicity < row.m0 ||
        (row.m1 > 0 && root_multiplicity(total, Point::kMinusOne, s.modulus).multiplicity < row.m1)) {
      throw std::logic_error("oracle witness failed verification");
    }
    row.witness = std::move(f);
    rows.push_back(std::move(row));
  }
  return rows;
}

KErrorResult kerror_oracle(const SequenceFp& s, std::size_t k, const OracleOptions& options) {
  return kerror_profile(s, k, options).back();
}

}  // namespace kelc
