#include "kelc/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "kelc/error.hpp"
#include "kelc/kerror.hpp"
#include "kelc/poly.hpp"
#include "kelc/predictor.hpp"
#include "kelc/witness.hpp"

namespace kelc {
namespace {

class Recorder {
 public:
  Recorder(VerifyReport& report, std::string triple)
      : report_(report), triple_(std::move(triple)) {}

  void add(std::string name, bool ok, std::string detail) {
    report_.checks.push_back(
        {triple_, std::move(name), ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(detail)});
  }
  void skip(std::string name, std::string detail) {
    report_.checks.push_back({triple_, std::move(name), CheckStatus::kSkipped, std::move(detail)});
  }

 private:
  VerifyReport& report_;
  std::string triple_;
};

// Largest k <= cap whose full enumeration fits the budget, or nullopt.
std::optional<std::size_t> affordable_k(std::size_t period, std::size_t cap,
                                        std::uint64_t budget) {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k <= cap; ++k) {
    if (oracle_cost(period, k) > budget) break;
    best = k;
  }
  return best;
}

std::vector<std::size_t> exact_values(const std::vector<KErrorResult>& rows) {
  std::vector<std::size_t> out;
  for (const KErrorResult& r : rows) {
    if (!r.exact) break;
    out.push_back(*r.exact);
  }
  return out;
}

std::vector<std::size_t> run_profile(const SequenceFp& s, std::size_t cap,
                                     const VerifyOptions& options) {
  const auto k = affordable_k(s.period(), cap, options.budget);
  if (!k) return {};
  return exact_values(kerror_profile(s, *k, {options.budget, options.workers}));
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string describe(const Prediction& pr) {
  std::ostringstream os;
  if (pr.kind == PredictionKind::kExact) {
    os << pr.lo;
  } else {
    os << "[" << pr.lo << ", " << pr.hi << "]";
  }
  return os.str();
}

bool congruent(const PolyFp& a, const PolyFp& b, Point point, std::size_t order) {
  const PolyFp d = a - b;
  return root_multiplicity(d, point, order).multiplicity >= order;
}

void check_identities(const PrimeParams& params, const Triple& t, Recorder& rec) {
  const std::uint32_t p = params.p;
  const PolyFp su = poly_from_sequence(build_u(params, t));
  const PolyFp sq = poly_from_sequence(build_q(params, t));
  const PolyFp sv = poly_from_sequence(build_v(params, t));
  const PolyFp sj = class_poly(params, t.j);
  const PolyFp sm = class_poly(params, t.m);
  const PolyFp sl = class_poly(params, t.l);
  const PolyFp one = PolyFp::monomial(p, 0);
  const PolyFp xp = PolyFp::monomial(p, p);

  const PolyFp full = (xp + one) * sj + xp * sm + sl + one;
  rec.add("u-decomposition", su == full, "S_u against the class-polynomial form mod x^2p - 1");
  const PolyFp plus_side = sj.scaled(2) + sm + sl + one;
  const PolyFp minus_side = sl - sm + one;
  rec.add("u-at-plus-one", congruent(su, plus_side, Point::kPlusOne, p), "mod (x-1)^p");
  rec.add("u-at-minus-one", congruent(su, minus_side, Point::kMinusOne, p), "mod (x+1)^p");
  rec.add("q-congruence", congruent(sq, plus_side, Point::kPlusOne, p), "mod (x-1)^p");
  rec.add("v-congruence", congruent(sv, sm - sl + one, Point::kPlusOne, p), "mod (x-1)^p");
}

// S_n = -1/4 + (x - 1)^a E_n = 1/4 + (x + 1)^a F_n with E_n(1), F_n(-1) nonzero.
// Every element of H_n is odd, so S_n(-1) = -(p-1)/4 = 1/4.
void check_class_polys(const PrimeParams& params, Recorder& rec) {
  const Modulus mod(params.p);
  const PolyFp quarter = PolyFp::monomial(params.p, 0, mod.inv(4));
  bool ok = true;
  std::ostringstream os;
  for (int n = 0; n < 4; ++n) {
    const PolyFp s = class_poly(params, n);
    const std::size_t m0 = root_multiplicity(s + quarter, Point::kPlusOne, params.p).multiplicity;
    const std::size_t m1 = root_multiplicity(s - quarter, Point::kMinusOne, params.p).multiplicity;
    ok = ok && m0 == params.quarter() && m1 == params.quarter();
    os << (n ? " " : "") << "S" << n << ":(" << m0 << "," << m1 << ")";
  }
  rec.add("class-multiplicity", ok,
          os.str() + " for S_n + 1/4 at +1 and S_n - 1/4 at -1, expected " +
              std::to_string(params.quarter()));
}

void check_lnov(const PrimeParams& params, const VerifyOptions& options, Recorder& rec) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Residue> dist(0, params.p - 1);
  std::size_t bad = 0;
  std::string first_bad;
  for (std::size_t i = 0; i < options.lnov_samples; ++i) {
    std::array<Residue, 4> c{dist(rng), dist(rng), dist(rng), dist(rng)};
    const std::size_t m = lnov_multiplicity(c, params);
    if (!lnov_admissible(m, params.p)) {
      if (bad++ == 0) {
        first_bad = "c=(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                    std::to_string(c[2]) + "," + std::to_string(c[3]) + ") -> " +
                    std::to_string(m);
      }
    }
  }
  rec.add("class-combination-multiplicity", bad == 0,
          std::to_string(options.lnov_samples) + " samples, seed " + std::to_string(options.seed) +
              (bad ? ", first counterexample " + first_bad : ""));
}

void check_aux_table(SequenceKind kind, std::uint32_t p, const std::vector<std::size_t>& values,
                     std::size_t wanted, Recorder& rec) {
  const std::string name = std::string(to_string(kind)) + "-table";
  if (values.empty()) {
    rec.skip(name, "oracle budget too small");
    return;
  }
  bool ok = true;
  std::ostringstream bad;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const Prediction pr = predict_aux(kind, p, k);
    if (!pr.contains(values[k])) {
      ok = false;
      bad << " k=" << k << ": " << values[k] << " not in " << describe(pr);
    }
  }
  const std::string detail = "L_0..L_" + std::to_string(values.size() - 1) + " = " + join(values);
  if (values.size() < wanted) {
    rec.add(name, ok, detail + " (profile truncated by budget)" + bad.str());
  } else {
    rec.add(name, ok, detail + bad.str());
  }
}

void check_triple(std::uint32_t p, const Triple& t, std::optional<std::uint32_t> theta,
                  const VerifyOptions& options, VerifyReport& report) {
  Recorder rec(report, t.str());
  const GatedConfig cfg = resolve_gated_params(p, t, theta);
  rec.add("gate", cfg.gate.gated,
          cfg.gate.gated ? "theta = " + std::to_string(cfg.params.theta) : cfg.gate.diagnosis);
  if (!cfg.gate.gated) return;
  const PrimeParams& params = cfg.params;
  const std::size_t a = params.quarter();
  const SequenceFp u = build_u(params, t);
  rec.add("balance", u.weight() == p, "weight " + std::to_string(u.weight()));
  rec.add("optimal-autocorrelation", autocorrelation_profile(u).optimal, "");
  check_identities(params, t, rec);

  const std::size_t lc = linear_complexity(u);
  rec.add("linear-complexity", lc == (7 * p + 1) / 4,
          std::to_string(lc) + ", expected " + std::to_string((7 * p + 1) / 4));

  const std::vector<std::size_t> lu = run_profile(u, p, options);
  const std::vector<std::size_t> lq = run_profile(build_q(params, t), p, options);
  const std::vector<std::size_t> lv = run_profile(build_v(params, t), p, options);
  check_aux_table(SequenceKind::kQ, p, lq, p + 1, rec);
  check_aux_table(SequenceKind::kV, p, lv, p + 1, rec);

  if (lu.size() > 1) {
    const std::size_t want = p == 5 ? 8 : (7 * p + 1) / 4;
    rec.add("single-error", lu[1] == want,
            std::to_string(lu[1]) + ", expected " + std::to_string(want));
  } else {
    rec.skip("single-error", "oracle budget too small for k = 1");
  }

  if (a > 2) {
    if (lu.size() >= a) {
      bool ok = true;
      for (std::size_t k = 2; k < a; ++k) ok = ok && lu[k] == 3 * (p - 1) / 2 + 2;
      rec.add("low-budget", ok,
              "k = 2.." + std::to_string(a - 1) + ", expected " + std::to_string(3 * (p - 1) / 2 + 2));
    } else {
      rec.skip("low-budget", "oracle budget too small for k = " + std::to_string(a - 1));
    }
  }

  if (!lu.empty()) {
    const bool mono = std::is_sorted(lu.rbegin(), lu.rend());
    rec.add("monotone", mono, "L_0..L_" + std::to_string(lu.size() - 1) + " = " + join(lu));

    bool ok = true;
    std::ostringstream bad;
    for (std::size_t k = 0; k < lu.size(); ++k) {
      const Prediction pr = predict_u(params, t, k);
      if (!pr.contains(lu[k])) {
        ok = false;
        bad << " k=" << k << ": " << lu[k] << " not in " << describe(pr);
      }
    }
    rec.add("predictor-containment", ok, "k = 0.." + std::to_string(lu.size() - 1) + bad.str());

    ok = true;
    bad.str("");
    for (std::size_t k = 0; k < lu.size(); ++k) {
      const KErrorResult w = witness_bound(params, t, k);
      if (lu[k] > w.upper) {
        ok = false;
        bad << " k=" << k << ": " << lu[k] << " > " << w.upper << " (" << w.method << ")";
      }
    }
    rec.add("witness-upper", ok, "k = 0.." + std::to_string(lu.size() - 1) + bad.str());
  } else {
    rec.skip("predictor-containment", "oracle budget too small for k = 0");
  }

  const std::size_t joint = std::min({lu.size(), lq.size(), lv.size()});
  if (joint > 0) {
    bool ok = true;
    std::ostringstream bad;
    for (std::size_t k = 0; k < joint; ++k) {
      if (lq[k] + lv[k] > lu[k]) {
        ok = false;
        bad << " k=" << k;
      }
    }
    rec.add("aux-sum-lower", ok, "k = 0.." + std::to_string(joint - 1) + bad.str());
  }
  const std::size_t lifted = std::min(lu.size(), lq.size() + 2);
  if (lifted > 2) {
    bool ok = true;
    std::ostringstream bad;
    for (std::size_t k = 2; k < lifted; ++k) {
      if (lu[k] > 3 * (p - 1) / 4 + 1 + lq[k - 2]) {
        ok = false;
        bad << " k=" << k;
      }
    }
    rec.add("lifted-q-upper", ok, "k = 2.." + std::to_string(lifted - 1) + bad.str());
  }

  // The witnesses behind the upper bounds, re-verified by construction.
  const Witness lw = lift_witness(params, t, std::nullopt);
  rec.add("lifted-witness", verify_witness(poly_from_sequence(u), lw.f, lw.m0, lw.m1),
          "weight " + std::to_string(lw.f.weight()) + ", orders (" + std::to_string(lw.m0) + "," +
              std::to_string(lw.m1) + ")");

  const Family family = t.family();
  const bool case2 = family == Family::kCase2;
  const auto plateau = case2 ? case2_witness(params, t) : case1_witness(params, t);
  const std::string plateau_name = case2 ? "case2-plateau" : "case1-plateau";
  if (!plateau) {
    rec.add(plateau_name + "-witness", false, "no witness in the pattern space");
    return;
  }
  rec.add(plateau_name + "-witness", true,
          "weight " + std::to_string(plateau->f.weight()) + ", orders (" +
              std::to_string(plateau->m0) + "," + std::to_string(plateau->m1) + ")" +
              (plateau->from_pattern_search ? ", pattern search" : ", closed form"));

  // Equality on the plateau: witness upper bound against the aux lower bound.
  const std::size_t first = case2 ? a + 2 : a + 1;
  const std::size_t want = case2 ? p + 1 : 5 * (p - 1) / 4 + 2;
  if (3 * first >= p - 1) return;  // empty range at this p
  const std::size_t upper = 2 * p - plateau->m0 - plateau->m1;
  if (std::min(lq.size(), lv.size()) > first) {
    const std::size_t lower = lq[first] + lv[first];
    rec.add(plateau_name + "-equality", lower == want && upper == want,
            "k = " + std::to_string(first) + ": " + std::to_string(lower) + " <= L_k(u) <= " +
                std::to_string(upper) + ", expected " + std::to_string(want));
  } else {
    rec.skip(plateau_name + "-equality",
             "aux oracles unaffordable at k = " + std::to_string(first) + "; witness gives " +
                 std::to_string(upper));
  }
}

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "fail";
}

bool VerifyReport::any_failed() const noexcept {
  return std::any_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.status == CheckStatus::kFail; });
}

bool VerifyReport::any_skipped() const noexcept {
  return std::any_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.status == CheckStatus::kSkipped; });
}

int VerifyReport::exit_code() const noexcept {
  if (any_failed()) return 3;
  if (any_skipped()) return 2;
  return 0;
}

VerifyReport verify_theorems(std::uint32_t p, const std::optional<Triple>& triple,
                             std::optional<std::uint32_t> theta, const VerifyOptions& options) {
  VerifyReport report;
  report.p = p;
  Recorder rec(report, "");

  if (!is_prime(p) || p % 8 != 5) {
    rec.add("form", false, std::to_string(p) + " is not a prime congruent to 5 mod 8");
    return report;
  }
  const PrimeParams base = find_prime_params(p, theta);
  if (!base.has_quartic_form()) {
    rec.add("form", false, std::to_string(p) + " is neither 1 + 4y^2 nor x^2 + 4");
    return report;
  }
  rec.add("form", true,
          std::string(base.case1 ? "1 + 4y^2" : "") + (base.case1 && base.case2 ? ", " : "") +
              (base.case2 ? "x^2 + 4" : ""));
  check_class_polys(base, rec);
  check_lnov(base, options, rec);

  std::vector<Triple> triples;
  if (triple) {
    triples.push_back(*triple);
  } else {
    for (Family f : {Family::kCase1, Family::kCase2}) {
      if (!family_matches(base, f)) continue;
      for (const Triple& t : family_triples(f)) triples.push_back(t);
    }
  }
  for (const Triple& t : triples) check_triple(p, t, theta, options, report);
  return report;
}

}  // namespace kelc
