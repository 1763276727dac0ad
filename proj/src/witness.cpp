#include "kelc/witness.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "kelc/error.hpp"
#include "linalg.hpp"

namespace kelc {
namespace {

struct Target {
  std::size_t m0;
  std::size_t m1;
};

// Weight of c0 + c1 x^p + (c2 + c3 x^p) S_n: the four pieces have disjoint
// supports (0, p, odd units, even non-multiples of p).
std::size_t pattern_weight(const std::array<Residue, 4>& c, std::size_t quarter) {
  return (c[0] != 0) + (c[1] != 0) + quarter * ((c[2] != 0) + (c[3] != 0));
}

PolyFp pattern_poly(std::uint32_t p, const std::array<Residue, 4>& c, const PolyFp& sn) {
  PolyFp f = PolyFp::from_terms(p, {{0, c[0]}, {p, c[1]}});
  f += sn.scaled(c[2]);
  f += (PolyFp::monomial(p, p) * sn).scaled(c[3]);
  return f;
}

std::optional<PolyFp> pattern_search(const PrimeParams& params, const PolyFp& s, Target target) {
  const std::uint32_t p = params.p;
  const Modulus mod(p);
  constexpr std::uint64_t kEnumerationCap = 1'000'000;

  std::optional<PolyFp> best;
  std::size_t best_weight = SIZE_MAX;
  for (int n = 0; n < 4; ++n) {
    const PolyFp sn = class_poly(params, n);
    const std::array<PolyFp, 4> basis = {PolyFp::monomial(p, 0), PolyFp::monomial(p, p), sn,
                                         PolyFp::monomial(p, p) * sn};
    detail::DenseMatrix a(target.m0 + target.m1, 4);
    std::vector<Residue> b;
    for (std::size_t i = 0; i < target.m0; ++i) {
      for (int c = 0; c < 4; ++c) a.at(i, c) = hasse_eval(basis[c], i, Point::kPlusOne);
      b.push_back(mod.neg(hasse_eval(s, i, Point::kPlusOne)));
    }
    for (std::size_t i = 0; i < target.m1; ++i) {
      for (int c = 0; c < 4; ++c) {
        a.at(target.m0 + i, c) = hasse_eval(basis[c], i, Point::kMinusOne);
      }
      b.push_back(mod.neg(hasse_eval(s, i, Point::kMinusOne)));
    }
    const auto sol = detail::solve_affine(mod, std::move(a), std::move(b));
    if (!sol) continue;

    const std::size_t dim = sol->kernel.size();
    std::uint64_t total = 1;
    for (std::size_t d = 0; d < dim && total <= kEnumerationCap; ++d) total *= p;
    if (total > kEnumerationCap) total = 1;  // particular solution only

    std::vector<Residue> t(dim, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t d = 0; d < dim; ++d) {
        t[d] = static_cast<Residue>(rest % p);
        rest /= p;
      }
      std::array<Residue, 4> c{};
      for (int j = 0; j < 4; ++j) {
        Residue v = sol->particular[j];
        for (std::size_t d = 0; d < dim; ++d) v = mod.add(v, mod.mul(t[d], sol->kernel[d][j]));
        c[j] = v;
      }
      const std::size_t w = pattern_weight(c, params.quarter());
      if (w < best_weight) {
        best_weight = w;
        best = pattern_poly(p, c, sn);
      }
    }
  }
  return best;
}

std::optional<Witness> theorem_witness(const PrimeParams& params, const Triple& triple,
                                       Target target, std::size_t max_weight,
                                       std::optional<PolyFp> closed_form, const char* rule) {
  const PolyFp s = poly_from_sequence(build_u(params, triple));
  if (closed_form && closed_form->weight() <= max_weight &&
      verify_witness(s, *closed_form, target.m0, target.m1)) {
    return Witness{std::move(*closed_form), target.m0, target.m1, rule, false};
  }
  auto found = pattern_search(params, s, target);
  if (found && found->weight() <= max_weight && verify_witness(s, *found, target.m0, target.m1)) {
    return Witness{std::move(*found), target.m0, target.m1, rule, true};
  }
  return std::nullopt;
}

}  // namespace

PolyFp lift_even(const PolyFp& h) {
  const std::uint32_t p = h.modulus();
  if (h.degree() >= static_cast<long>(p)) {
    throw Error(Errc::kInvalidArgument, "lift_even needs degree < p");
  }
  std::vector<std::pair<std::size_t, std::int64_t>> terms;
  for (std::size_t i : h.support()) terms.emplace_back(i % 2 == 0 ? i : i + p, h[i]);
  return PolyFp::from_terms(p, terms);
}

bool verify_witness(const PolyFp& s, const PolyFp& f, std::size_t claim_m0,
                    std::size_t claim_m1) {
  const std::size_t p = s.modulus();
  const PolyFp sum = s + f;
  return root_multiplicity(sum, Point::kPlusOne, p).multiplicity >= claim_m0 &&
         root_multiplicity(sum, Point::kMinusOne, p).multiplicity >= claim_m1;
}

Witness lift_witness(const PrimeParams& params, const Triple& triple,
                     const std::optional<QErrorHint>& hint) {
  const std::uint32_t p = params.p;
  const SequenceFp q = build_q(params, triple);
  PolyFp h(p);
  std::size_t complexity = linear_complexity(q);
  if (hint) {
    if (hint->error.degree() >= static_cast<long>(p)) {
      throw Error(Errc::kInvalidArgument, "q error must have degree < p");
    }
    const PolyFp corrected = poly_from_sequence(q) + hint->error;
    if (hint->complexity > p ||
        root_multiplicity(corrected, Point::kPlusOne, p).multiplicity < p - hint->complexity) {
      throw Error(Errc::kInvalidArgument, "q error does not reach its claimed complexity");
    }
    if (hint->complexity < complexity) {
      h = hint->error;
      complexity = hint->complexity;
    }
  }
  const Modulus mod(p);
  const Residue half = mod.inv(2);
  PolyFp f = PolyFp::from_terms(p, {{0, mod.neg(half)}, {p, half}});
  f += lift_even(h);
  return Witness{std::move(f), p - complexity, params.quarter(), "lifted-q", false};
}

std::optional<Witness> case2_witness(const PrimeParams& params, const Triple& triple) {
  const std::uint32_t p = params.p;
  const Modulus mod(p);
  const Target target{(p - 1) / 2, (p - 1) / 2};
  std::optional<PolyFp> closed;
  if (triple == Triple{0, 1, 3}) {
    const Residue rho = params.rho;
    PolyFp f = PolyFp::from_terms(
        p, {{p, mod.inv(2)}, {0, mod.neg(mod.div(mod.add(rho, 3), 4))}});
    f -= (PolyFp::monomial(p, p) * class_poly(params, 0)).scaled(mod.add(rho, 1));
    closed = std::move(f);
  }
  return theorem_witness(params, triple, target, params.quarter() + 2, std::move(closed), "case2-plateau");
}

std::optional<Witness> case1_witness(const PrimeParams& params, const Triple& triple) {
  const std::uint32_t p = params.p;
  const Modulus mod(p);
  const Target target{params.quarter(), (p - 1) / 2};
  std::optional<PolyFp> closed;
  if (triple == Triple{0, 1, 2}) {
    PolyFp f = PolyFp::from_terms(p, {{0, mod.neg(mod.inv(2))}});
    f -= class_poly(params, 2).scaled(2);
    closed = std::move(f);
  }
  return theorem_witness(params, triple, target, params.quarter() + 1, std::move(closed), "case1-plateau");
}

KErrorResult witness_bound(const PrimeParams& params, const Triple& triple, std::size_t k,
                           const std::optional<QErrorHint>& q_hint) {
  const GateResult gate = gate_configuration(params, triple);
  if (!gate.gated) throw Error(Errc::kNotGated, gate.diagnosis);

  const std::uint32_t p = params.p;
  const PolyFp s = poly_from_sequence(build_u(params, triple));
  std::vector<Witness> candidates;

  const Family family = triple.family();
  if (family == Family::kCase2 && k >= params.quarter() + 2) {
    if (auto w = case2_witness(params, triple)) candidates.push_back(std::move(*w));
  }
  if (family == Family::kCase1 && k >= params.quarter() + 1) {
    if (auto w = case1_witness(params, triple)) candidates.push_back(std::move(*w));
  }
  if (k >= 2) {
    std::optional<QErrorHint> hint;
    if (q_hint && q_hint->error.weight() + 2 <= k) hint = q_hint;
    Witness w = lift_witness(params, triple, hint);
    if (w.f.weight() <= k && verify_witness(s, w.f, w.m0, w.m1)) candidates.push_back(std::move(w));
  }
  candidates.push_back(Witness{PolyFp(p), root_multiplicity(s, Point::kPlusOne, p).multiplicity,
                               root_multiplicity(s, Point::kMinusOne, p).multiplicity, "trivial",
                               false});

  const Witness* best = &candidates.front();
  for (const Witness& w : candidates) {
    if (w.m0 + w.m1 > best->m0 + best->m1) best = &w;
  }
  KErrorResult r;
  r.k = k;
  r.lower = 0;
  r.upper = 2 * p - best->m0 - best->m1;
  r.method = "witness:" + best->rule;
  r.witness = best->f;
  r.support = best->f.support();
  r.m0 = best->m0;
  r.m1 = best->m1;
  return r;
}

}  // namespace kelc
