#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "kelc/kerror.hpp"
#include "kelc/number_theory.hpp"
#include "kelc/poly.hpp"
#include "kelc/sequences.hpp"

namespace kelc {

/// An explicit error polynomial together with the vanishing orders it is
/// claimed (and has been checked) to reach.
struct Witness {
  PolyFp f;
  std::size_t m0 = 0;
  std::size_t m1 = 0;
  std::string rule;  // "lifted-q", "case2-plateau", "case1-plateau" or "trivial"
  bool from_pattern_search = false;
};

/// Maps each term h_i x^a_i of a polynomial of degree < p to x^a_i (a_i even)
/// or x^(a_i + p) (a_i odd). The result is even as a period-2p polynomial and
/// agrees with h modulo (x - 1)^p.
PolyFp lift_even(const PolyFp& h);

/// True iff S + f vanishes to order >= claim_m0 at +1 and >= claim_m1 at -1
/// (orders counted up to p).
bool verify_witness(const PolyFp& s, const PolyFp& f, std::size_t claim_m0,
                    std::size_t claim_m1);

/// An error h on the period-p sequence q with L(q + h) = complexity.
struct QErrorHint {
  PolyFp error;
  std::size_t complexity = 0;
};

/// The weight-(k-2)-plus-2 error (x^p - 1)/2 + lift_even(h) for u, reaching
/// order p - complexity at +1 and (p-1)/4 at -1. Throws InvalidArgument if the
/// hint does not actually reach its claimed order on q.
Witness lift_witness(const PrimeParams& params, const Triple& triple,
                     const std::optional<QErrorHint>& hint);

/// The weight (p-1)/4 + 2 error reaching order (p-1)/2 at both points, for
/// the case2 family. Uses the closed form for (0,1,3) and a search over
/// c0 + c1 x^p + (c2 + c3 x^p) S_n(x) otherwise (or if the closed form fails
/// to verify). nullopt when nothing in the pattern space works.
std::optional<Witness> case2_witness(const PrimeParams& params, const Triple& triple);

/// The weight (p-1)/4 + 1 error reaching order (p-1)/4 at +1 and (p-1)/2 at
/// -1, for the case1 family; closed form for (0,1,2), pattern search otherwise.
std::optional<Witness> case1_witness(const PrimeParams& params, const Triple& triple);

/// Lowest verified witness-backed upper bound on L_k(u). Throws NotGated for
/// configurations that fail gate_configuration. `q_hint` (an optimal error for
/// q at budget k - 2) sharpens the lifted witness.
KErrorResult witness_bound(const PrimeParams& params, const Triple& triple, std::size_t k,
                           const std::optional<QErrorHint>& q_hint = std::nullopt);

}  // namespace kelc
