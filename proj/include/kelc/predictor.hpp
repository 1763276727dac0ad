#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kelc/number_theory.hpp"
#include "kelc/sequence_fp.hpp"
#include "kelc/sequences.hpp"

namespace kelc {

enum class PredictionKind { kExact, kRange, kUnknown };

std::string to_string(PredictionKind kind);

/// Closed-form knowledge about one L_k: the intersection of every rule whose
/// k-range contains k. Unknown means no rule applied, and lo/hi then span the
/// trivial range [0, N].
struct Prediction {
  PredictionKind kind = PredictionKind::kUnknown;
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::vector<std::string> rules;

  bool contains(std::size_t value) const noexcept { return lo <= value && value <= hi; }
  std::optional<std::size_t> exact() const noexcept {
    return kind == PredictionKind::kExact ? std::optional<std::size_t>(lo) : std::nullopt;
  }
};

/// Prediction for L_k(u). Throws NotGated unless gate_configuration passes.
///
/// Rule ids: linear-complexity, single-error, low-budget, quarter-budget,
/// case2-step, case2-plateau, case2-tail, case2-half, case1-plateau,
/// case1-tail, case1-half, half-budget, aux-sum, lifted-q, erase-all.
Prediction predict_u(const PrimeParams& params, const Triple& triple, std::size_t k);

/// Prediction for L_k(q) or L_k(v) (kind kQ or kV) at a prime p = 5 mod 8.
/// Rule ids: q-table, v-table, erase-all.
Prediction predict_aux(SequenceKind kind, std::uint32_t p, std::size_t k);

/// Multiplicity at +1 of the period-p polynomial with r_0 = 0 and r_t = c[i]
/// for t in D_i. Linear complexity of r is p minus this value.
std::size_t lnov_multiplicity(const std::array<Residue, 4>& c, const PrimeParams& params);

/// The values lnov_multiplicity may take: 0, (p-1)/4, (p-1)/2, 3(p-1)/4, p.
bool lnov_admissible(std::size_t multiplicity, std::uint32_t p) noexcept;

}  // namespace kelc
