#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kelc/poly.hpp"
#include "kelc/sequence_fp.hpp"

namespace kelc {

/// What is known about L_k(s) for one error budget k.
///
/// `witness`, when present, is an error polynomial f with weight(f) <= k such
/// that S + f vanishes to order >= m0 at +1 and >= m1 at -1; it certifies
/// `upper` = N - m0 - m1.
struct KErrorResult {
  std::size_t k = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<std::size_t> exact;
  std::string method;
  std::optional<PolyFp> witness;
  std::vector<std::size_t> support;
  std::size_t m0 = 0;
  std::size_t m1 = 0;
  bool budget_exceeded = false;
};

struct OracleOptions {
  /// Maximum number of supports visited before the result is bracketed.
  std::uint64_t limit = 10'000'000;
  /// Parallel workers; 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
};

struct JointMultiplicity {
  std::size_t m0 = 0;
  std::size_t m1 = 0;
  std::size_t best_sum = 0;
};

/// Largest m0 + m1 such that some f supported on `support` makes
/// (x - 1)^m0 (x + 1)^m1 divide S + f, with m0, m1 <= p. For period p only the
/// +1 side is used (m1 = 0). Solves each staircase point from scratch; the
/// oracle's incremental search is checked against this.
JointMultiplicity max_joint_multiplicity(const PolyFp& s, const std::vector<std::size_t>& support,
                                         std::size_t period);

/// Number of supports the oracle visits for a period-N sequence and budget k.
std::uint64_t oracle_cost(std::size_t period, std::size_t k);

/// Exact L_k(s) by enumerating every error support of size <= k. Error values
/// are not enumerated: for a fixed support the best multiplicities are a
/// linear feasibility question. Over budget, the result is a bracket with
/// `budget_exceeded` set.
KErrorResult kerror_oracle(const SequenceFp& s, std::size_t k, const OracleOptions& options = {});

/// L_0 .. L_{k_max} from a single enumeration; row k is identical to
/// kerror_oracle(s, k) when the budget suffices.
std::vector<KErrorResult> kerror_profile(const SequenceFp& s, std::size_t k_max,
                                         const OracleOptions& options = {});

}  // namespace kelc
