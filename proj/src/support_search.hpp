#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kelc/modular.hpp"
#include "kelc/poly.hpp"

namespace kelc::detail {

/// The vanishing conditions "order-n Hasse derivative of S + f is zero at +1
/// (and at -1)" written as one column per error position t: entry (a, n) of
/// column t is the order-n Hasse derivative of x^t at a, and the right-hand
/// side holds the negated derivatives of S. Rows 0..p-1 belong to +1, rows
/// p..2p-1 to -1 (absent for period-p sequences).
struct ConstraintSystem {
  std::uint32_t p = 0;
  std::size_t positions = 0;
  std::size_t plus_rows = 0;
  std::size_t minus_rows = 0;
  std::vector<Residue> columns;  // positions * rows(), one column after another
  std::vector<Residue> rhs;

  std::size_t rows() const noexcept { return plus_rows + minus_rows; }
  const Residue* column(std::size_t t) const noexcept { return columns.data() + t * rows(); }
};

ConstraintSystem build_constraints(const PolyFp& s, std::size_t period);

struct SizeBest {
  bool found = false;
  std::size_t best_sum = 0;
  std::size_t m0 = 0;
  std::size_t m1 = 0;
  std::vector<std::uint32_t> support;
};

struct SearchOutcome {
  std::vector<SizeBest> per_size;  // indexed by support size 0..k_max
  std::uint64_t visited = 0;
  bool truncated = false;
};

/// sum_{j <= k_max} C(n, j), saturating at UINT64_MAX.
std::uint64_t count_supports(std::size_t n, std::size_t k_max) noexcept;

/// Visits every support of size <= k_max in lexicographic order and records,
/// per size, the largest m0 + m1 reachable with errors on that support (ties
/// keep the lexicographically smallest support). When the number of supports
/// exceeds `limit`, exactly `limit` supports are visited sequentially and the
/// outcome is marked truncated. `workers` > 1 splits the search by first
/// position; the result does not depend on it.
SearchOutcome search_supports(const ConstraintSystem& system, std::size_t k_max,
                              std::uint64_t limit, unsigned workers);

}  // namespace kelc::detail
