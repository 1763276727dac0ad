#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace kelc {

/// A prime p = 5 (mod 8) together with everything the quartic construction needs.
///
/// `x` and `y_abs` give the unique representation p = x^2 + 4 y^2 with x = 1 (mod 4);
/// `case1` marks p = 1 + 4y^2 (|x| = 1) and `case2` marks p = x^2 + 4 (y = 1).
struct PrimeParams {
  std::uint32_t p = 0;
  std::uint32_t theta = 0;  // primitive root mod p
  std::uint32_t g = 0;      // odd primitive root mod 2p, the odd one of {theta, theta + p}
  std::uint32_t rho = 0;    // theta^((p-1)/4), a primitive 4th root of unity
  std::int64_t x = 0;
  std::uint64_t y_abs = 0;
  bool case1 = false;
  bool case2 = false;

  /// True when p admits one of the two quadratic forms the optimal families need.
  bool has_quartic_form() const noexcept { return case1 || case2; }
  std::uint32_t quarter() const noexcept { return (p - 1) / 4; }
};

/// The cyclotomic classes of order four mod p and their lifts to the units mod 2p.
struct QuarticClasses {
  std::array<std::vector<std::uint32_t>, 4> d;  // sorted subsets of {1..p-1}
  std::array<std::vector<std::uint32_t>, 4> h;  // sorted subsets of the units mod 2p
  std::vector<int> class_of;                    // residue mod p -> class index, -1 for 0
};

enum class CaseFilter { kCase1, kCase2, kAny };

bool is_prime(std::uint64_t n) noexcept;
bool is_primitive_root(std::uint64_t a, std::uint64_t p);
/// All primitive roots mod p in ascending order.
std::vector<std::uint32_t> primitive_roots(std::uint32_t p);

/// Validates p and fills in the derived parameters.
///
/// Throws NotPrime, WrongResidueClass or BadOverride. A prime without either
/// quadratic form is still returned (both case flags false) so generic
/// operations remain available; callers that need the optimal families test
/// `has_quartic_form()`.
PrimeParams find_prime_params(std::uint32_t p,
                              std::optional<std::uint32_t> theta_override = std::nullopt);

QuarticClasses quartic_classes(const PrimeParams& params);

/// The unique i in [0, 2p) with i = r2 (mod 2) and i = rp (mod p).
std::uint32_t crt_inverse(std::uint32_t r2, std::uint32_t rp, std::uint32_t p);

/// Primes p = 5 (mod 8) in [lo, hi], ascending. kAny accepts case1 or case2.
std::vector<PrimeParams> enumerate_valid_primes(std::uint64_t lo, std::uint64_t hi,
                                                CaseFilter filter);

}  // namespace kelc
