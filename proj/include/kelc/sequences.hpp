#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kelc/number_theory.hpp"
#include "kelc/poly.hpp"
#include "kelc/sequence_fp.hpp"

namespace kelc {

/// The two families of (m, j, l) selectors that can give optimal autocorrelation.
/// kCase1 needs p = 1 + 4y^2, kCase2 needs p = x^2 + 4.
enum class Family { kCase1, kCase2, kOther };

std::string to_string(Family family);

struct Triple {
  int m = 0;
  int j = 1;
  int l = 2;

  /// Throws InvalidArgument unless m, j, l are pairwise distinct values in [0, 3].
  static Triple make(int m, int j, int l);
  /// Parses "m,j,l".
  static Triple parse(const std::string& text);

  Family family() const noexcept;
  std::string str() const;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// The four selectors of a family, in the order they are usually listed.
std::array<Triple, 4> family_triples(Family family);
/// Whether a prime's quadratic form admits the family.
bool family_matches(const PrimeParams& params, Family family) noexcept;

SequenceFp build_u(const PrimeParams& params, const Triple& triple);
SequenceFp build_q(const PrimeParams& params, const Triple& triple);
SequenceFp build_v(const PrimeParams& params, const Triple& triple);

/// S_n(x): the indicator polynomial of the class H_n mod 2p.
PolyFp class_poly(const PrimeParams& params, int n);

struct AutocorrProfile {
  std::vector<std::int64_t> values;  // AC(0..N-1)
  bool optimal = false;              // every off-peak value in {-2, 2}
};

/// Periodic autocorrelation of a 0/1 sequence; throws NonBinary otherwise.
AutocorrProfile autocorrelation_profile(const SequenceFp& s);

enum class GateFailure { kNone, kForm, kFamily, kAutocorrelation };

struct GateResult {
  bool gated = false;
  GateFailure reason = GateFailure::kNone;
  std::string diagnosis;
};

std::string to_string(GateFailure reason);

/// Checks the form conditions on p, that the triple's family matches p's form,
/// and that u has optimal autocorrelation under params.theta.
GateResult gate_configuration(const PrimeParams& params, const Triple& triple);
/// Same, starting from a bare integer; non-primes and wrong residue classes
/// are reported as form failures instead of thrown.
GateResult gate_configuration(std::uint32_t p, const Triple& triple,
                              std::optional<std::uint32_t> theta = std::nullopt);

struct GatedConfig {
  PrimeParams params;
  GateResult gate;
};

/// Parameters for (p, triple): with an explicit theta only that root is tried;
/// otherwise the default root is tried first and then every primitive root in
/// ascending order, keeping the first that gates. When nothing gates, the
/// default parameters are returned with the failing gate result.
GatedConfig resolve_gated_params(std::uint32_t p, const Triple& triple,
                                 std::optional<std::uint32_t> theta = std::nullopt);

/// The smallest primitive root under which all four triples of `family` gate.
std::optional<std::uint32_t> find_family_theta(std::uint32_t p, Family family);

}  // namespace kelc
