#include "kelc/modular.hpp"

#include "kelc/error.hpp"

namespace kelc {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::kNotPrime: return "NotPrime";
    case Errc::kWrongResidueClass: return "WrongResidueClass";
    case Errc::kNoQuarticForm: return "NoQuarticForm";
    case Errc::kBadOverride: return "BadOverride";
    case Errc::kBadPeriod: return "BadPeriod";
    case Errc::kNonBinary: return "NonBinary";
    case Errc::kNotGated: return "NotGated";
    case Errc::kNoWitnessFound: return "NoWitnessFound";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Modulus::Modulus(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31)) {
    throw Error(Errc::kInvalidArgument, "modulus out of range: " + std::to_string(p));
  }
  if (p < (1u << 16)) {
    magic_ = UINT64_C(0xFFFFFFFFFFFFFFFF) / p + 1;
  }
}

Residue Modulus::pow(Residue base, std::uint64_t exp) const noexcept {
  Residue result = 1 % p_;
  base %= p_;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

Residue Modulus::inv(Residue a) const {
  a %= p_;
  if (a == 0) throw Error(Errc::kInvalidArgument, "inverse of zero mod " + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  Wide result = 1 % m;
  Wide b = base % m;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % m;
    b = (b * b) % m;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace kelc
