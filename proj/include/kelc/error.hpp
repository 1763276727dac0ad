#pragma once

#include <stdexcept>
#include <string>

namespace kelc {

enum class Errc {
  kNotPrime,
  kWrongResidueClass,
  kNoQuarticForm,
  kBadOverride,
  kBadPeriod,
  kNonBinary,
  kNotGated,
  kNoWitnessFound,
  kInvalidArgument,
};

const char* to_string(Errc code) noexcept;

/// Failure raised by library operations; `code()` names the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kelc
