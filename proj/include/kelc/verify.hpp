#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kelc/sequences.hpp"

namespace kelc {

enum class CheckStatus { kPass, kFail, kSkipped };

std::string to_string(CheckStatus status);

struct Check {
  std::string triple;  // empty for checks that concern p alone
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct VerifyOptions {
  /// Support budget for each oracle run; profiles stop at the largest
  /// affordable k.
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 0;
  std::size_t lnov_samples = 100;
  unsigned workers = 0;
};

struct VerifyReport {
  std::uint32_t p = 0;
  std::vector<Check> checks;

  bool any_failed() const noexcept;
  bool any_skipped() const noexcept;
  /// 0 all passed, 3 any failure, 2 skipped checks and no failure.
  int exit_code() const noexcept;
};

/// Runs every numeric check for p: for one triple when given, otherwise for
/// all triples of the families p's form admits. A theta override is applied to
/// every triple; without one each triple uses its first gating root.
VerifyReport verify_theorems(std::uint32_t p, const std::optional<Triple>& triple,
                             std::optional<std::uint32_t> theta, const VerifyOptions& options);

}  // namespace kelc
