#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "kelc/modular.hpp"

namespace kelc {

enum class SequenceKind { kU, kQ, kV, kGeneric };

std::string_view to_string(SequenceKind kind) noexcept;

/// One period of a sequence over F_p. The period is p or 2p for every sequence
/// this library analyses.
struct SequenceFp {
  std::uint32_t modulus = 0;
  std::vector<Residue> terms;
  SequenceKind kind = SequenceKind::kGeneric;

  std::size_t period() const noexcept { return terms.size(); }
  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (Residue t : terms) w += (t != 0);
    return w;
  }
};

}  // namespace kelc
