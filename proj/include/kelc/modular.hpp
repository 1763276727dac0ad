#pragma once

#include <cstdint>

namespace kelc {

using Residue = std::uint32_t;
__extension__ using Wide = unsigned __int128;

/// Arithmetic in F_p for an odd prime p < 2^31.
///
/// For p < 2^16 every product of two residues fits in 32 bits and is reduced
/// with a precomputed 64-bit reciprocal instead of a hardware division; the
/// support search spends most of its time in `mul`.
class Modulus {
 public:
  explicit Modulus(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }

  Residue add(Residue a, Residue b) const noexcept {
    const Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }

  Residue mul(Residue a, Residue b) const noexcept {
    const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
    if (magic_ != 0) {
      const std::uint64_t low = magic_ * prod;
      return static_cast<Residue>((static_cast<Wide>(low) * p_) >> 64);
    }
    return static_cast<Residue>(prod % p_);
  }

  Residue pow(Residue base, std::uint64_t exp) const noexcept;

  /// Multiplicative inverse; throws kelc::Error on zero.
  Residue inv(Residue a) const;

  /// a / b for b != 0, e.g. half() == inv(2).
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

 private:
  std::uint32_t p_;
  std::uint64_t magic_ = 0;
};

/// a^e mod m for arbitrary 64-bit inputs.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

}  // namespace kelc
