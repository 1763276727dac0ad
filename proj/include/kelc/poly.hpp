#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "kelc/modular.hpp"
#include "kelc/sequence_fp.hpp"

namespace kelc {

/// The two points whose root multiplicities determine linear complexity for
/// periods p and 2p: x^{2p} - 1 = (x - 1)^p (x + 1)^p over F_p.
enum class Point : int { kPlusOne = 1, kMinusOne = -1 };

/// Dense polynomial over F_p of degree < 2p, coefficients in ascending order.
///
/// Every constructor and product folds exponents modulo x^{2p} - 1, so a
/// PolyFp is always a period-2p sequence polynomial. Trailing zeros are
/// trimmed, which makes `==` structural.
class PolyFp {
 public:
  explicit PolyFp(std::uint32_t p);
  PolyFp(std::uint32_t p, const std::vector<std::int64_t>& coeffs);

  static PolyFp from_residues(std::uint32_t p, std::vector<Residue> coeffs);
  static PolyFp monomial(std::uint32_t p, std::size_t degree, std::int64_t coeff = 1);
  /// Sum of c * x^e over the given (e, c) terms.
  static PolyFp from_terms(std::uint32_t p,
                           const std::vector<std::pair<std::size_t, std::int64_t>>& terms);

  std::uint32_t modulus() const noexcept { return p_; }
  const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }
  Residue operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t weight() const noexcept;
  std::vector<std::size_t> support() const;

  Residue eval(Residue x) const;

  PolyFp& operator+=(const PolyFp& other);
  PolyFp& operator-=(const PolyFp& other);
  PolyFp scaled(Residue c) const;

  friend PolyFp operator+(PolyFp a, const PolyFp& b) { return a += b; }
  friend PolyFp operator-(PolyFp a, const PolyFp& b) { return a -= b; }
  /// Product reduced modulo x^{2p} - 1.
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  friend bool operator==(const PolyFp& a, const PolyFp& b) = default;

 private:
  void fold_and_trim();

  std::uint32_t p_;
  std::vector<Residue> coeffs_;
};

/// Binomial coefficients mod p through Lucas' theorem.
class Binomials {
 public:
  explicit Binomials(std::uint32_t p);
  Residue choose(std::uint64_t n, std::uint64_t k) const;
  const Modulus& field() const noexcept { return mod_; }

 private:
  Residue small_choose(std::uint32_t n, std::uint32_t k) const;

  Modulus mod_;
  std::vector<Residue> fact_;
  std::vector<Residue> inv_fact_;
};

/// Shared per-thread table for p; rebuilt only when p changes.
const Binomials& binomials_for(std::uint32_t p);

/// Order-n Hasse derivative of f evaluated at +1 or -1:
/// sum_i C(i, n) f_i a^(i - n) mod p.
Residue hasse_eval(const PolyFp& f, std::size_t order, Point point);

struct MultiplicityReport {
  Point point = Point::kPlusOne;
  std::size_t multiplicity = 0;
  /// Value of f / (x - a)^multiplicity at a; nonzero unless the cap was reached.
  Residue cofactor_value = 0;
};

/// min(cap, largest m with (x - a)^m | f), by repeated synthetic division.
/// The zero polynomial reports the cap.
MultiplicityReport root_multiplicity(const PolyFp& f, Point point, std::size_t cap);

PolyFp poly_from_sequence(const SequenceFp& s);

/// Linear complexity of a sequence with period p or 2p over F_p, from the
/// multiplicities of x - 1 and x + 1 in its generating polynomial. Throws
/// BadPeriod for any other period.
std::size_t linear_complexity(const SequenceFp& s);

}  // namespace kelc
