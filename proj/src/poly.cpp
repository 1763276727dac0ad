#include "kelc/poly.hpp"

#include <memory>
#include <string>

#include "kelc/error.hpp"

namespace kelc {

std::string_view to_string(SequenceKind kind) noexcept {
  switch (kind) {
    case SequenceKind::kU: return "u";
    case SequenceKind::kQ: return "q";
    case SequenceKind::kV: return "v";
    case SequenceKind::kGeneric: return "generic";
  }
  return "generic";
}

PolyFp::PolyFp(std::uint32_t p) : p_(p) {}

PolyFp::PolyFp(std::uint32_t p, const std::vector<std::int64_t>& coeffs) : p_(p) {
  const Modulus mod(p);
  coeffs_.reserve(coeffs.size());
  for (std::int64_t c : coeffs) coeffs_.push_back(mod.reduce(c));
  fold_and_trim();
}

PolyFp PolyFp::from_residues(std::uint32_t p, std::vector<Residue> coeffs) {
  PolyFp out(p);
  for (Residue& c : coeffs) c %= p;
  out.coeffs_ = std::move(coeffs);
  out.fold_and_trim();
  return out;
}

PolyFp PolyFp::monomial(std::uint32_t p, std::size_t degree, std::int64_t coeff) {
  return from_terms(p, {{degree, coeff}});
}

PolyFp PolyFp::from_terms(std::uint32_t p,
                          const std::vector<std::pair<std::size_t, std::int64_t>>& terms) {
  const Modulus mod(p);
  const std::size_t n = 2 * static_cast<std::size_t>(p);
  PolyFp out(p);
  out.coeffs_.assign(n, 0);
  for (const auto& [e, c] : terms) {
    auto& slot = out.coeffs_[e % n];
    slot = mod.add(slot, mod.reduce(c));
  }
  out.fold_and_trim();
  return out;
}

void PolyFp::fold_and_trim() {
  const std::size_t n = 2 * static_cast<std::size_t>(p_);
  if (coeffs_.size() > n) {
    const Modulus mod(p_);
    for (std::size_t i = n; i < coeffs_.size(); ++i) {
      coeffs_[i % n] = mod.add(coeffs_[i % n], coeffs_[i]);
    }
    coeffs_.resize(n);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t PolyFp::weight() const noexcept {
  std::size_t w = 0;
  for (Residue c : coeffs_) w += (c != 0);
  return w;
}

std::vector<std::size_t> PolyFp::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.push_back(i);
  }
  return out;
}

Residue PolyFp::eval(Residue x) const {
  const Modulus mod(p_);
  x %= p_;
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = mod.add(mod.mul(acc, x), *it);
  }
  return acc;
}

PolyFp& PolyFp::operator+=(const PolyFp& other) {
  if (other.p_ != p_) throw Error(Errc::kInvalidArgument, "mixed moduli");
  const Modulus mod(p_);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = mod.add(coeffs_[i], other.coeffs_[i]);
  }
  fold_and_trim();
  return *this;
}

PolyFp& PolyFp::operator-=(const PolyFp& other) {
  if (other.p_ != p_) throw Error(Errc::kInvalidArgument, "mixed moduli");
  const Modulus mod(p_);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = mod.sub(coeffs_[i], other.coeffs_[i]);
  }
  fold_and_trim();
  return *this;
}

PolyFp PolyFp::scaled(Residue c) const {
  const Modulus mod(p_);
  PolyFp out(*this);
  c %= p_;
  for (Residue& v : out.coeffs_) v = mod.mul(v, c);
  out.fold_and_trim();
  return out;
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  if (a.p_ != b.p_) throw Error(Errc::kInvalidArgument, "mixed moduli");
  const Modulus mod(a.p_);
  const std::size_t n = 2 * static_cast<std::size_t>(a.p_);
  PolyFp out(a.p_);
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(n, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      auto& slot = out.coeffs_[(i + j) % n];
      slot = mod.add(slot, mod.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  out.fold_and_trim();
  return out;
}

Binomials::Binomials(std::uint32_t p) : mod_(p), fact_(p), inv_fact_(p) {
  fact_[0] = 1;
  for (std::uint32_t i = 1; i < p; ++i) fact_[i] = mod_.mul(fact_[i - 1], i);
  inv_fact_[p - 1] = mod_.inv(fact_[p - 1]);
  for (std::uint32_t i = p - 1; i > 0; --i) inv_fact_[i - 1] = mod_.mul(inv_fact_[i], i);
}

Residue Binomials::small_choose(std::uint32_t n, std::uint32_t k) const {
  if (k > n) return 0;
  return mod_.mul(fact_[n], mod_.mul(inv_fact_[k], inv_fact_[n - k]));
}

Residue Binomials::choose(std::uint64_t n, std::uint64_t k) const {
  const std::uint64_t p = mod_.value();
  Residue acc = 1;
  while (k > 0) {
    const auto nd = static_cast<std::uint32_t>(n % p);
    const auto kd = static_cast<std::uint32_t>(k % p);
    if (kd > nd) return 0;
    acc = mod_.mul(acc, small_choose(nd, kd));
    n /= p;
    k /= p;
  }
  return acc;
}

const Binomials& binomials_for(std::uint32_t p) {
  thread_local std::unique_ptr<Binomials> cache;
  if (!cache || cache->field().value() != p) cache = std::make_unique<Binomials>(p);
  return *cache;
}

Residue hasse_eval(const PolyFp& f, std::size_t order, Point point) {
  const Binomials& binom = binomials_for(f.modulus());
  const Modulus& mod = binom.field();
  Residue acc = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = order; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Residue term = mod.mul(binom.choose(i, order), c[i]);
    if (point == Point::kMinusOne && (i - order) % 2 == 1) term = mod.neg(term);
    acc = mod.add(acc, term);
  }
  return acc;
}

MultiplicityReport root_multiplicity(const PolyFp& f, Point point, std::size_t cap) {
  MultiplicityReport report;
  report.point = point;
  if (f.is_zero()) {
    report.multiplicity = cap;
    return report;
  }
  const Modulus mod(f.modulus());
  const Residue a = point == Point::kPlusOne ? 1 : f.modulus() - 1;
  std::vector<Residue> work = f.coeffs();
  std::size_t m = 0;
  while (m < cap) {
    // Synthetic division by (x - a), highest degree first.
    Residue carry = 0;
    std::vector<Residue> quotient(work.size() > 1 ? work.size() - 1 : 0);
    for (std::size_t i = work.size(); i-- > 0;) {
      const Residue value = mod.add(work[i], mod.mul(carry, a));
      if (i > 0) quotient[i - 1] = value;
      carry = value;
    }
    if (carry != 0) {
      report.cofactor_value = carry;
      break;
    }
    work = std::move(quotient);
    ++m;
  }
  report.multiplicity = m;
  return report;
}

PolyFp poly_from_sequence(const SequenceFp& s) {
  return PolyFp::from_residues(s.modulus, s.terms);
}

std::size_t linear_complexity(const SequenceFp& s) {
  const std::size_t p = s.modulus;
  const std::size_t n = s.period();
  if (n != p && n != 2 * p) {
    throw Error(Errc::kBadPeriod, "period " + std::to_string(n) + " with p = " + std::to_string(p));
  }
  const PolyFp poly = poly_from_sequence(s);
  std::size_t lc = n - root_multiplicity(poly, Point::kPlusOne, p).multiplicity;
  if (n == 2 * p) lc -= root_multiplicity(poly, Point::kMinusOne, p).multiplicity;
  return lc;
}

}  // namespace kelc
