#include "kelc/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kelc/error.hpp"
#include "kelc/modular.hpp"

namespace kelc {
namespace {

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_primitive_root(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return false;
  for (std::uint64_t q : distinct_prime_factors(p - 1)) {
    if (pow_mod(a, (p - 1) / q, p) == 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> primitive_roots(std::uint32_t p) {
  std::vector<std::uint32_t> roots;
  const auto factors = distinct_prime_factors(p - 1);
  for (std::uint32_t a = 1; a < p; ++a) {
    const bool ok = std::none_of(factors.begin(), factors.end(), [&](std::uint64_t q) {
      return pow_mod(a, (p - 1) / q, p) == 1;
    });
    if (ok) roots.push_back(a);
  }
  return roots;
}

PrimeParams find_prime_params(std::uint32_t p, std::optional<std::uint32_t> theta_override) {
  if (!is_prime(p)) throw Error(Errc::kNotPrime, std::to_string(p) + " is not prime");
  if (p % 8 != 5) {
    throw Error(Errc::kWrongResidueClass,
                std::to_string(p) + " mod 8 = " + std::to_string(p % 8) + ", expected 5");
  }

  PrimeParams out;
  out.p = p;
  if (theta_override) {
    const std::uint32_t t = *theta_override;
    if (t == 0 || t >= p || !is_primitive_root(t, p)) {
      throw Error(Errc::kBadOverride,
                  std::to_string(t) + " is not a primitive root mod " + std::to_string(p));
    }
    out.theta = t;
  } else {
    std::uint32_t t = 2;
    while (!is_primitive_root(t, p)) ++t;
    out.theta = t;
  }
  out.g = (out.theta % 2 == 1) ? out.theta : out.theta + p;
  out.rho = static_cast<std::uint32_t>(pow_mod(out.theta, (p - 1) / 4, p));

  // Fermat: p = 1 (mod 4) has exactly one representation x^2 + 4y^2 with y >= 0, x > 0.
  for (std::uint64_t y = 0; 4 * y * y <= p; ++y) {
    const std::uint64_t rest = p - 4 * y * y;
    const std::uint64_t r = isqrt(rest);
    if (r * r == rest) {
      const auto xr = static_cast<std::int64_t>(r);
      out.x = (xr % 4 == 1) ? xr : -xr;
      out.y_abs = y;
      break;
    }
  }
  out.case1 = (out.x == 1 || out.x == -1);
  out.case2 = (out.y_abs == 1);
  return out;
}

QuarticClasses quartic_classes(const PrimeParams& params) {
  const std::uint32_t p = params.p;
  const std::uint32_t quarter = params.quarter();
  const std::uint64_t two_p = 2ull * p;

  QuarticClasses out;
  out.class_of.assign(p, -1);
  std::uint64_t theta_n = 1;
  std::uint64_t g_n = 1;
  const std::uint64_t theta4 = pow_mod(params.theta, 4, p);
  const std::uint64_t g4 = pow_mod(params.g, 4, two_p);
  for (int n = 0; n < 4; ++n) {
    std::uint64_t dv = theta_n;
    std::uint64_t hv = g_n;
    for (std::uint32_t s = 0; s < quarter; ++s) {
      out.d[n].push_back(static_cast<std::uint32_t>(dv));
      out.h[n].push_back(static_cast<std::uint32_t>(hv));
      out.class_of[dv] = n;
      dv = dv * theta4 % p;
      hv = hv * g4 % two_p;
    }
    std::sort(out.d[n].begin(), out.d[n].end());
    std::sort(out.h[n].begin(), out.h[n].end());
    theta_n = theta_n * params.theta % p;
    g_n = g_n * params.g % two_p;
  }
  return out;
}

std::uint32_t crt_inverse(std::uint32_t r2, std::uint32_t rp, std::uint32_t p) {
  if (r2 > 1 || rp >= p) {
    throw Error(Errc::kInvalidArgument, "crt_inverse residues out of range");
  }
  return (rp % 2 == r2) ? rp : rp + p;
}

std::vector<PrimeParams> enumerate_valid_primes(std::uint64_t lo, std::uint64_t hi,
                                                CaseFilter filter) {
  std::vector<PrimeParams> out;
  if (lo > hi) return out;
  std::uint64_t start = lo;
  while (start % 8 != 5) ++start;
  for (std::uint64_t n = start; n <= hi; n += 8) {
    if (n >= (1u << 31) || !is_prime(n)) continue;
    PrimeParams params = find_prime_params(static_cast<std::uint32_t>(n));
    const bool keep = filter == CaseFilter::kCase1   ? params.case1
                      : filter == CaseFilter::kCase2 ? params.case2
                                                     : params.has_quartic_form();
    if (keep) out.push_back(params);
  }
  return out;
}

}  // namespace kelc
