#include <doctest.h>

#include <random>

#include "kelc/error.hpp"
#include "kelc/poly.hpp"
#include "kelc/sequences.hpp"
#include "support/oracles.hpp"

using namespace kelc;

namespace {

PolyFp power_of_linear(std::uint32_t p, std::int64_t root, std::size_t n) {
  PolyFp f = PolyFp::monomial(p, 0);
  const PolyFp lin(p, {-root, 1});
  for (std::size_t i = 0; i < n; ++i) f = f * lin;
  return f;
}

std::vector<oracle::i64> as_i64(const PolyFp& f) {
  return {f.coeffs().begin(), f.coeffs().end()};
}

PolyFp random_poly(std::mt19937_64& rng, std::uint32_t p, std::size_t len, double density) {
  std::uniform_int_distribution<std::int64_t> val(1, p - 1);
  std::bernoulli_distribution keep(density);
  std::vector<std::int64_t> c(len, 0);
  for (auto& x : c) x = keep(rng) ? val(rng) : 0;
  return PolyFp(p, c);
}

}  // namespace

TEST_CASE("construction folds modulo x^2p - 1 and trims") {
  const PolyFp f(5, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0});
  CHECK(f.coeffs() == std::vector<Residue>{4});
  CHECK(PolyFp(5, {0, 0}).is_zero());
  CHECK(PolyFp(5, {0, 0}).degree() == -1);
  CHECK(PolyFp(7, {-1}).coeffs() == std::vector<Residue>{6});
  CHECK(PolyFp::monomial(5, 13, 2) == PolyFp(5, {0, 0, 0, 2}));
  CHECK((PolyFp::monomial(5, 9) * PolyFp::monomial(5, 3)) == PolyFp::monomial(5, 2));
}

TEST_CASE("poly_from_sequence examples") {
  const PrimeParams p5 = find_prime_params(5);
  const Triple t = Triple::make(0, 1, 2);
  CHECK(poly_from_sequence(build_u(p5, t)).support() == std::vector<std::size_t>{0, 2, 6, 7, 9});
  CHECK(poly_from_sequence(SequenceFp{5, std::vector<Residue>(5, 0), SequenceKind::kGeneric})
            .is_zero());
  CHECK(poly_from_sequence(build_q(p5, t)) == PolyFp(5, {1, 1, 2, 0, 1}));
}

TEST_CASE("hasse_eval examples") {
  CHECK(hasse_eval(PolyFp::monomial(13, 5), 2, Point::kPlusOne) == 10);
  const PolyFp cube = power_of_linear(13, 1, 3);
  CHECK(hasse_eval(cube, 2, Point::kPlusOne) == 0);
  CHECK(hasse_eval(cube, 3, Point::kPlusOne) == 1);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const PolyFp f = random_poly(rng, 13, 26, 0.5);
    CHECK(hasse_eval(f, 0, Point::kPlusOne) == f.eval(1));
    CHECK(hasse_eval(f, 0, Point::kMinusOne) == f.eval(12));
  }
}

TEST_CASE("hasse_eval agrees with a Pascal-triangle Taylor expansion") {
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {5u, 13u, 29u}) {
    for (int i = 0; i < 10; ++i) {
      const PolyFp f = random_poly(rng, p, 2 * p, 0.6);
      for (std::size_t n = 0; n < 2 * p; ++n) {
        CHECK(hasse_eval(f, n, Point::kPlusOne) == oracle::taylor_coefficient(as_i64(f), n, 1, p));
        CHECK(hasse_eval(f, n, Point::kMinusOne) ==
              oracle::taylor_coefficient(as_i64(f), n, p - 1, p));
      }
    }
  }
}

TEST_CASE("Lucas binomials against Pascal's triangle") {
  const Binomials b(7);
  std::vector<std::vector<int>> c(60, std::vector<int>(60, 0));
  for (int i = 0; i < 60; ++i) {
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j) c[i][j] = (c[i - 1][j - 1] + c[i - 1][j]) % 7;
  }
  for (int i = 0; i < 60; ++i) {
    for (int j = 0; j < 60; ++j) CHECK(b.choose(i, j) == static_cast<Residue>(c[i][j]));
  }
}

TEST_CASE("root_multiplicity examples") {
  const PolyFp f = power_of_linear(13, 1, 4) * power_of_linear(13, -1, 1);
  CHECK(root_multiplicity(f, Point::kPlusOne, 10).multiplicity == 4);
  CHECK(root_multiplicity(f, Point::kMinusOne, 10).multiplicity == 1);

  const PolyFp su = poly_from_sequence(build_u(find_prime_params(5), Triple::make(0, 1, 2)));
  const MultiplicityReport r = root_multiplicity(su, Point::kPlusOne, 5);
  CHECK(r.multiplicity == 1);
  CHECK(r.cofactor_value != 0);

  CHECK(root_multiplicity(PolyFp(13), Point::kPlusOne, 13).multiplicity == 13);
  CHECK(root_multiplicity(power_of_linear(5, 1, 5), Point::kPlusOne, 3).multiplicity == 3);
}

TEST_CASE("class polynomials: S_n + 1/4 vanishes to order exactly (p-1)/4 at +1") {
  for (std::uint32_t p : {13u, 29u, 37u}) {
    const GatedConfig cfg = resolve_gated_params(p, p == 37 ? Triple::make(0, 1, 2)
                                                             : Triple::make(0, 1, 3));
    const Modulus mod(p);
    for (int n = 0; n < 4; ++n) {
      const PolyFp s = class_poly(cfg.params, n) + PolyFp::monomial(p, 0, mod.inv(4));
      CHECK(root_multiplicity(s, Point::kPlusOne, p).multiplicity == (p - 1) / 4);
    }
  }
}

TEST_CASE("multiplying by (x - a)^n adds n to the multiplicity") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {5u, 13u}) {
    for (int i = 0; i < 30; ++i) {
      const PolyFp f = random_poly(rng, p, p, 0.7);
      if (f.is_zero()) continue;
      for (Point pt : {Point::kPlusOne, Point::kMinusOne}) {
        const std::int64_t a = static_cast<int>(pt);
        const std::size_t base = root_multiplicity(f, pt, 2 * p).multiplicity;
        const std::size_t n = rng() % 4;
        const PolyFp g = f * power_of_linear(p, a, n);
        CHECK(root_multiplicity(g, pt, p).multiplicity == std::min<std::size_t>(p, base + n));
      }
    }
  }
}

TEST_CASE("hasse_eval and root_multiplicity agree") {
  std::mt19937_64 rng(4);
  for (std::uint32_t p : {5u, 13u, 29u}) {
    for (int i = 0; i < 30; ++i) {
      PolyFp f = random_poly(rng, p, p, 0.5);
      f = f * power_of_linear(p, 1, rng() % 5) * power_of_linear(p, -1, rng() % 5);
      for (Point pt : {Point::kPlusOne, Point::kMinusOne}) {
        const std::size_t m = root_multiplicity(f, pt, 2 * p).multiplicity;
        if (m >= 2 * p) continue;
        for (std::size_t n = 0; n < m; ++n) CHECK(hasse_eval(f, n, pt) == 0);
        CHECK(hasse_eval(f, m, pt) != 0);
      }
    }
  }
}

TEST_CASE("linear_complexity examples and errors") {
  const PrimeParams p5 = find_prime_params(5);
  CHECK(linear_complexity(build_u(p5, Triple::make(0, 1, 2))) == 9);
  const GatedConfig c13 = resolve_gated_params(13, Triple::make(0, 1, 3));
  CHECK(linear_complexity(build_u(c13.params, Triple::make(0, 1, 3))) == 23);
  CHECK(linear_complexity(build_q(c13.params, Triple::make(0, 1, 3))) == 10);

  std::vector<Residue> delta(13, 0);
  delta[0] = 1;
  CHECK(linear_complexity(SequenceFp{13, delta, SequenceKind::kGeneric}) == 13);

  bool threw = false;
  try {
    linear_complexity(SequenceFp{13, std::vector<Residue>(7, 1), SequenceKind::kGeneric});
  } catch (const Error& e) {
    threw = e.code() == Errc::kBadPeriod;
  }
  CHECK(threw);
}

TEST_CASE("linear_complexity against Berlekamp-Massey and gcd oracles") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {5u, 13u, 29u}) {
    for (std::size_t n : {std::size_t{p}, std::size_t{2 * p}}) {
      for (int i = 0; i < 25; ++i) {
        std::vector<Residue> terms(n);
        const double density = (i % 5 + 1) / 5.0;
        std::bernoulli_distribution keep(density);
        for (auto& t : terms) t = keep(rng) ? static_cast<Residue>(rng() % p) : 0;
        const SequenceFp s{p, terms, SequenceKind::kGeneric};
        const std::vector<oracle::i64> ref(terms.begin(), terms.end());
        const std::size_t lc = linear_complexity(s);
        CHECK(lc == oracle::bm_complexity(ref, p));
        CHECK(lc == oracle::gcd_complexity(ref, p));

        std::vector<Residue> shifted(terms.begin() + 1, terms.end());
        shifted.push_back(terms.front());
        CHECK(linear_complexity(SequenceFp{p, shifted, SequenceKind::kGeneric}) == lc);
      }
    }
  }
}
