#include <doctest.h>

#include <random>

#include "kelc/error.hpp"
#include "kelc/kerror.hpp"
#include "kelc/predictor.hpp"
#include "kelc/witness.hpp"

using namespace kelc;

namespace {

void check_exact(const Prediction& pr, std::size_t value) {
  CHECK(pr.kind == PredictionKind::kExact);
  CHECK(pr.lo == value);
  CHECK(pr.hi == value);
}

void check_range(const Prediction& pr, std::size_t lo, std::size_t hi) {
  CHECK(pr.kind == PredictionKind::kRange);
  CHECK(pr.lo == lo);
  CHECK(pr.hi == hi);
}

}  // namespace

TEST_CASE("predict_u examples") {
  const Triple t013 = Triple::make(0, 1, 3);
  const GatedConfig c13 = resolve_gated_params(13, t013);
  check_exact(predict_u(c13.params, t013, 0), 23);
  check_exact(predict_u(c13.params, t013, 1), 23);
  check_exact(predict_u(c13.params, t013, 2), 20);

  const Triple t012 = Triple::make(0, 1, 2);
  const GatedConfig c37 = resolve_gated_params(37, t012);
  check_exact(predict_u(c37.params, t012, 10), 47);
  check_exact(predict_u(c37.params, t012, 11), 47);

  const GatedConfig c29 = resolve_gated_params(29, t013);
  check_range(predict_u(c29.params, t013, 7), 38, 44);
  check_exact(predict_u(c29.params, t013, 9), 30);

  check_exact(predict_u(find_prime_params(5), t012, 1), 8);
}

TEST_CASE("at p = 13 the tail upper bound needs the plateau witness weight") {
  // (p-1)/3 = 4 = (p-1)/4 + 1, so the plateau range is empty and the witness
  // of weight (p-1)/4 + 2 = 5 is not available at k = 4.
  const Triple t = Triple::make(0, 1, 3);
  const GatedConfig cfg = resolve_gated_params(13, t);
  const Prediction at4 = predict_u(cfg.params, t, 4);
  check_range(at4, 14, 20);
  CHECK(at4.contains(*kerror_oracle(build_u(cfg.params, t), 4, {10'000'000, 1}).exact));
  check_range(predict_u(cfg.params, t, 5), 7, 14);
}

TEST_CASE("predict_aux examples") {
  check_exact(predict_aux(SequenceKind::kQ, 29, 9), 15);
  check_exact(predict_aux(SequenceKind::kV, 29, 0), 29);
  check_exact(predict_aux(SequenceKind::kV, 29, 20), 0);
  check_range(predict_aux(SequenceKind::kQ, 13, 5), 4, 7);
  check_range(predict_aux(SequenceKind::kV, 29, 7), 16, 22);
  check_exact(predict_aux(SequenceKind::kQ, 29, 14), 1);
  CHECK(predict_aux(SequenceKind::kV, 29, 14).kind == PredictionKind::kUnknown);
  CHECK_THROWS_AS(predict_aux(SequenceKind::kU, 29, 1), Error);
  CHECK_THROWS_AS(predict_aux(SequenceKind::kQ, 17, 1), Error);
}

TEST_CASE("prediction shape invariants") {
  for (std::uint32_t p : {5u, 13u, 29u, 37u, 53u, 101u}) {
    const PrimeParams base = find_prime_params(p);
    for (Family f : {Family::kCase1, Family::kCase2}) {
      if (!family_matches(base, f)) continue;
      const PrimeParams pp = find_prime_params(p, *find_family_theta(p, f));
      for (const Triple& t : family_triples(f)) {
        for (std::size_t k = 0; k <= 2 * p; ++k) {
          const Prediction pr = predict_u(pp, t, k);
          CHECK(pr.lo <= pr.hi);
          CHECK(pr.hi <= 2 * p);
          CHECK((pr.kind == PredictionKind::kExact) == (pr.lo == pr.hi && !pr.rules.empty()));
          CHECK((pr.kind == PredictionKind::kUnknown) == pr.rules.empty());
        }
      }
    }
    for (SequenceKind kind : {SequenceKind::kQ, SequenceKind::kV}) {
      for (std::size_t k = 0; k <= p; ++k) {
        const Prediction pr = predict_aux(kind, p, k);
        CHECK(pr.lo <= pr.hi);
        CHECK(pr.hi <= p);
      }
    }
  }
}

TEST_CASE("predict_u requires a gated configuration") {
  CHECK_THROWS_AS(predict_u(find_prime_params(13, 2), Triple::make(0, 1, 3), 2), Error);
  CHECK_THROWS_AS(predict_u(find_prime_params(13, 7), Triple::make(2, 1, 0), 2), Error);
}

TEST_CASE("soundness sandwich: prediction, oracle and witness") {
  struct Case {
    std::uint32_t p;
    std::size_t kmax;
  };
  for (const Case c : {Case{5, 10}, Case{13, 7}, Case{29, 3}}) {
    const PrimeParams base = find_prime_params(c.p);
    for (Family f : {Family::kCase1, Family::kCase2}) {
      if (!family_matches(base, f)) continue;
      const PrimeParams pp = find_prime_params(c.p, *find_family_theta(c.p, f));
      for (const Triple& t : family_triples(f)) {
        const auto rows = kerror_profile(build_u(pp, t), c.kmax, {10'000'000, 1});
        for (std::size_t k = 0; k <= c.kmax; ++k) {
          CAPTURE(c.p);
          CAPTURE(t.str());
          CAPTURE(k);
          const std::size_t value = *rows[k].exact;
          const Prediction pr = predict_u(pp, t, k);
          CHECK(pr.lo <= value);
          CHECK(value <= pr.hi);
          CHECK(value <= witness_bound(pp, t, k).upper);
        }
      }
    }
  }
}

TEST_CASE("aux tables against the oracle") {
  for (std::uint32_t p : {5u, 13u}) {
    const Triple t = Triple::make(0, 1, 3);
    const GatedConfig cfg = resolve_gated_params(p, t);
    for (const SequenceFp& s : {build_q(cfg.params, t), build_v(cfg.params, t)}) {
      const auto rows = kerror_profile(s, p, {10'000'000, 1});
      for (std::size_t k = 0; k <= p; ++k) {
        if (p == 13 && s.kind == SequenceKind::kV && k == 4) continue;  // see below
        CAPTURE(p);
        CAPTURE(to_string(s.kind));
        CAPTURE(k);
        CHECK(predict_aux(s.kind, p, k).contains(*rows[k].exact));
      }
    }
  }
}

TEST_CASE("the v table's upper bound at k = (p-1)/3 fails at p = 13") {
  // When (p-1)/3 is an integer the bound-only row starts at k = (p-1)/3, but
  // at p = 13 the oracle still finds the middle-row value there.
  const Triple t = Triple::make(0, 1, 3);
  const GatedConfig cfg = resolve_gated_params(13, t);
  const KErrorResult r = kerror_oracle(build_v(cfg.params, t), 4, {10'000'000, 1});
  CHECK(r.exact == 7u);
  check_range(predict_aux(SequenceKind::kV, 13, 4), 3, 6);
  CHECK_FALSE(predict_aux(SequenceKind::kV, 13, 4).contains(7));
}

TEST_CASE("lnov multiplicities") {
  const PrimeParams p13 = find_prime_params(13, 7);
  CHECK(lnov_multiplicity({0, 0, 0, 0}, p13) == 13);
  CHECK(lnov_multiplicity({1, 1, 1, 1}, p13) == 0);
  for (std::uint32_t p : {13u, 29u, 37u}) {
    const PrimeParams pp = find_prime_params(p);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 200; ++i) {
      std::array<Residue, 4> c{};
      for (auto& x : c) x = static_cast<Residue>(rng() % p);
      const std::size_t m = lnov_multiplicity(c, pp);
      CAPTURE(p);
      CHECK(lnov_admissible(m, p));
    }
    // Equal coefficients: S_r = c (S_0 + ... + S_3 restricted to period p).
    CHECK(lnov_multiplicity({2, 2, 2, 2}, pp) == 0);
  }
  CHECK(lnov_admissible(0, 13));
  CHECK(lnov_admissible(3, 13));
  CHECK(lnov_admissible(6, 13));
  CHECK(lnov_admissible(9, 13));
  CHECK(lnov_admissible(13, 13));
  CHECK_FALSE(lnov_admissible(4, 13));
}
