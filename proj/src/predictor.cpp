#include "kelc/predictor.hpp"

#include <algorithm>
#include <stdexcept>

#include "kelc/error.hpp"
#include "kelc/poly.hpp"

namespace kelc {
namespace {

// Accumulates rule applications as an interval intersection.
class Intersection {
 public:
  explicit Intersection(std::size_t n) : hi_(n) {}

  void exact(std::size_t value, const char* rule) { range(value, value, rule); }
  void range(std::size_t lo, std::size_t hi, const char* rule) {
    lo_ = std::max(lo_, lo);
    hi_ = std::min(hi_, hi);
    note(rule);
  }
  void upper(std::size_t hi, const char* rule) {
    hi_ = std::min(hi_, hi);
    note(rule);
  }
  void lower(std::size_t lo, const char* rule) {
    lo_ = std::max(lo_, lo);
    note(rule);
  }

  Prediction finish() const {
    if (lo_ > hi_) {
      throw std::logic_error("contradictory prediction rules: " + std::to_string(lo_) + " > " +
                             std::to_string(hi_));
    }
    Prediction out;
    out.lo = lo_;
    out.hi = hi_;
    out.rules = rules_;
    if (rules_.empty()) {
      out.kind = PredictionKind::kUnknown;
    } else {
      out.kind = lo_ == hi_ ? PredictionKind::kExact : PredictionKind::kRange;
    }
    return out;
  }

 private:
  void note(const char* rule) {
    if (std::find(rules_.begin(), rules_.end(), rule) == rules_.end()) rules_.emplace_back(rule);
  }

  std::size_t lo_ = 0;
  std::size_t hi_;
  std::vector<std::string> rules_;
};

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

void check_prime_shape(std::uint32_t p) {
  if (p < 5 || p % 8 != 5) {
    throw Error(Errc::kWrongResidueClass, "p = " + std::to_string(p) + " is not 5 mod 8");
  }
}

}  // namespace

std::string to_string(PredictionKind kind) {
  switch (kind) {
    case PredictionKind::kExact: return "exact";
    case PredictionKind::kRange: return "range";
    case PredictionKind::kUnknown: return "unknown";
  }
  return "unknown";
}

Prediction predict_aux(SequenceKind kind, std::uint32_t p, std::size_t k) {
  check_prime_shape(p);
  const std::size_t a = (p - 1) / 4;
  const std::size_t c = (p - 1) / 2;
  // k < (p-1)/3 without fractions
  const bool below_third = 3 * k < p - 1;
  Intersection acc(p);

  if (kind == SequenceKind::kQ) {
    if (k <= a) {
      acc.exact(3 * a + 1, "q-table");
    } else if (below_third) {
      acc.exact(c + 1, "q-table");
    } else if (k < c) {
      acc.range(a + 1, c + 1, "q-table");
    } else if (k == c) {
      acc.exact(1, "q-table");
    } else {
      acc.upper(1, "q-table");
    }
    if (k >= 3 * a + 1) acc.exact(0, "erase-all");
    return acc.finish();
  }
  if (kind == SequenceKind::kV) {
    if (k == 0) {
      acc.exact(p, "v-table");
    } else if (k < a) {
      acc.exact(3 * a + 1, "v-table");
    } else if (k == a) {
      acc.range(ceil_div(9 * (p - 1), 16), 3 * a + 1, "v-table");
    } else if (below_third) {
      acc.exact(c + 1, "v-table");
    } else if (k < c) {
      acc.range(a, c, "v-table");
    } else if (k > c) {
      acc.exact(0, "v-table");
    }
    if (k >= c + 1) acc.exact(0, "erase-all");
    return acc.finish();
  }
  throw Error(Errc::kInvalidArgument, "predict_aux takes q or v");
}

Prediction predict_u(const PrimeParams& params, const Triple& triple, std::size_t k) {
  const GateResult gate = gate_configuration(params, triple);
  if (!gate.gated) throw Error(Errc::kNotGated, gate.diagnosis);

  const std::size_t p = params.p;
  const std::size_t a = (p - 1) / 4;
  const std::size_t c = (p - 1) / 2;
  const bool below_third = 3 * k < p - 1;
  const std::size_t low_budget = 3 * (p - 1) / 2 + 2;
  Intersection acc(2 * p);

  if (k == 0) acc.exact((7 * p + 1) / 4, "linear-complexity");
  if (k == 1) acc.exact(p == 5 ? 8 : (7 * p + 1) / 4, "single-error");
  if (k >= 2 && k < a) acc.exact(low_budget, "low-budget");
  if (k == a && p > 5) acc.range(ceil_div(21 * (p - 1), 16) + 1, low_budget, "quarter-budget");

  const Family family = triple.family();
  if (family == Family::kCase2) {
    if (k == a + 1 && p > 5) acc.range(p + 1, low_budget, "case2-step");
    if (k >= a + 2 && below_third) acc.exact(p + 1, "case2-plateau");
    if (!below_third && k < c) {
      // The upper bound is carried over from the plateau witness, whose weight
      // is a + 2; below that budget only the lower bound stands.
      if (k >= a + 2) {
        acc.range(c + 1, p + 1, "case2-tail");
      } else {
        acc.lower(c + 1, "case2-tail");
      }
    }
    if (k == c + 2) acc.upper(c + 2, "case2-half");
  } else if (family == Family::kCase1) {
    if (k >= a + 1 && below_third) acc.exact(5 * (p - 1) / 4 + 2, "case1-plateau");
    if (!below_third && k < c) acc.range(c + 1, 5 * (p - 1) / 4 + 2, "case1-tail");
    if (k == c + 2) acc.upper(3 * (p - 1) / 4 + 2, "case1-half");
  }

  if (k >= c) {
    const Prediction v = predict_aux(SequenceKind::kV, params.p, (k - c) / 2);
    if (v.kind != PredictionKind::kUnknown) acc.upper(v.hi + 1, "half-budget");
  }

  const Prediction q = predict_aux(SequenceKind::kQ, params.p, k);
  const Prediction v = predict_aux(SequenceKind::kV, params.p, k);
  if (q.kind != PredictionKind::kUnknown && v.kind != PredictionKind::kUnknown) {
    acc.lower(q.lo + v.lo, "aux-sum");
  }
  if (k >= 2) {
    const Prediction q2 = predict_aux(SequenceKind::kQ, params.p, k - 2);
    acc.upper(3 * (p - 1) / 4 + 1 + q2.hi, "lifted-q");
  }
  if (k >= p) acc.exact(0, "erase-all");
  return acc.finish();
}

std::size_t lnov_multiplicity(const std::array<Residue, 4>& c, const PrimeParams& params) {
  const QuarticClasses classes = quartic_classes(params);
  std::vector<Residue> terms(params.p, 0);
  for (int i = 0; i < 4; ++i) {
    for (std::uint32_t t : classes.d[i]) terms[t] = c[i] % params.p;
  }
  const PolyFp r = PolyFp::from_residues(params.p, std::move(terms));
  return root_multiplicity(r, Point::kPlusOne, params.p).multiplicity;
}

bool lnov_admissible(std::size_t multiplicity, std::uint32_t p) noexcept {
  const std::size_t a = (p - 1) / 4;
  return multiplicity == 0 || multiplicity == a || multiplicity == 2 * a ||
         multiplicity == 3 * a || multiplicity == p;
}

}  // namespace kelc
