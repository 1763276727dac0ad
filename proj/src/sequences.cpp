#include "kelc/sequences.hpp"

#include <sstream>

#include "kelc/error.hpp"

namespace kelc {

std::string to_string(Family family) {
  switch (family) {
    case Family::kCase1: return "case1";
    case Family::kCase2: return "case2";
    case Family::kOther: return "other";
  }
  return "other";
}

std::string to_string(GateFailure reason) {
  switch (reason) {
    case GateFailure::kNone: return "none";
    case GateFailure::kForm: return "form";
    case GateFailure::kFamily: return "family";
    case GateFailure::kAutocorrelation: return "autocorrelation";
  }
  return "none";
}

Triple Triple::make(int m, int j, int l) {
  auto in_range = [](int v) { return v >= 0 && v <= 3; };
  if (!in_range(m) || !in_range(j) || !in_range(l) || m == j || j == l || m == l) {
    throw Error(Errc::kInvalidArgument, "triple must be pairwise distinct values in [0,3]");
  }
  return Triple{m, j, l};
}

Triple Triple::parse(const std::string& text) {
  std::istringstream in(text);
  int vals[3];
  char sep1 = 0;
  char sep2 = 0;
  if (!(in >> vals[0] >> sep1 >> vals[1] >> sep2 >> vals[2]) || sep1 != ',' || sep2 != ',') {
    throw Error(Errc::kInvalidArgument, "expected m,j,l but got '" + text + "'");
  }
  in >> std::ws;
  if (!in.eof()) throw Error(Errc::kInvalidArgument, "trailing input in triple '" + text + "'");
  return make(vals[0], vals[1], vals[2]);
}

Family Triple::family() const noexcept {
  for (Family f : {Family::kCase1, Family::kCase2}) {
    for (const Triple& t : family_triples(f)) {
      if (t == *this) return f;
    }
  }
  return Family::kOther;
}

std::string Triple::str() const {
  return std::to_string(m) + "," + std::to_string(j) + "," + std::to_string(l);
}

std::array<Triple, 4> family_triples(Family family) {
  if (family == Family::kCase1) {
    return {Triple{0, 1, 2}, Triple{0, 3, 2}, Triple{1, 0, 3}, Triple{1, 2, 3}};
  }
  if (family == Family::kCase2) {
    return {Triple{0, 1, 3}, Triple{0, 2, 3}, Triple{1, 2, 0}, Triple{1, 3, 0}};
  }
  throw Error(Errc::kInvalidArgument, "the 'other' family has no canonical triples");
}

bool family_matches(const PrimeParams& params, Family family) noexcept {
  return (family == Family::kCase1 && params.case1) || (family == Family::kCase2 && params.case2);
}

SequenceFp build_u(const PrimeParams& params, const Triple& triple) {
  const QuarticClasses classes = quartic_classes(params);
  const std::uint32_t p = params.p;
  SequenceFp s{p, std::vector<Residue>(2 * static_cast<std::size_t>(p), 0), SequenceKind::kU};
  for (std::uint32_t i = 0; i < 2 * p; ++i) {
    const std::uint32_t rp = i % p;
    const int cls = classes.class_of[rp];
    bool one = false;
    if (i % 2 == 0) {
      one = rp == 0 || cls == triple.m || cls == triple.j;
    } else {
      one = cls >= 0 && (cls == triple.l || cls == triple.j);
    }
    s.terms[i] = one ? 1 : 0;
  }
  return s;
}

SequenceFp build_q(const PrimeParams& params, const Triple& triple) {
  const QuarticClasses classes = quartic_classes(params);
  const std::uint32_t p = params.p;
  SequenceFp s{p, std::vector<Residue>(p, 0), SequenceKind::kQ};
  for (std::uint32_t i = 0; i < p; ++i) {
    const int cls = classes.class_of[i];
    if (cls == triple.j) {
      s.terms[i] = 2;
    } else if (i == 0 || cls == triple.m || cls == triple.l) {
      s.terms[i] = 1;
    }
  }
  return s;
}

SequenceFp build_v(const PrimeParams& params, const Triple& triple) {
  const QuarticClasses classes = quartic_classes(params);
  const std::uint32_t p = params.p;
  SequenceFp s{p, std::vector<Residue>(p, 0), SequenceKind::kV};
  for (std::uint32_t i = 0; i < p; ++i) {
    const int cls = classes.class_of[i];
    if (i == 0 || cls == triple.m) {
      s.terms[i] = 1;
    } else if (cls == triple.l) {
      s.terms[i] = p - 1;
    }
  }
  return s;
}

PolyFp class_poly(const PrimeParams& params, int n) {
  if (n < 0 || n > 3) throw Error(Errc::kInvalidArgument, "class index out of range");
  const QuarticClasses classes = quartic_classes(params);
  std::vector<std::pair<std::size_t, std::int64_t>> terms;
  for (std::uint32_t e : classes.h[n]) terms.emplace_back(e, 1);
  return PolyFp::from_terms(params.p, terms);
}

AutocorrProfile autocorrelation_profile(const SequenceFp& s) {
  for (Residue t : s.terms) {
    if (t > 1) throw Error(Errc::kNonBinary, "autocorrelation needs a 0/1 sequence");
  }
  const std::size_t n = s.period();
  AutocorrProfile out;
  out.values.resize(n);
  out.optimal = true;
  for (std::size_t tau = 0; tau < n; ++tau) {
    std::int64_t acc = 0;
    for (std::size_t t = 0; t < n; ++t) {
      acc += (s.terms[t] == s.terms[(t + tau) % n]) ? 1 : -1;
    }
    out.values[tau] = acc;
    if (tau != 0 && acc != 2 && acc != -2) out.optimal = false;
  }
  return out;
}

GateResult gate_configuration(const PrimeParams& params, const Triple& triple) {
  GateResult out;
  if (!params.has_quartic_form()) {
    out.reason = GateFailure::kForm;
    out.diagnosis = std::to_string(params.p) + " is neither 1+4y^2 nor x^2+4";
    return out;
  }
  const Family family = triple.family();
  if (family == Family::kOther || !family_matches(params, family)) {
    out.reason = GateFailure::kFamily;
    out.diagnosis = "triple " + triple.str() + " (" + to_string(family) +
                    ") does not match the form of p = " + std::to_string(params.p);
    return out;
  }
  const AutocorrProfile ac = autocorrelation_profile(build_u(params, triple));
  if (!ac.optimal) {
    out.reason = GateFailure::kAutocorrelation;
    for (std::size_t tau = 1; tau < ac.values.size(); ++tau) {
      if (ac.values[tau] != 2 && ac.values[tau] != -2) {
        out.diagnosis = "AC(" + std::to_string(tau) + ") = " + std::to_string(ac.values[tau]) +
                        " under theta = " + std::to_string(params.theta);
        break;
      }
    }
    return out;
  }
  out.gated = true;
  return out;
}

GateResult gate_configuration(std::uint32_t p, const Triple& triple,
                              std::optional<std::uint32_t> theta) {
  try {
    return gate_configuration(find_prime_params(p, theta), triple);
  } catch (const Error& e) {
    if (e.code() == Errc::kBadOverride) throw;
    GateResult out;
    out.reason = GateFailure::kForm;
    out.diagnosis = e.what();
    return out;
  }
}

GatedConfig resolve_gated_params(std::uint32_t p, const Triple& triple,
                                 std::optional<std::uint32_t> theta) {
  GatedConfig first{find_prime_params(p, theta), {}};
  first.gate = gate_configuration(first.params, triple);
  if (first.gate.gated || theta || first.gate.reason != GateFailure::kAutocorrelation) {
    return first;
  }
  for (std::uint32_t root : primitive_roots(p)) {
    if (root == first.params.theta) continue;
    GatedConfig candidate{find_prime_params(p, root), {}};
    candidate.gate = gate_configuration(candidate.params, triple);
    if (candidate.gate.gated) return candidate;
  }
  return first;
}

std::optional<std::uint32_t> find_family_theta(std::uint32_t p, Family family) {
  const PrimeParams base = find_prime_params(p);
  if (family == Family::kOther || !family_matches(base, family)) return std::nullopt;
  for (std::uint32_t root : primitive_roots(p)) {
    const PrimeParams params = find_prime_params(p, root);
    bool all = true;
    for (const Triple& t : family_triples(family)) {
      if (!gate_configuration(params, t).gated) {
        all = false;
        break;
      }
    }
    if (all) return root;
  }
  return std::nullopt;
}

}  // namespace kelc
