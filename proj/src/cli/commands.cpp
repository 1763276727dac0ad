#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "kelc/error.hpp"
#include "kelc/kerror.hpp"
#include "kelc/predictor.hpp"
#include "kelc/sequences.hpp"
#include "kelc/verify.hpp"
#include "kelc/witness.hpp"

namespace kelc::cli {
namespace {

using nlohmann::json;

struct Row {
  std::size_t k = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<std::size_t> exact;
  std::string method;
  std::optional<std::vector<std::size_t>> witness_support;
};

SequenceKind parse_kind(const std::string& s) {
  if (s == "u") return SequenceKind::kU;
  if (s == "q") return SequenceKind::kQ;
  return SequenceKind::kV;
}

SequenceFp build(const PrimeParams& params, const Triple& t, SequenceKind kind) {
  switch (kind) {
    case SequenceKind::kQ: return build_q(params, t);
    case SequenceKind::kV: return build_v(params, t);
    default: return build_u(params, t);
  }
}

// Terms as integers, with the -1 entries of v written as -1.
std::vector<long> signed_terms(const SequenceFp& s) {
  std::vector<long> out;
  out.reserve(s.terms.size());
  for (Residue r : s.terms) {
    out.push_back(s.kind == SequenceKind::kV && r == s.modulus - 1 ? -1L : static_cast<long>(r));
  }
  return out;
}

Triple default_triple(std::uint32_t p) {
  const PrimeParams params = find_prime_params(p);
  if (params.case1) return family_triples(Family::kCase1)[0];
  if (params.case2) return family_triples(Family::kCase2)[0];
  throw Error(Errc::kNoQuarticForm, "no family fits p = " + std::to_string(p) + "; pass --triple");
}

Row from_result(const KErrorResult& r) {
  Row row{r.k, r.lower, r.upper, r.exact, r.method, std::nullopt};
  if (r.witness) row.witness_support = r.support;
  return row;
}

Row from_prediction(std::size_t k, const Prediction& pr) {
  Row row;
  row.k = k;
  row.lower = pr.lo;
  row.upper = pr.hi;
  row.exact = pr.exact();
  std::string rules;
  for (const std::string& r : pr.rules) rules += (rules.empty() ? "" : "+") + r;
  row.method = "predict:" + (rules.empty() ? std::string("none") : rules);
  return row;
}

json row_json(const Row& r) {
  json j{{"k", r.k}, {"lower", r.lower}, {"upper", r.upper}, {"method", r.method}};
  j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
  j["witness_support"] = r.witness_support ? json(*r.witness_support) : json(nullptr);
  return j;
}

struct Common {
  std::uint32_t p = 0;
  std::string triple;
  std::optional<std::uint32_t> theta;
};

void add_common(CLI::App* cmd, Common& c, bool triple_required) {
  cmd->add_option("--p", c.p, "prime, 5 mod 8")->required();
  auto* t = cmd->add_option("--triple", c.triple, "class selectors m,j,l");
  if (triple_required) t->required();
  cmd->add_option("--theta", c.theta, "primitive root override");
}

GatedConfig resolve(const Common& c, const Triple& t) { return resolve_gated_params(c.p, t, c.theta); }

// ---------------------------------------------------------------- primes

int cmd_primes(std::uint64_t lo, std::uint64_t hi, const std::string& which,
               const std::string& format, std::ostream& out, std::ostream& err) {
  if (lo > hi) {
    err << "error: --min exceeds --max\n";
    return kExitUsage;
  }
  const CaseFilter filter =
      which == "1" ? CaseFilter::kCase1 : which == "2" ? CaseFilter::kCase2 : CaseFilter::kAny;
  const auto primes = enumerate_valid_primes(lo, hi, filter);
  if (format == "json") {
    json arr = json::array();
    for (const PrimeParams& pp : primes) {
      arr.push_back({{"p", pp.p}, {"theta", pp.theta}, {"g", pp.g}, {"x", pp.x},
                     {"y_abs", pp.y_abs}, {"case1", pp.case1}, {"case2", pp.case2}});
    }
    out << arr.dump(2) << "\n";
    return kExitOk;
  }
  out << std::left << std::setw(8) << "p" << std::setw(7) << "theta" << std::setw(8) << "g"
      << std::setw(7) << "x" << std::setw(7) << "y_abs" << std::setw(7) << "case1"
      << "case2\n";
  for (const PrimeParams& pp : primes) {
    out << std::setw(8) << pp.p << std::setw(7) << pp.theta << std::setw(8) << pp.g
        << std::setw(7) << pp.x << std::setw(7) << pp.y_abs << std::setw(7) << pp.case1
        << pp.case2 << "\n";
  }
  return kExitOk;
}

// -------------------------------------------------------------- generate

int cmd_generate(const Common& c, const std::string& kind_name, const std::string& format,
                 std::ostream& out) {
  const Triple t = Triple::parse(c.triple);
  const GatedConfig cfg = resolve(c, t);
  const SequenceFp s = build(cfg.params, t, parse_kind(kind_name));
  const std::vector<long> terms = signed_terms(s);
  if (format == "json") {
    json j{{"p", c.p},         {"triple", t.str()}, {"theta", cfg.params.theta},
           {"kind", kind_name}, {"terms", terms},    {"gated", cfg.gate.gated}};
    out << j.dump() << "\n";
    return kExitOk;
  }
  for (long v : terms) {
    if (v < 0) {
      out << '-';
    } else {
      out << v;
    }
  }
  out << "\n";
  return kExitOk;
}

// --------------------------------------------------------------- analyze

int cmd_analyze(const Common& c, const std::string& format, std::ostream& out) {
  const Triple t = Triple::parse(c.triple);
  const GatedConfig cfg = resolve(c, t);
  const SequenceFp u = build_u(cfg.params, t);
  const AutocorrProfile ac = autocorrelation_profile(u);
  const std::size_t lc = linear_complexity(u);
  const bool balanced = u.weight() == cfg.params.p;
  if (format == "json") {
    json j{{"p", c.p},
           {"triple", t.str()},
           {"theta", cfg.params.theta},
           {"lc", lc},
           {"autocorrelation", ac.values},
           {"optimal", ac.optimal},
           {"balanced", balanced},
           {"gated", cfg.gate.gated},
           {"gate_reason", to_string(cfg.gate.reason)}};
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "p " << c.p << "  triple " << t.str() << "  theta " << cfg.params.theta << "\n"
      << "lc " << lc << "\nbalanced " << balanced << "\noptimal " << ac.optimal << "\ngated "
      << cfg.gate.gated;
  if (!cfg.gate.gated) out << " (" << cfg.gate.diagnosis << ")";
  out << "\nautocorrelation";
  for (auto v : ac.values) out << ' ' << v;
  out << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- kerror

struct KerrorArgs {
  Common common;
  std::string kind = "u";
  std::size_t k_max = 0;
  std::string method = "all";
  std::uint64_t budget = 10'000'000;
  std::string format = "csv";
  bool strict = false;
  unsigned workers = 0;
};

int cmd_kerror(const KerrorArgs& args, std::ostream& out, std::ostream& err) {
  const Common& c = args.common;
  const Triple t = c.triple.empty() ? default_triple(c.p) : Triple::parse(c.triple);
  const GatedConfig cfg = resolve(c, t);
  const SequenceKind kind = parse_kind(args.kind);
  const SequenceFp s = build(cfg.params, t, kind);
  const bool all = args.method == "all";
  const bool want_oracle = args.method == "oracle" || all;
  bool want_witness = args.method == "witness" || all;
  bool want_predict = args.method == "predict" || all;

  if (kind == SequenceKind::kU && !cfg.gate.gated) {
    if (!all && (want_witness || want_predict)) {
      err << "error: " << cfg.gate.diagnosis << "\n";
      return kExitUsage;
    }
    if (all) err << "not gated (" << cfg.gate.diagnosis << "); oracle only\n";
    want_witness = false;
    want_predict = false;
  }
  if (args.method == "witness" && kind != SequenceKind::kU) {
    err << "error: witness bounds are constructed for u only\n";
    return kExitUsage;
  }

  std::vector<KErrorResult> oracle;
  bool truncated = false;
  if (want_oracle) {
    oracle = kerror_profile(s, args.k_max, {args.budget, args.workers});
    truncated = std::any_of(oracle.begin(), oracle.end(),
                            [](const KErrorResult& r) { return r.budget_exceeded; });
  }

  int status = kExitOk;
  std::vector<Row> rows;
  for (std::size_t k = 0; k <= args.k_max; ++k) {
    std::vector<Row> parts;
    if (want_oracle) parts.push_back(from_result(oracle[k]));
    if (want_witness && kind == SequenceKind::kU) {
      parts.push_back(from_result(witness_bound(cfg.params, t, k)));
    }
    if (want_predict) {
      const Prediction pr = kind == SequenceKind::kU ? predict_u(cfg.params, t, k)
                                                     : predict_aux(kind, c.p, k);
      if (pr.kind != PredictionKind::kUnknown || parts.empty()) {
        parts.push_back(from_prediction(k, pr));
      }
    }
    Row merged = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      const Row& r = parts[i];
      const std::size_t lo = std::max(merged.lower, r.lower);
      const std::size_t hi = std::min(merged.upper, r.upper);
      if (lo > hi) {
        err << "inconsistent bounds at k=" << k << ": " << merged.method << " ["
            << merged.lower << ", " << merged.upper << "] vs " << r.method << " [" << r.lower
            << ", " << r.upper << "]\n";
        status = kExitVerification;
        continue;
      }
      merged.lower = lo;
      merged.upper = hi;
      merged.method += "+" + r.method;
      if (!merged.witness_support) merged.witness_support = r.witness_support;
    }
    merged.exact = merged.lower == merged.upper ? std::optional<std::size_t>(merged.lower)
                                                : std::nullopt;
    rows.push_back(std::move(merged));
  }

  if (args.format == "json") {
    json j{{"p", c.p},       {"triple", t.str()},        {"theta", cfg.params.theta},
           {"kind", args.kind}, {"gated", cfg.gate.gated}, {"budget_exceeded", truncated}};
    json arr = json::array();
    for (const Row& r : rows) arr.push_back(row_json(r));
    j["rows"] = arr;
    out << j.dump(2) << "\n";
  } else {
    out << "k,lower,upper,exact,method\n";
    for (const Row& r : rows) {
      out << r.k << ',' << r.lower << ',' << r.upper << ',';
      if (r.exact) out << *r.exact;
      out << ',' << r.method << "\n";
    }
  }
  if (truncated) {
    err << "budget of " << args.budget << " supports exceeded; affected rows are bracketed\n";
    if (args.strict && status == kExitOk) status = kExitBudget;
  }
  return status;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Common& c, const VerifyOptions& options, const std::string& format,
               std::ostream& out) {
  std::optional<Triple> t;
  if (!c.triple.empty()) t = Triple::parse(c.triple);
  const VerifyReport report = verify_theorems(c.p, t, c.theta, options);
  if (format == "json") {
    json checks = json::array();
    for (const Check& ch : report.checks) {
      checks.push_back({{"triple", ch.triple},
                        {"name", ch.name},
                        {"status", to_string(ch.status)},
                        {"detail", ch.detail}});
    }
    json j{{"p", c.p}, {"checks", checks}, {"exit_code", report.exit_code()}};
    out << j.dump(2) << "\n";
  } else {
    for (const Check& ch : report.checks) {
      out << std::left << std::setw(8) << to_string(ch.status) << std::setw(8)
          << (ch.triple.empty() ? "-" : ch.triple) << std::setw(32) << ch.name << ch.detail
          << "\n";
    }
  }
  return report.exit_code();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-error linear complexity of quartic cyclotomic sequences over F_p"};
  app.require_subcommand(1);

  std::uint64_t min_p = 2;
  std::uint64_t max_p = 200;
  std::string which = "any";
  std::string primes_format = "table";
  auto* primes = app.add_subcommand("primes", "list primes admitting an optimal family");
  primes->add_option("--min", min_p, "lower end")->capture_default_str();
  primes->add_option("--max", max_p, "upper end")->capture_default_str();
  primes->add_option("--case", which, "1, 2 or any")
      ->check(CLI::IsMember({"1", "2", "any"}))
      ->capture_default_str();
  primes->add_option("--format", primes_format)->check(CLI::IsMember({"table", "json"}));

  Common gen;
  std::string gen_kind = "u";
  std::string gen_format = "bits";
  auto* generate = app.add_subcommand("generate", "emit one period of u, q or v");
  add_common(generate, gen, true);
  generate->add_option("--kind", gen_kind)->check(CLI::IsMember({"u", "q", "v"}));
  generate->add_option("--format", gen_format)->check(CLI::IsMember({"bits", "json"}));

  Common ana;
  std::string ana_format = "json";
  auto* analyze = app.add_subcommand("analyze", "linear complexity and autocorrelation of u");
  add_common(analyze, ana, true);
  analyze->add_option("--format", ana_format)->check(CLI::IsMember({"table", "json"}));

  KerrorArgs ke;
  auto* kerror = app.add_subcommand("kerror", "k-error linear complexity profile");
  add_common(kerror, ke.common, false);
  kerror->add_option("--kind", ke.kind)->check(CLI::IsMember({"u", "q", "v"}));
  kerror->add_option("--k-max", ke.k_max)->required();
  kerror->add_option("--method", ke.method)
      ->check(CLI::IsMember({"oracle", "witness", "predict", "all"}));
  kerror->add_option("--budget", ke.budget, "supports visited per oracle run")
      ->capture_default_str();
  kerror->add_option("--out", ke.format)->check(CLI::IsMember({"csv", "json"}));
  kerror->add_flag("--strict", ke.strict, "exit 2 when the budget is exceeded");
  kerror->add_option("--workers", ke.workers, "oracle threads, 0 for all cores");

  Common ver;
  VerifyOptions vopts;
  std::string ver_format = "table";
  auto* verify = app.add_subcommand("verify", "numeric checks of every closed form");
  add_common(verify, ver, false);
  verify->add_option("--budget", vopts.budget, "supports per oracle run")->capture_default_str();
  verify->add_option("--seed", vopts.seed, "seed for sampled checks")->capture_default_str();
  verify->add_option("--workers", vopts.workers, "oracle threads, 0 for all cores");
  verify->add_option("--format", ver_format)->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*primes) return cmd_primes(min_p, max_p, which, primes_format, out, err);
    if (*generate) return cmd_generate(gen, gen_kind, gen_format, out);
    if (*analyze) return cmd_analyze(ana, ana_format, out);
    if (*kerror) {
      if (ke.k_max > 2 * static_cast<std::size_t>(ke.common.p)) {
        err << "error: --k-max exceeds the period\n";
        return kExitUsage;
      }
      return cmd_kerror(ke, out, err);
    }
    if (*verify) return cmd_verify(ver, vopts, ver_format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("kelc");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace kelc::cli
