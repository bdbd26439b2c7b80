// q2n -- command-line front end for the quasi 2-norm completion library.
//
// Subcommands:
//   verify        check the axioms 2N1/2N2/2N3/2N4* against a norm spec
//   estimate-k    sampled lower bound on the minimal quasi constant
//   norm-eval     enclose ||x, y|| for a norm spec and two vectors
//   complete-eval enclose the limit norm of two completion elements
//   demo sqrt2    end-to-end completion walkthrough on the sqrt(2) class
//
// Exit codes: 0 success, 1 malformed input, 2 invalid input values,
// 3 verification failure, 4 inconclusive. Reports are JSON on stdout (or
// --output) and byte-identical across runs with identical arguments.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "q2n/json_io.hpp"

namespace {

using q2n::Json;
using q2n::Rational;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitVerifyFail = 3;
constexpr int kExitInconclusive = 4;

// The sqrt(2) demo fixture: the Newton-orbit class over the cross norm.
// Kept in sync with data/sqrt2_demo.json (a test pins the equality); the
// embedded copy lets the demo run from any working directory.
constexpr const char* kSqrt2Fixture = R"({
  "space": {"kind": "cross3", "dim": 3, "certified_K": "1/1"},
  "rep": {"kind": "newton_sqrt", "k": "2/1", "dir": ["1/1", "0/1", "0/1"], "x0": "1/1"}
})";

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw q2n::ParseError("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void write_output(const Json& report, const std::string& output) {
  std::string text = report.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw q2n::ParseError("cannot open output '" + output + "'");
  out << text;
}

struct SamplingOptions {
  std::uint64_t seed = 0;
  std::uint64_t trials = 200;
  std::string eps = "1/1048576";
  std::string range = "-10,10";
  std::uint64_t denominator_bound = 64;

  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "sample stream seed");
    cmd->add_option("--trials", trials, "number of sampled trials");
    cmd->add_option("--eps", eps, "enclosure tolerance as p/q");
    cmd->add_option("--range", range, "component range lo,hi");
    cmd->add_option("--denom-bound", denominator_bound, "max sampled denominator");
  }

  q2n::SamplerConfig config() const {
    q2n::SamplerConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    auto comma = range.find(',');
    if (comma == std::string::npos) throw q2n::ParseError("--range expects lo,hi");
    cfg.range_lo = Rational::parse(range.substr(0, comma));
    cfg.range_hi = Rational::parse(range.substr(comma + 1));
    cfg.denominator_bound = denominator_bound;
    return cfg;
  }
};

Json sampling_json(const q2n::SamplerConfig& cfg) {
  Json j = Json::object();
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["range_lo"] = cfg.range_lo.str();
  j["range_hi"] = cfg.range_hi.str();
  j["denominator_bound"] = cfg.denominator_bound;
  return j;
}

int run_verify(const std::string& spec_path, const SamplingOptions& opts,
               const std::string& claim_k, const std::string& output) {
  q2n::TwoNormSpec spec = q2n::spec_from_json(load_json_file(spec_path));
  q2n::SamplerConfig cfg = opts.config();
  std::optional<Rational> claimed;
  if (!claim_k.empty()) claimed = Rational::parse(claim_k);
  Rational eps = Rational::parse(opts.eps);

  q2n::AxiomReport rep = q2n::verify_axioms(spec, cfg, claimed, eps);
  Json j = Json::object();
  j["command"] = "verify";
  j["sampling"] = sampling_json(cfg);
  Json body = q2n::report_to_json(rep, spec);
  for (auto& [key, value] : body.items()) j[key] = value;
  write_output(j, output);
  return rep.all_pass() ? kExitOk : kExitVerifyFail;
}

int run_estimate_k(const std::string& spec_path, const SamplingOptions& opts,
                   const std::string& output) {
  q2n::TwoNormSpec spec = q2n::spec_from_json(load_json_file(spec_path));
  q2n::SamplerConfig cfg = opts.config();
  q2n::KEstimate est = q2n::estimate_k_detailed(spec, cfg);

  Json j = Json::object();
  j["command"] = "estimate-k";
  j["sampling"] = sampling_json(cfg);
  j["estimated_K"] = est.value.str();
  j["certified_K"] = spec.certified_k().str();
  j["best_ratio_lower_bound"] = est.best_ratio.str();
  j["samples_used"] = est.samples_used;
  j["samples_skipped"] = est.samples_skipped;
  if (est.best_sample) j["best_sample"] = q2n::witness_to_json(*est.best_sample);
  j["spec"] = q2n::spec_to_json(spec);
  j["spec_hash"] = q2n::spec_hash(spec);
  write_output(j, output);
  return kExitOk;
}

int run_norm_eval(const std::string& spec_path, const std::string& x_csv,
                  const std::string& y_csv, const std::string& eps_str,
                  const std::string& output) {
  q2n::TwoNormSpec spec = q2n::spec_from_json(load_json_file(spec_path));
  q2n::VectorQ x = q2n::vector_from_csv(x_csv);
  q2n::VectorQ y = q2n::vector_from_csv(y_csv);
  Rational eps = Rational::parse(eps_str);
  q2n::Interval result = q2n::norm_eval(spec, x, y, eps);

  Json j = Json::object();
  j["command"] = "norm-eval";
  j["spec"] = q2n::spec_to_json(spec);
  j["spec_hash"] = q2n::spec_hash(spec);
  j["x"] = q2n::vector_to_json(x);
  j["y"] = q2n::vector_to_json(y);
  j["eps"] = eps.str();
  j["result"] = q2n::interval_to_json(result);
  write_output(j, output);
  return kExitOk;
}

int run_complete_eval(const std::string& a_path, const std::string& b_path,
                      const std::string& eps_str, const std::string& output) {
  q2n::CompletionElem a = q2n::elem_from_json(load_json_file(a_path));
  q2n::CompletionElem b = q2n::elem_from_json(load_json_file(b_path));
  Rational eps = Rational::parse(eps_str);
  q2n::Interval result = q2n::completion_norm(a, b, eps);

  Json j = Json::object();
  j["command"] = "complete-eval";
  j["a"] = q2n::elem_to_json(a);
  j["b"] = q2n::elem_to_json(b);
  j["eps"] = eps.str();
  j["result"] = q2n::interval_to_json(result);
  write_output(j, output);
  return kExitOk;
}

int run_demo_sqrt2(const std::string& eps_str, const std::string& fixture_path,
                   const std::string& output) {
  Json fixture;
  if (!fixture_path.empty()) {
    fixture = load_json_file(fixture_path);
  } else {
    std::ifstream in("data/sqrt2_demo.json");
    if (in) {
      in >> fixture;
    } else {
      fixture = Json::parse(kSqrt2Fixture);
    }
  }
  q2n::CompletionElem cls = q2n::elem_from_json(fixture);
  const q2n::TwoNormSpec& space = cls.space();
  Rational eps = Rational::parse(eps_str);
  if (eps.sgn() <= 0) throw q2n::DomainError("eps must be positive");

  Json checks = Json::array();
  bool all_pass = true;
  bool any_unknown = false;
  auto record = [&](const std::string& name, bool pass, Json details) {
    details["name"] = name;
    details["status"] = pass ? "pass" : "fail";
    // keep name/status first for readability
    Json ordered = Json::object();
    ordered["name"] = details["name"];
    ordered["status"] = details["status"];
    for (auto& [key, value] : details.items()) {
      if (key != "name" && key != "status") ordered[key] = value;
    }
    checks.push_back(std::move(ordered));
    all_pass = all_pass && pass;
  };

  // 0. Uniform continuity of the norm on the working region (the usage
  // precondition of every completion-level operation).
  {
    q2n::SamplerConfig cfg;
    cfg.seed = 7;
    cfg.trials = 64;
    Rational delta =
        q2n::probe_uniform_continuity(space, Rational(4), Rational(1, 1024), cfg);
    record("uniform_continuity_probe", delta.sgn() > 0, Json{{"delta", delta.str()}});
  }

  // 1. The class norm against the embedded e2 encloses sqrt(2):
  //    certified exactly by lo^2 <= 2 <= hi^2.
  q2n::Interval sqrt2_enc = q2n::Interval::point(Rational(0));
  {
    auto e2 = q2n::embed(space, q2n::VectorQ::basis(3, 1));
    sqrt2_enc = q2n::completion_norm(cls, e2, eps);
    bool contains = sqrt2_enc.lo() * sqrt2_enc.lo() <= Rational(2) &&
                    sqrt2_enc.hi() * sqrt2_enc.hi() >= Rational(2);
    bool tight = sqrt2_enc.width() <= eps;
    record("sqrt2_enclosure", contains && tight,
           Json{{"enclosure", q2n::interval_to_json(sqrt2_enc)}, {"width_ok", tight}});
  }

  // 2. Isometry of the embedding on a few exact pairs.
  {
    q2n::VectorQ x({Rational(1), Rational(2), Rational(3)});
    q2n::VectorQ y({Rational(4), Rational(5), Rational(6)});
    q2n::Interval via_class = q2n::completion_norm(q2n::embed(space, x), q2n::embed(space, y), eps);
    q2n::Interval direct = q2n::norm_eval(space, x, y, eps);
    record("embedding_isometry", via_class == direct,
           Json{{"class_norm", q2n::interval_to_json(via_class)},
                {"direct_norm", q2n::interval_to_json(direct)}});
  }

  // 3. Density: a constant-class approximant within 2^-10.
  {
    Rational tol = Rational::pow2(-10);
    q2n::VectorQ approx = q2n::approximate_by_x0(cls, tol);
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      auto zi = q2n::embed(space, q2n::VectorQ::basis(3, i));
      q2n::CompletionElem diff =
          q2n::completion_add(cls, q2n::completion_scale(Rational(-1), q2n::embed(space, approx)));
      ok = q2n::completion_norm(diff, zi, tol / Rational(2)).hi() < tol;
    }
    record("density_approximant", ok, Json{{"point", q2n::vector_to_json(approx)},
                                           {"tolerance", tol.str()}});
  }

  // 4. Completeness round trip: the diagonal limit of the embedded Newton
  //    iterates lands back in the same class.
  {
    q2n::SeqSpec orbit = cls.rep();
    auto family = [&space, orbit](q2n::Index n) {
      return q2n::embed(space, orbit.term(n)).elem;
    };
    auto family_modulus = [orbit](const Rational& tol) { return orbit.modulus(tol); };
    q2n::CompletionElem limit = q2n::complete_limit(space, family, family_modulus);
    q2n::EquivVerdict verdict = q2n::completion_equal(limit, cls, 30);
    if (verdict.status() == q2n::EquivVerdict::Status::Unknown) any_unknown = true;
    record("complete_limit_round_trip", verdict.is_equivalent(),
           Json{{"verdict", q2n::verdict_to_json(verdict)}});
  }

  Json j = Json::object();
  j["command"] = "demo";
  j["demo"] = "sqrt2";
  j["eps"] = eps.str();
  j["fixture"] = q2n::elem_to_json(cls);
  j["spec_hash"] = q2n::spec_hash(space);
  j["checks"] = std::move(checks);
  j["sqrt2_enclosure"] = q2n::interval_to_json(sqrt2_enc);
  write_output(j, output);
  if (all_pass) return kExitOk;
  return any_unknown ? kExitInconclusive : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact (quasi) 2-norms, axiom verification, and Cauchy completion"};
  app.require_subcommand(1);

  std::string spec_path, a_path, b_path, x_csv, y_csv;
  std::string eps = "1/1048576";
  std::string output, claim_k, demo_name, fixture_path;
  SamplingOptions sampling;

  auto* verify = app.add_subcommand("verify", "check the 2-norm axioms against a spec");
  verify->add_option("spec", spec_path, "norm spec JSON file")->required();
  sampling.attach(verify);
  verify->add_option("--claim-k", claim_k, "override the quasi constant to check");
  verify->add_option("--output", output, "output path ('-' for stdout)");

  auto* estimate = app.add_subcommand("estimate-k", "sampled lower bound on the quasi constant");
  estimate->add_option("spec", spec_path, "norm spec JSON file")->required();
  sampling.attach(estimate);
  estimate->add_option("--output", output, "output path ('-' for stdout)");

  auto* norm = app.add_subcommand("norm-eval", "enclose ||x, y||");
  norm->add_option("spec", spec_path, "norm spec JSON file")->required();
  norm->add_option("--x", x_csv, "first vector, comma separated p/q")->required();
  norm->add_option("--y", y_csv, "second vector, comma separated p/q")->required();
  norm->add_option("--eps", eps, "enclosure width bound as p/q");
  norm->add_option("--output", output, "output path ('-' for stdout)");

  auto* complete = app.add_subcommand("complete-eval", "limit norm of two completion elements");
  complete->add_option("a", a_path, "first element JSON file")->required();
  complete->add_option("b", b_path, "second element JSON file")->required();
  complete->add_option("--eps", eps, "enclosure width bound as p/q");
  complete->add_option("--output", output, "output path ('-' for stdout)");

  auto* demo = app.add_subcommand("demo", "bundled walkthroughs");
  demo->add_option("name", demo_name, "demo name (sqrt2)")->required();
  demo->add_option("--eps", eps, "enclosure width bound as p/q");
  demo->add_option("--fixture", fixture_path, "override the bundled fixture file");
  demo->add_option("--output", output, "output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    if (*verify) return run_verify(spec_path, sampling, claim_k, output);
    if (*estimate) return run_estimate_k(spec_path, sampling, output);
    if (*norm) return run_norm_eval(spec_path, x_csv, y_csv, eps, output);
    if (*complete) return run_complete_eval(a_path, b_path, eps, output);
    if (*demo) {
      if (demo_name != "sqrt2") {
        std::cerr << "unknown demo '" << demo_name << "'\n";
        return kExitMalformed;
      }
      return run_demo_sqrt2(eps, fixture_path, output);
    }
  } catch (const q2n::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const q2n::InconclusiveSampling& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const q2n::ParameterError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const q2n::DimensionMismatch& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const q2n::InvalidCertificate& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const q2n::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitMalformed;
}
