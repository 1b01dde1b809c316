// nlgs: build fermionic CSS Hamiltonians, certify the Gaussian energy bound,
// run the property suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse or usage error,
// 3 invalid code, 4 capacity (ancillas or dense-oracle cap).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "nlgs/certifier.hpp"
#include "nlgs/dense_oracle.hpp"
#include "nlgs/parity_check_io.hpp"
#include "nlgs/report_json.hpp"
#include "nlgs/rotation.hpp"
#include "nlgs/verify.hpp"

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kParse = 2, kInvalidCode = 3, kCapacity = 4 };

struct PipelineOptions {
  std::string input;
  std::string mapping = "assimilate";
  std::string normalization = "generators";
  std::string term_set = "generators";
  int extra_ancillas = 0;
};

void add_pipeline_options(CLI::App* cmd, PipelineOptions& o) {
  cmd->add_option("file", o.input, "parity-check file")->required();
  cmd->add_option("--mapping", o.mapping, "Pauli to Majorana map")
      ->check(CLI::IsMember({"jw", "assimilate"}));
  cmd->add_option("--normalization", o.normalization, "1/#generators or 1/|group|")
      ->check(CLI::IsMember({"generators", "group"}));
  cmd->add_option("--terms", o.term_set, "sum over generators or the full group")
      ->check(CLI::IsMember({"generators", "group"}));
  cmd->add_option("--extra-ancillas", o.extra_ancillas,
                  "unused Majoranas appended to the register")
      ->check(CLI::NonNegativeNumber);
}

nlgs::FermionicHamiltonian build_pipeline(const PipelineOptions& o) {
  const auto code = nlgs::read_parity_check_file(o.input);
  nlgs::HamiltonianOptions hopt;
  hopt.normalization = o.normalization == "group" ? nlgs::Normalization::group_order
                                                  : nlgs::Normalization::generator_count;
  hopt.term_set =
      o.term_set == "group" ? nlgs::TermSet::full_group : nlgs::TermSet::generators;
  const auto hq = nlgs::build_css_hamiltonian(code, hopt);
  const auto mapping = o.mapping == "jw" ? nlgs::Mapping::jordan_wigner
                                         : nlgs::Mapping::assimilation;
  return nlgs::fermionic_hamiltonian(hq, mapping, o.extra_ancillas);
}

void write_json(const nlohmann::ordered_json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int cmd_build(const PipelineOptions& o, const std::string& json_out) {
  const auto h = build_pipeline(o);
  if (!json_out.empty() && json_out != "-") {
    std::cout << "terms " << h.terms.size() << ", k0 " << h.k0() << ", register "
              << h.num_majoranas << " Majoranas\n";
  }
  if (h.odd_qubit_count() && h.mapping == nlgs::Mapping::assimilation) {
    std::cerr << "warning: odd qubit count under assimilation\n";
  }
  write_json(nlgs::hamiltonian_json(h), json_out);
  return kOk;
}

struct CertifyOptions {
  double theta = 0.0;
  std::size_t restarts = 32;
  std::size_t max_iters = 500;
  std::uint64_t seed = 0;
  std::string ancilla = "fresh";
  std::string json_out;
  bool no_oracle = false;
  std::size_t oracle_cap = nlgs::oracle::kDefaultQubitCap;
};

int cmd_certify(const PipelineOptions& p, const CertifyOptions& c) {
  if (!std::isfinite(c.theta)) throw std::invalid_argument("theta must be finite");
  const auto h = build_pipeline(p);
  const auto policy =
      c.ancilla == "shared" ? nlgs::AncillaPolicy::shared : nlgs::AncillaPolicy::fresh;
  const auto rotated = nlgs::rotate_hamiltonian(h, c.theta, policy);

  nlgs::BoundConfig cfg;
  cfg.theta = c.theta;
  cfg.restarts = c.restarts;
  cfg.max_iters = c.max_iters;
  cfg.seed = c.seed;

  std::optional<std::size_t> cap;
  if (!c.no_oracle) cap = c.oracle_cap;
  const bool odd = h.odd_qubit_count() && h.mapping == nlgs::Mapping::assimilation;
  const auto report = nlgs::certify(rotated, cfg, cap, odd);

  nlgs::RunManifest m;
  m.input = p.input;
  m.mapping = p.mapping;
  m.normalization = p.normalization;
  m.ancilla = c.ancilla;
  m.extra_ancillas = p.extra_ancillas;
  m.theta = c.theta;
  m.restarts = cfg.restarts;
  m.max_iters = cfg.max_iters;
  m.initial_step = cfg.initial_step;
  m.shrink = cfg.shrink;
  m.fd_step = cfg.fd_step;
  m.seed = cfg.seed;
  m.oracle = !c.no_oracle;

  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  if (!c.json_out.empty() && c.json_out != "-") {
    std::cout << "verdict " << nlgs::to_string(report.verdict) << ": claimed bound "
              << report.claimed_bound << ", Gaussian minimum "
              << report.gaussian_min_energy;
    if (report.exact_ground_energy) {
      std::cout << ", exact ground " << *report.exact_ground_energy;
    }
    std::cout << "\n";
  }
  write_json(nlgs::report_json(report, m), c.json_out);
  return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  const auto results = nlgs::run_suite(suite, seed);
  bool ok = true;
  std::printf("%-10s %-40s %-10s %-12s %s\n", "suite", "check", "tolerance", "max error",
              "status");
  for (const auto& r : results) {
    std::printf("%-10s %-40s %-10.1e %-12.3e %s\n", r.suite.c_str(), r.name.c_str(),
                r.tolerance, r.max_error, r.passed ? "PASS" : "FAIL");
    ok = ok && r.passed;
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermionic CSS Hamiltonians and Gaussian energy bounds", "nlgs"};
  app.set_version_flag("--version", nlgs::kToolVersion);
  app.require_subcommand(1);

  PipelineOptions build_opts;
  std::string build_json;
  auto* build = app.add_subcommand("build", "map a parity-check file to Majorana terms");
  add_pipeline_options(build, build_opts);
  build->add_option("--json", build_json, "write JSON here instead of stdout");

  PipelineOptions cert_pipe;
  CertifyOptions cert;
  auto* certify = app.add_subcommand("certify", "minimize and compare against the bound");
  add_pipeline_options(certify, cert_pipe);
  certify->add_option("--theta", cert.theta, "rotation angle in radians")->required();
  certify->add_option("--seed", cert.seed, "base seed for restarts")->required();
  certify->add_option("--restarts", cert.restarts)->check(CLI::PositiveNumber);
  certify->add_option("--max-iters", cert.max_iters)->check(CLI::PositiveNumber);
  certify->add_option("--ancilla", cert.ancilla, "ancilla-pair policy")
      ->check(CLI::IsMember({"fresh", "shared"}));
  certify->add_option("--json", cert.json_out, "write the report here instead of stdout");
  certify->add_flag("--no-oracle", cert.no_oracle, "skip exact diagonalization");
  certify->add_option("--oracle-cap", cert.oracle_cap, "dense-oracle qubit cap");

  std::string suite = "all";
  std::uint64_t verify_seed = 7;
  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"algebra", "wick", "rotation", "spectrum", "all"}));
  verify->add_option("--seed", verify_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*build) return cmd_build(build_opts, build_json);
    if (*certify) return cmd_certify(cert_pipe, cert);
    if (*verify) return cmd_verify(suite, verify_seed);
  } catch (const nlgs::ParseError& e) {
    std::cerr << "parse error (line " << e.line() << "): " << e.what() << "\n";
    return kParse;
  } catch (const nlgs::InvalidCodeError& e) {
    std::cerr << "invalid code: " << e.what() << "\n";
    return kInvalidCode;
  } catch (const nlgs::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << " (required " << e.required()
              << ", available " << e.available() << ")";
    if (std::string(e.what()).find("dense oracle") != std::string::npos) std::cerr << "; pass --no-oracle to skip the oracle";
    std::cerr << "\n";
    return kCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kOk;
}
