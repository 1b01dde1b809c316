#include "nlgs/report_json.hpp"

namespace nlgs {

namespace {

using Json = nlohmann::ordered_json;

std::string kind_name(TermKind k) {
  switch (k) {
    case TermKind::x_type:
      return "X";
    case TermKind::z_type:
      return "Z";
    case TermKind::mixed:
      return "mixed";
  }
  return "mixed";
}

Json polynomial_json(const MajoranaPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [idx, c] : p.terms()) {
    terms.push_back({{"indices", idx}, {"re", c.real()}, {"im", c.imag()}});
  }
  return terms;
}

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json optional_json(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json manifest_json(const RunManifest& m) {
  return {{"input", m.input},
          {"mapping", m.mapping},
          {"normalization", m.normalization},
          {"ancilla", m.ancilla},
          {"extra_ancillas", m.extra_ancillas},
          {"theta", m.theta},
          {"restarts", m.restarts},
          {"max_iters", m.max_iters},
          {"initial_step", m.initial_step},
          {"shrink", m.shrink},
          {"fd_step", m.fd_step},
          {"seed", m.seed},
          {"oracle", m.oracle},
          {"tool_version", m.tool_version}};
}

Json hamiltonian_json(const FermionicHamiltonian& h) {
  Json terms = Json::array();
  for (const auto& t : h.terms) {
    terms.push_back({{"kind", kind_name(t.kind)},
                     {"k", t.k},
                     {"sites", t.sites},
                     {"support", t.support},
                     {"generator", polynomial_json(t.generator)}});
  }
  return {{"num_qubits", h.num_qubits},
          {"num_majoranas", h.num_majoranas},
          {"mapping", h.mapping == Mapping::assimilation ? "assimilate" : "jw"},
          {"normalization", h.normalization},
          {"term_count", h.terms.size()},
          {"k0", h.k0()},
          {"odd_qubit_count", h.odd_qubit_count()},
          {"terms", std::move(terms)}};
}

Json report_json(const BoundReport& r, const RunManifest& manifest) {
  Json j;
  j["claimed_bound"] = r.claimed_bound;
  j["gaussian_min"] = r.gaussian_min_energy;
  j["exact_ground"] = optional_json(r.exact_ground_energy);
  j["theta_in_window"] = r.theta_in_window;
  j["generators_commute"] = r.generators_commute;
  j["verdict"] = to_string(r.verdict);
  j["manifest"] = manifest_json(manifest);

  j["theta"] = r.theta;
  j["k0"] = r.k0;
  j["per_term_bound"] = r.per_term_bound;
  j["empirical_gap"] = optional_json(r.empirical_gap());
  j["odd_qubit_count"] = r.odd_qubit_count;

  const auto& mr = r.minimizer;
  j["minimizer"] = {{"best_restart", mr.best_restart},
                    {"restart_energies", mr.restart_energies},
                    {"iterations", mr.iterations},
                    {"converged", mr.converged},
                    {"monotone", mr.monotone},
                    {"max_purity_defect", mr.max_purity_defect}};

  Json terms = Json::array();
  for (const auto& d : r.terms) {
    terms.push_back({{"index", d.index},
                     {"kind", kind_name(d.kind)},
                     {"k", d.k},
                     {"generator_expectation", d.generator_expectation},
                     {"projector_energy", d.projector_energy},
                     {"additive_surrogate", optional_json(d.additive_surrogate)},
                     {"factor_product", optional_json(d.factor_product)}});
  }
  j["terms"] = std::move(terms);
  j["argmin_gamma"] = matrix_json(r.argmin_gamma.matrix());
  j["witness"] = r.verdict == Verdict::bound_violated
                     ? matrix_json(r.argmin_gamma.matrix())
                     : Json(nullptr);
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace nlgs
