#pragma once

// JSON serialization of build summaries and certification reports.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "nlgs/certifier.hpp"
#include "nlgs/rotation.hpp"

namespace nlgs {

inline constexpr const char* kToolVersion = "0.1.0";

/// Everything that determines a run; embedded in every report.
struct RunManifest {
  std::string input;
  std::string mapping = "assimilate";
  std::string normalization = "generators";
  std::string ancilla = "fresh";
  int extra_ancillas = 0;
  double theta = 0.0;
  std::size_t restarts = 32;
  std::size_t max_iters = 500;
  double initial_step = 0.1;
  double shrink = 0.5;
  double fd_step = 1e-5;
  std::uint64_t seed = 0;
  bool oracle = true;
  std::string tool_version = kToolVersion;
};

nlohmann::ordered_json manifest_json(const RunManifest& m);

/// Term count, k per term, k0, register size and the mapped generators.
nlohmann::ordered_json hamiltonian_json(const FermionicHamiltonian& h);

/// Fixed top-level keys: claimed_bound, gaussian_min, exact_ground,
/// theta_in_window, generators_commute, verdict, manifest, then details.
nlohmann::ordered_json report_json(const BoundReport& report,
                                   const RunManifest& manifest);

}  // namespace nlgs
