#pragma once

// Claimed Gaussian energy lower bound, its admissible theta window, a
// local-search minimizer over pure Gaussian states, and the certification
// report that compares the three.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlgs/gaussian.hpp"
#include "nlgs/rotation.hpp"

namespace nlgs {

struct BoundConfig {
  double theta = 0.0;
  std::optional<std::size_t> k0;  // defaults to the Hamiltonian's k0
  std::size_t restarts = 32;
  std::size_t max_iters = 500;
  double initial_step = 0.1;
  double shrink = 0.5;
  double fd_step = 1e-5;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument for restarts == 0, k0 == 0 or
  /// non-positive step parameters.
  void validate() const;
};

/// (1/2) [1 - k0 (cos 2theta + 3 sin 2theta)].
double claimed_bound(std::size_t k0, double theta);

/// arcsin(1/sqrt(10)); cos x + 3 sin x = sqrt(10) sin(x + phi).
double window_phase();

struct ThetaWindow {
  std::size_t k0 = 0;
  /// Open intervals in [0, pi) with sqrt(10) sin(2theta + phi) in (0, 1/k0).
  std::vector<std::pair<double, double>> intervals;
  /// True for k0 < 2, outside the regime where the bound is meant to apply.
  bool below_regime = false;

  bool contains(double theta) const;
};

/// Throws std::invalid_argument for k0 == 0.
ThetaWindow theta_window(std::size_t k0);

/// Membership of theta (reduced mod pi) in theta_window(k0).
bool in_window(std::size_t k0, double theta);

struct MinimizationResult {
  CovarianceMatrix gamma;        // best state found
  double energy = 0.0;           // its energy, an upper bound on the infimum
  std::size_t best_restart = 0;
  std::vector<double> restart_energies;
  std::vector<double> trace;     // accepted energies of the best restart
  std::size_t iterations = 0;    // summed over restarts
  bool converged = false;        // best restart met the gradient tolerance
  bool monotone = true;          // every accepted step lowered the energy
  double max_purity_defect = 0.0;
};

/// Riemannian descent on Gamma = O Gamma_vac O^T: central finite-difference
/// gradients along every Givens plane, Armijo backtracking, retraction
/// O <- exp(-s G) O with re-orthogonalization. Restart r starts from
/// random_pure_gaussian(m, seed + r), reflected in c_1 for odd r so both
/// parity sectors are searched.
MinimizationResult minimize_gaussian_energy(const MajoranaPolynomial& h,
                                            const BoundConfig& cfg);
MinimizationResult minimize_gaussian_energy(const RotatedHamiltonian& h,
                                            const BoundConfig& cfg);
MinimizationResult minimize_gaussian_energy(const FermionicHamiltonian& h,
                                            const BoundConfig& cfg);

enum class Verdict { consistent, bound_violated, bound_vacuous };
std::string to_string(Verdict v);

struct TermDiagnostic {
  std::size_t index = 0;
  TermKind kind = TermKind::mixed;
  std::size_t k = 0;
  double generator_expectation = 0.0;  // <T~> on the minimizer
  double projector_energy = 0.0;       // (1 - <T~>)/2
  /// Sum over sites of <h^j> with the corrected printed factors; the exact
  /// product <prod_j h^j> alongside. Only for X- and Z-type terms.
  std::optional<double> additive_surrogate;
  std::optional<double> factor_product;
};

struct BoundReport {
  double theta = 0.0;
  std::size_t k0 = 0;
  double claimed_bound = 0.0;
  double per_term_bound = 0.0;
  double gaussian_min_energy = 0.0;
  CovarianceMatrix argmin_gamma;
  std::optional<double> exact_ground_energy;
  bool theta_in_window = false;
  bool generators_commute = true;
  bool odd_qubit_count = false;
  Verdict verdict = Verdict::bound_vacuous;
  MinimizationResult minimizer;
  std::vector<TermDiagnostic> terms;
  std::vector<std::string> warnings;

  /// gaussian_min_energy - exact_ground_energy when the oracle ran.
  std::optional<double> empirical_gap() const;
};

/// Runs the minimizer on h and, when `oracle_cap` is set, the dense oracle
/// (throws CapacityError if the register needs more qubits than the cap).
/// Verdict: bound_vacuous outside the window, otherwise consistent iff
/// E* >= claimed bound. `odd_qubit_count` only adds a warning.
BoundReport certify(const RotatedHamiltonian& h, const BoundConfig& cfg,
                    std::optional<std::size_t> oracle_cap = 12,
                    bool odd_qubit_count = false);

}  // namespace nlgs
