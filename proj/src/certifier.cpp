#include "nlgs/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "nlgs/dense_oracle.hpp"

namespace nlgs {

namespace {

constexpr double kGradTol = 1e-10;
constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-16;

// Rows and columns a, b of w <- R w R^T, R the Givens rotation by t in the
// (a, b) plane.
void rotate_plane(Eigen::MatrixXd& w, int a, int b, double t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  const Eigen::RowVectorXd ra = w.row(a);
  const Eigen::RowVectorXd rb = w.row(b);
  w.row(a) = c * ra + s * rb;
  w.row(b) = -s * ra + c * rb;
  const Eigen::VectorXd ca = w.col(a);
  const Eigen::VectorXd cb = w.col(b);
  w.col(a) = c * ca + s * cb;
  w.col(b) = -s * ca + c * cb;
}

void restore_plane(Eigen::MatrixXd& w, const Eigen::MatrixXd& g, int a, int b) {
  w.row(a) = g.row(a);
  w.row(b) = g.row(b);
  w.col(a) = g.col(a);
  w.col(b) = g.col(b);
}

Eigen::MatrixXd gradient(const CompiledObservable& obs, const Eigen::MatrixXd& gamma,
                         double h) {
  const int m = static_cast<int>(gamma.rows());
  Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd work = gamma;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      rotate_plane(work, a, b, h);
      const double up = obs.value_touching(work, a, b);
      restore_plane(work, gamma, a, b);
      rotate_plane(work, a, b, -h);
      const double down = obs.value_touching(work, a, b);
      restore_plane(work, gamma, a, b);
      const double g = (up - down) / (2.0 * h);
      grad(a, b) = g;
      grad(b, a) = -g;
    }
  }
  return grad;
}

Eigen::MatrixXd reorthogonalize(const Eigen::MatrixXd& o) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(o, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

Eigen::MatrixXd conjugated(const Eigen::MatrixXd& o, const Eigen::MatrixXd& g0) {
  Eigen::MatrixXd g = o * g0 * o.transpose();
  return 0.5 * (g - g.transpose());
}

struct RestartOutcome {
  Eigen::MatrixXd gamma;
  double energy = 0.0;
  std::vector<double> trace;
  std::size_t iterations = 0;
  bool converged = false;
  bool monotone = true;
  double max_purity_defect = 0.0;
};

double purity_defect(const Eigen::MatrixXd& g) {
  const auto m = g.rows();
  return (g * g + Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
}

RestartOutcome descend(const CompiledObservable& obs, const Eigen::MatrixXd& start,
                       const BoundConfig& cfg) {
  const auto m = start.rows();
  RestartOutcome out;
  Eigen::MatrixXd o = Eigen::MatrixXd::Identity(m, m);
  Eigen::MatrixXd gamma = start;
  double e = obs.value(gamma);
  out.trace.push_back(e);
  out.max_purity_defect = purity_defect(gamma);
  double step = cfg.initial_step;

  for (std::size_t it = 0; it < cfg.max_iters; ++it) {
    ++out.iterations;
    const Eigen::MatrixXd g = gradient(obs, gamma, cfg.fd_step);
    const double gnorm2 = 0.5 * g.squaredNorm();
    if (std::sqrt(gnorm2) < kGradTol) {
      out.converged = true;
      break;
    }
    bool accepted = false;
    while (step >= kMinStep) {
      const Eigen::MatrixXd q = (-step * g).exp();
      Eigen::MatrixXd o_try = reorthogonalize(q * o);
      Eigen::MatrixXd gamma_try = conjugated(o_try, start);
      const double e_try = obs.value(gamma_try);
      if (e_try <= e - kArmijo * step * gnorm2) {
        if (e_try > e) out.monotone = false;
        o = std::move(o_try);
        gamma = std::move(gamma_try);
        e = e_try;
        accepted = true;
        break;
      }
      step *= cfg.shrink;
    }
    if (!accepted) {
      // No descent left at machine precision: a stationary point.
      out.converged = true;
      break;
    }
    out.trace.push_back(e);
    out.max_purity_defect = std::max(out.max_purity_defect, purity_defect(gamma));
    step /= cfg.shrink;
  }
  out.gamma = std::move(gamma);
  out.energy = e;
  return out;
}

double real_expectation(const CovarianceMatrix& g, const MajoranaPolynomial& op) {
  return expectation(g, op).real();
}

}  // namespace

void BoundConfig::validate() const {
  if (restarts == 0) throw std::invalid_argument("restarts must be at least 1");
  if (k0 && *k0 == 0) throw std::invalid_argument("k0 must be at least 1");
  if (!(initial_step > 0.0) || !(fd_step > 0.0)) {
    throw std::invalid_argument("step sizes must be positive");
  }
  if (!(shrink > 0.0 && shrink < 1.0)) {
    throw std::invalid_argument("shrink factor must lie in (0, 1)");
  }
  if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
}

double claimed_bound(std::size_t k0, double theta) {
  const double k = static_cast<double>(k0);
  return 0.5 * (1.0 - k * (std::cos(2.0 * theta) + 3.0 * std::sin(2.0 * theta)));
}

double window_phase() { return std::asin(1.0 / std::sqrt(10.0)); }

bool ThetaWindow::contains(double theta) const {
  const double pi = std::numbers::pi;
  double t = std::fmod(theta, pi);
  if (t < 0.0) t += pi;
  return std::any_of(intervals.begin(), intervals.end(),
                     [t](const auto& iv) { return iv.first < t && t < iv.second; });
}

ThetaWindow theta_window(std::size_t k0) {
  if (k0 == 0) throw std::invalid_argument("k0 must be at least 1");
  const double pi = std::numbers::pi;
  const double phi = window_phase();
  const double a = std::asin(1.0 / (static_cast<double>(k0) * std::sqrt(10.0)));
  ThetaWindow w;
  w.k0 = k0;
  w.below_regime = k0 < 2;
  // 2theta + phi in (pi - a, pi), and in (2pi, 2pi + a) after wrapping.
  w.intervals.emplace_back((pi - a - phi) / 2.0, (pi - phi) / 2.0);
  w.intervals.emplace_back(pi - phi / 2.0, pi - phi / 2.0 + a / 2.0);
  return w;
}

bool in_window(std::size_t k0, double theta) { return theta_window(k0).contains(theta); }

MinimizationResult minimize_gaussian_energy(const MajoranaPolynomial& h,
                                            const BoundConfig& cfg) {
  cfg.validate();
  const int m = h.num_majoranas();
  if (m < 2 || m % 2 != 0) {
    throw DimensionError("Gaussian minimization needs an even register, got " +
                         std::to_string(m));
  }
  const CompiledObservable obs(h);
  MinimizationResult res;
  res.energy = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    // SO(m) preserves the fermion parity of Gamma, so odd restarts begin in
    // the other sector via the reflection c_1 -> -c_1.
    Eigen::MatrixXd start =
        random_pure_gaussian(static_cast<std::size_t>(m / 2), cfg.seed + r).matrix();
    if (r % 2 == 1) {
      start.row(0) *= -1.0;
      start.col(0) *= -1.0;
    }
    RestartOutcome out = descend(obs, start, cfg);
    res.iterations += out.iterations;
    res.monotone = res.monotone && out.monotone;
    res.max_purity_defect = std::max(res.max_purity_defect, out.max_purity_defect);
    res.restart_energies.push_back(out.energy);
    if (out.energy < res.energy) {
      res.energy = out.energy;
      res.best_restart = r;
      res.gamma = CovarianceMatrix(std::move(out.gamma));
      res.trace = std::move(out.trace);
      res.converged = out.converged;
    }
  }
  return res;
}

MinimizationResult minimize_gaussian_energy(const RotatedHamiltonian& h,
                                            const BoundConfig& cfg) {
  return minimize_gaussian_energy(h.total(), cfg);
}

MinimizationResult minimize_gaussian_energy(const FermionicHamiltonian& h,
                                            const BoundConfig& cfg) {
  return minimize_gaussian_energy(h.total(), cfg);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent:
      return "consistent";
    case Verdict::bound_violated:
      return "bound_violated";
    case Verdict::bound_vacuous:
      return "bound_vacuous";
  }
  return "unknown";
}

std::optional<double> BoundReport::empirical_gap() const {
  if (!exact_ground_energy) return std::nullopt;
  return gaussian_min_energy - *exact_ground_energy;
}

BoundReport certify(const RotatedHamiltonian& h, const BoundConfig& cfg,
                    std::optional<std::size_t> oracle_cap, bool odd_qubit_count) {
  cfg.validate();
  BoundReport rep;
  rep.theta = h.theta;
  rep.k0 = cfg.k0.value_or(h.k0);
  if (rep.k0 == 0) throw std::invalid_argument("Hamiltonian has no terms");
  rep.claimed_bound = claimed_bound(rep.k0, h.theta);
  rep.per_term_bound = rep.claimed_bound;
  rep.theta_in_window = in_window(rep.k0, h.theta);
  rep.generators_commute = h.generators_commute;
  rep.odd_qubit_count = odd_qubit_count;

  const MajoranaPolynomial total = h.total();
  if (oracle_cap) {
    rep.exact_ground_energy =
        oracle::ground_energy(oracle::densify_majorana(total, *oracle_cap));
  }

  rep.minimizer = minimize_gaussian_energy(total, cfg);
  rep.gaussian_min_energy = rep.minimizer.energy;
  rep.argmin_gamma = rep.minimizer.gamma;

  if (!rep.theta_in_window || rep.claimed_bound <= 0.0) {
    rep.verdict = Verdict::bound_vacuous;
  } else {
    rep.verdict = rep.gaussian_min_energy >= rep.claimed_bound ? Verdict::consistent
                                                               : Verdict::bound_violated;
  }

  for (std::size_t t = 0; t < h.terms.size(); ++t) {
    const auto& term = h.terms[t];
    TermDiagnostic d;
    d.index = t;
    d.kind = term.kind;
    d.k = term.k;
    d.generator_expectation = real_expectation(rep.argmin_gamma, term.generator);
    d.projector_energy = 0.5 * (1.0 - d.generator_expectation);
    if (term.kind != TermKind::mixed && t < h.term_generators.size()) {
      const auto cmp = printed_closed_form(term.kind, term.sites, h.num_qubits,
                                           h.num_majoranas, h.theta,
                                           h.term_generators[t]);
      double sum = 0.0;
      for (const auto& f : cmp.factors) sum += real_expectation(rep.argmin_gamma, f);
      d.additive_surrogate = sum;
      d.factor_product = real_expectation(rep.argmin_gamma, cmp.closed_form);
    }
    rep.terms.push_back(std::move(d));
  }

  if (!rep.theta_in_window) {
    rep.warnings.push_back("theta lies outside the admissible window; the bound is vacuous");
  }
  if (rep.k0 < 2) rep.warnings.push_back("k0 < 2 is below the regime of the bound");
  if (!rep.generators_commute) {
    rep.warnings.push_back("rotation generators do not all commute; D is the ordered product");
  }
  if (odd_qubit_count) {
    rep.warnings.push_back("odd qubit count: assimilation is only defined for even n");
  }
  if (!rep.minimizer.converged) {
    rep.warnings.push_back("minimizer stopped at the iteration limit");
  }
  return rep;
}

}  // namespace nlgs
