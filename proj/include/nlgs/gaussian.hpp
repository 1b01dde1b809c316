#pragma once

// Fermionic Gaussian states as covariance matrices
//   Gamma_ij = (i/2) <[c_i, c_j]>,   <c_i c_j> = delta_ij - i Gamma_ij,
// with expectations of arbitrary Majorana polynomials by Wick's theorem in
// Pfaffian form.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nlgs/majorana.hpp"

namespace nlgs {

inline constexpr double kStructuralTol = 1e-10;

class CovarianceMatrix {
 public:
  CovarianceMatrix() = default;
  /// Validates antisymmetry and |entries| <= 1 within `tol`, then
  /// antisymmetrizes exactly.
  explicit CovarianceMatrix(Eigen::MatrixXd gamma, double tol = kStructuralTol);

  const Eigen::MatrixXd& matrix() const noexcept { return gamma_; }
  int num_majoranas() const noexcept { return static_cast<int>(gamma_.rows()); }
  std::size_t modes() const noexcept {
    return static_cast<std::size_t>(gamma_.rows() / 2);
  }
  double operator()(int i, int j) const { return gamma_(i - 1, j - 1); }

  /// max |Gamma^2 + 1| entry.
  double purity_defect() const;
  bool is_pure(double tol = kStructuralTol) const;

 private:
  Eigen::MatrixXd gamma_;
};

CovarianceMatrix vacuum_covariance(std::size_t modes);

/// <c_i c_j> = delta_ij - i Gamma_ij, 1-based labels.
Complex two_point(const CovarianceMatrix& state, int i, int j);

/// Pf(A) for an even-dimensional antisymmetric matrix. Dimension <= 8 uses
/// the expansion along the first row; larger matrices use Parlett-Reid
/// elimination with pivoting.
double pfaffian(const Eigen::MatrixXd& a);
double pfaffian_expansion(const Eigen::MatrixXd& a);
double pfaffian_elimination(Eigen::MatrixXd a);

/// Sum over monomials of coeff * Pf(<c_a c_b>)_{a<b in the index set}.
/// Odd monomials contribute zero. Works for pure and mixed Gamma.
Complex expectation(const CovarianceMatrix& state, const MajoranaPolynomial& op);

class GaussianMixture {
 public:
  using Component = std::pair<double, CovarianceMatrix>;

  /// Weights must be nonnegative and sum to 1 within 1e-12.
  explicit GaussianMixture(std::vector<Component> components);
  static GaussianMixture pure(CovarianceMatrix state);

  const std::vector<Component>& components() const noexcept { return components_; }
  int num_majoranas() const noexcept {
    return components_.front().second.num_majoranas();
  }

 private:
  std::vector<Component> components_;
};

Complex mixture_expectation(const GaussianMixture& mix,
                            const MajoranaPolynomial& op);

/// normalization * sum_t Re<terms[t]>.
double energy(const GaussianMixture& mix,
              std::span<const MajoranaPolynomial> terms,
              double normalization = 1.0);

/// Principal submatrix on `keep` (1-based labels, any order; result ordered
/// ascending). Need not keep whole modes.
CovarianceMatrix reduce(const CovarianceMatrix& state,
                        std::span<const int> keep);

/// Relabels an operator supported on `keep` into the reduced register.
MajoranaPolynomial restrict_to(const MajoranaPolynomial& op,
                               std::span<const int> keep);

/// O Gamma_vac O^T with O from the QR factor of a seeded standard-normal
/// matrix (sign-fixed, det +1). Deterministic per seed.
CovarianceMatrix random_pure_gaussian(std::size_t modes, std::uint64_t seed);

/// Precompiled real-valued observable for repeated evaluation on many
/// covariance matrices (used by the minimizer).
class CompiledObservable {
 public:
  explicit CompiledObservable(const MajoranaPolynomial& op);

  int num_majoranas() const noexcept { return num_majoranas_; }
  double constant() const noexcept { return constant_; }

  /// Re <op> on the covariance matrix `gamma`.
  double value(const Eigen::MatrixXd& gamma) const;

  /// Sum over monomials that contain label a or b (0-based), constant
  /// excluded. Differences of this quantity equal differences of value()
  /// when only rows/columns a and b of gamma change.
  double value_touching(const Eigen::MatrixXd& gamma, int a, int b) const;

 private:
  struct Term {
    std::vector<int> indices;  // 0-based, ascending
    double weight;             // Re(coeff * (-i)^{deg/2})
  };
  double term_value(const Term& t, const Eigen::MatrixXd& gamma) const;

  int num_majoranas_ = 0;
  double constant_ = 0.0;
  std::vector<Term> terms_;
  std::vector<std::vector<std::size_t>> touching_;
};

}  // namespace nlgs
