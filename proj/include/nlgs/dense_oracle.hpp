#pragma once

// Dense-matrix ground truth on q qubits (dimension 2^q, qubit 1 is the most
// significant bit). Majorana c_i is built directly from its Jordan-Wigner
// Kronecker form, independently of the symbolic algebra.

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "nlgs/gaussian.hpp"
#include "nlgs/majorana.hpp"
#include "nlgs/pauli.hpp"
#include "nlgs/rotation.hpp"

namespace nlgs::oracle {

inline constexpr std::size_t kDefaultQubitCap = 12;

struct DenseOperator {
  std::size_t qubits = 0;
  Eigen::MatrixXcd matrix;

  std::size_t dim() const noexcept { return std::size_t{1} << qubits; }
};

/// Qubits needed for a Majorana register (odd sizes pad one mode).
std::size_t qubits_for_register(int num_majoranas);

DenseOperator densify_pauli(const PauliString& p,
                            std::size_t cap = kDefaultQubitCap);

/// Represented on ceil(N/2) qubits. Throws CapacityError above `cap`.
DenseOperator densify_majorana(const MajoranaPolynomial& a,
                               std::size_t cap = kDefaultQubitCap);

/// Dense c_i (1-based) on `qubits` qubits.
Eigen::MatrixXcd majorana_matrix(int index, std::size_t qubits);

/// Sum of normalization * (I - S)/2 over the qubit terms.
DenseOperator densify_hamiltonian(const QubitHamiltonian& h,
                                  std::size_t cap = kDefaultQubitCap);

/// Sorted eigenvalues; throws std::invalid_argument if not Hermitian
/// within 1e-10.
std::vector<double> spectrum(const DenseOperator& h);
double ground_energy(const DenseOperator& h);

/// D = prod_g (cos theta I + i sin theta C_g), generators in list order.
DenseOperator rotation_unitary(const std::vector<RotationGenerator>& generators,
                               double theta, int num_majoranas,
                               std::size_t cap = kDefaultQubitCap);

/// A state vector whose covariance matrix is `gamma` (pure, even size):
/// the ground vector of the quadratic parent Hamiltonian
/// -(i/2) sum_ij Gamma_ij c_i c_j, which is nondegenerate with energy -m.
Eigen::VectorXcd gaussian_state_vector(const CovarianceMatrix& gamma,
                                       std::size_t cap = kDefaultQubitCap);

/// Gamma_ij = (i/2) <v|[c_i, c_j]|v> for i, j <= num_majoranas.
Eigen::MatrixXd covariance_of(const Eigen::VectorXcd& v, int num_majoranas);

Complex expect(const Eigen::VectorXcd& v, const DenseOperator& op);

}  // namespace nlgs::oracle
