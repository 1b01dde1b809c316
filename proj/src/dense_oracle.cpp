#include "nlgs/dense_oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace nlgs::oracle {

namespace {

constexpr Complex kI{0.0, 1.0};

// Generalized permutation matrix: column b has a single entry val[b] in row
// row[b]. Pauli strings and Majorana monomials are all of this shape.
struct SignedPermutation {
  std::vector<std::uint32_t> row;
  std::vector<Complex> val;

  static SignedPermutation identity(std::size_t dim) {
    SignedPermutation p;
    p.row.resize(dim);
    p.val.assign(dim, Complex{1.0, 0.0});
    for (std::size_t b = 0; b < dim; ++b) p.row[b] = static_cast<std::uint32_t>(b);
    return p;
  }

  // this * other
  SignedPermutation then_after(const SignedPermutation& other) const {
    SignedPermutation out;
    out.row.resize(row.size());
    out.val.resize(row.size());
    for (std::size_t b = 0; b < row.size(); ++b) {
      const std::uint32_t mid = other.row[b];
      out.row[b] = row[mid];
      out.val[b] = val[mid] * other.val[b];
    }
    return out;
  }

  void accumulate_into(Eigen::MatrixXcd& m, Complex scale) const {
    for (std::size_t b = 0; b < row.size(); ++b) {
      m(row[b], static_cast<Eigen::Index>(b)) += scale * val[b];
    }
  }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
    for (std::size_t b = 0; b < row.size(); ++b) {
      out(row[b]) += val[b] * v(static_cast<Eigen::Index>(b));
    }
    return out;
  }
};

void check_cap(std::size_t qubits, std::size_t cap) {
  if (qubits > cap) {
    throw CapacityError("dense oracle needs " + std::to_string(qubits) +
                            " qubits, cap is " + std::to_string(cap),
                        qubits, cap);
  }
}

SignedPermutation majorana_perm(int index, std::size_t qubits) {
  const std::size_t q = static_cast<std::size_t>((index + 1) / 2);  // 1-based qubit
  if (index < 1 || q > qubits) {
    throw DimensionError("c_" + std::to_string(index) + " does not fit on " +
                         std::to_string(qubits) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << qubits;
  const std::size_t pos = qubits - q;
  const std::uint32_t full = static_cast<std::uint32_t>(dim - 1);
  const std::uint32_t below = static_cast<std::uint32_t>((std::size_t{1} << (pos + 1)) - 1);
  const std::uint32_t string_mask = full ^ below;  // qubits 1 .. q-1
  SignedPermutation p;
  p.row.resize(dim);
  p.val.resize(dim);
  for (std::uint32_t b = 0; b < dim; ++b) {
    const double sign = (std::popcount(b & string_mask) % 2 == 0) ? 1.0 : -1.0;
    const bool bit = ((b >> pos) & 1u) != 0;
    p.row[b] = b ^ (1u << pos);
    if (index % 2 == 1) {
      p.val[b] = sign;  // X
    } else {
      p.val[b] = sign * (bit ? -kI : kI);  // Y
    }
  }
  return p;
}

SignedPermutation monomial_perm(const MajoranaIndices& idx, std::size_t qubits) {
  auto p = SignedPermutation::identity(std::size_t{1} << qubits);
  for (int i : idx) p = p.then_after(majorana_perm(i, qubits));
  return p;
}

}  // namespace

std::size_t qubits_for_register(int num_majoranas) {
  return static_cast<std::size_t>((num_majoranas + 1) / 2);
}

DenseOperator densify_pauli(const PauliString& p, std::size_t cap) {
  const std::size_t q = p.num_qubits();
  check_cap(q, cap);
  const std::size_t dim = std::size_t{1} << q;
  std::uint32_t xmask = 0;
  std::uint32_t zmask = 0;
  for (std::size_t k = 0; k < q; ++k) {
    if (p.x(k)) xmask |= 1u << (q - 1 - k);
    if (p.z(k)) zmask |= 1u << (q - 1 - k);
  }
  static const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  DenseOperator out{q, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim))};
  for (std::uint32_t b = 0; b < dim; ++b) {
    const double sign = (std::popcount(b & zmask) % 2 == 0) ? 1.0 : -1.0;
    out.matrix(b ^ xmask, b) = kPhase[p.phase_exp()] * sign;
  }
  return out;
}

DenseOperator densify_majorana(const MajoranaPolynomial& a, std::size_t cap) {
  const std::size_t q = qubits_for_register(a.num_majoranas());
  check_cap(q, cap);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << q);
  DenseOperator out{q, Eigen::MatrixXcd::Zero(dim, dim)};
  for (const auto& [idx, c] : a.terms()) monomial_perm(idx, q).accumulate_into(out.matrix, c);
  return out;
}

Eigen::MatrixXcd majorana_matrix(int index, std::size_t qubits) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << qubits);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  majorana_perm(index, qubits).accumulate_into(m, 1.0);
  return m;
}

DenseOperator densify_hamiltonian(const QubitHamiltonian& h, std::size_t cap) {
  check_cap(h.n, cap);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.n);
  DenseOperator out{h.n, Eigen::MatrixXcd::Zero(dim, dim)};
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& t : h.terms) {
    out.matrix += 0.5 * (id - densify_pauli(t.generator, cap).matrix);
  }
  out.matrix *= h.normalization;
  return out;
}

std::vector<double> spectrum(const DenseOperator& h) {
  const double skew = (h.matrix - h.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (skew > 1e-10) {
    throw std::invalid_argument("operator is not Hermitian (defect " +
                                std::to_string(skew) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix,
                                                         Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double ground_energy(const DenseOperator& h) { return spectrum(h).front(); }

DenseOperator rotation_unitary(const std::vector<RotationGenerator>& generators,
                               double theta, int num_majoranas, std::size_t cap) {
  const std::size_t q = qubits_for_register(num_majoranas);
  check_cap(q, cap);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << q);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Identity(dim, dim);
  const double c = std::cos(theta);
  const Complex is = kI * std::sin(theta);
  for (const auto& g : generators) {
    Eigen::MatrixXcd cm = Eigen::MatrixXcd::Zero(dim, dim);
    monomial_perm(g.monomial.indices, q).accumulate_into(cm, g.monomial.coeff);
    d = c * d + is * (d * cm);
  }
  return {q, std::move(d)};
}

Eigen::VectorXcd gaussian_state_vector(const CovarianceMatrix& gamma, std::size_t cap) {
  const int n = gamma.num_majoranas();
  if (n % 2 != 0 || !gamma.is_pure(1e-8)) {
    throw std::invalid_argument("gaussian_state_vector needs a pure covariance matrix");
  }
  const std::size_t q = static_cast<std::size_t>(n / 2);
  check_cap(q, cap);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << q);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const double gij = gamma(i, j);
      if (gij == 0.0) continue;
      monomial_perm({i, j}, q).accumulate_into(h, -kI * gij);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  Eigen::VectorXcd v = solver.eigenvectors().col(0);
  return v / v.norm();
}

Eigen::MatrixXd covariance_of(const Eigen::VectorXcd& v, int num_majoranas) {
  const auto dim = static_cast<std::size_t>(v.size());
  const std::size_t q = static_cast<std::size_t>(std::countr_zero(dim));
  std::vector<Eigen::VectorXcd> cv;
  for (int i = 1; i <= num_majoranas; ++i) cv.push_back(majorana_perm(i, q).apply(v));
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(num_majoranas, num_majoranas);
  for (int i = 0; i < num_majoranas; ++i) {
    for (int j = i + 1; j < num_majoranas; ++j) {
      // <v| c_i c_j |v> = (c_i v)^dagger (c_j v) since c_i is Hermitian.
      const Complex cc = cv[static_cast<std::size_t>(i)].dot(cv[static_cast<std::size_t>(j)]);
      g(i, j) = (kI * cc).real();
      g(j, i) = -g(i, j);
    }
  }
  return g;
}

Complex expect(const Eigen::VectorXcd& v, const DenseOperator& op) {
  return v.dot(op.matrix * v);
}

}  // namespace nlgs::oracle
