#include "nlgs/gaussian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace nlgs {

namespace {

// (-i)^p
Complex minus_i_power(std::size_t p) {
  switch (p % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

double pf_indexed(const Eigen::MatrixXd& g, const int* idx, int d);

double pf_expand(const Eigen::MatrixXd& g, const int* idx, int d) {
  // Expansion along the first index.
  std::array<int, 16> rest{};
  double sum = 0.0;
  for (int t = 1; t < d; ++t) {
    const double a = g(idx[0], idx[t]);
    if (a == 0.0) continue;
    int r = 0;
    for (int s = 1; s < d; ++s) {
      if (s != t) rest[static_cast<std::size_t>(r++)] = idx[s];
    }
    const double sub = pf_indexed(g, rest.data(), d - 2);
    sum += ((t % 2 == 1) ? a : -a) * sub;
  }
  return sum;
}

double pf_indexed(const Eigen::MatrixXd& g, const int* idx, int d) {
  switch (d) {
    case 0: return 1.0;
    case 2: return g(idx[0], idx[1]);
    case 4:
      return g(idx[0], idx[1]) * g(idx[2], idx[3]) -
             g(idx[0], idx[2]) * g(idx[1], idx[3]) +
             g(idx[0], idx[3]) * g(idx[1], idx[2]);
    default:
      if (d <= 8) return pf_expand(g, idx, d);
      {
        Eigen::MatrixXd sub(d, d);
        for (int r = 0; r < d; ++r) {
          for (int c = 0; c < d; ++c) sub(r, c) = g(idx[r], idx[c]);
        }
        return pfaffian_elimination(std::move(sub));
      }
  }
}

void require_antisymmetric(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols()) throw DimensionError("Pfaffian of a non-square matrix");
  if (a.rows() % 2 != 0) throw DimensionError("Pfaffian of an odd-dimensional matrix");
  if ((a + a.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("matrix is not antisymmetric");
  }
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd gamma, double tol)
    : gamma_(std::move(gamma)) {
  if (gamma_.rows() != gamma_.cols()) {
    throw DimensionError("covariance matrix must be square");
  }
  if (gamma_.size() > 0) {
    if ((gamma_ + gamma_.transpose()).cwiseAbs().maxCoeff() > tol) {
      throw std::invalid_argument("covariance matrix is not antisymmetric");
    }
    if (gamma_.cwiseAbs().maxCoeff() > 1.0 + tol) {
      throw std::invalid_argument("covariance entries must lie in [-1, 1]");
    }
  }
  gamma_ = 0.5 * (gamma_ - gamma_.transpose()).eval();
}

double CovarianceMatrix::purity_defect() const {
  const auto n = gamma_.rows();
  return (gamma_ * gamma_ + Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
}

bool CovarianceMatrix::is_pure(double tol) const {
  return gamma_.rows() % 2 == 0 && purity_defect() <= tol;
}

CovarianceMatrix vacuum_covariance(std::size_t modes) {
  if (modes == 0) throw std::invalid_argument("need at least one mode");
  const auto n = static_cast<Eigen::Index>(2 * modes);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; j += 2) {
    g(j, j + 1) = -1.0;
    g(j + 1, j) = 1.0;
  }
  return CovarianceMatrix(std::move(g));
}

Complex two_point(const CovarianceMatrix& state, int i, int j) {
  const int n = state.num_majoranas();
  if (i < 1 || j < 1 || i > n || j > n) {
    throw std::out_of_range("two_point index outside the register");
  }
  return Complex{i == j ? 1.0 : 0.0, -state(i, j)};
}

double pfaffian_expansion(const Eigen::MatrixXd& a) {
  require_antisymmetric(a, kStructuralTol);
  const int d = static_cast<int>(a.rows());
  if (d > 16) throw DimensionError("expansion Pfaffian limited to dimension 16");
  std::array<int, 16> idx{};
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (d <= 4) return pf_indexed(a, idx.data(), d);
  return pf_expand(a, idx.data(), d);
}

double pfaffian_elimination(Eigen::MatrixXd a) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0) {
    throw DimensionError("Pfaffian needs an even square matrix");
  }
  const Eigen::Index n = a.rows();
  double result = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index pivot = k + 1;
    for (Eigen::Index i = k + 2; i < n; ++i) {
      if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
    }
    if (pivot != k + 1) {
      a.row(k + 1).swap(a.row(pivot));
      a.col(k + 1).swap(a.col(pivot));
      result = -result;
    }
    const double head = a(k, k + 1);
    if (head == 0.0) return 0.0;
    result *= head;
    if (k + 2 < n) {
      const Eigen::Index m = n - k - 2;
      const Eigen::VectorXd tau = a.row(k).tail(m).transpose() / head;
      const Eigen::VectorXd col = a.col(k + 1).tail(m);
      a.bottomRightCorner(m, m) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return result;
}

double pfaffian(const Eigen::MatrixXd& a) {
  require_antisymmetric(a, kStructuralTol);
  if (a.rows() <= 8) return pfaffian_expansion(a);
  return pfaffian_elimination(a);
}

Complex expectation(const CovarianceMatrix& state, const MajoranaPolynomial& op) {
  if (op.num_majoranas() != state.num_majoranas()) {
    throw DimensionError("operator register " + std::to_string(op.num_majoranas()) +
                         " does not match state register " +
                         std::to_string(state.num_majoranas()));
  }
  const auto& g = state.matrix();
  Complex total{};
  std::vector<int> idx;
  for (const auto& [labels, coeff] : op.terms()) {
    if (labels.size() % 2 == 1) continue;
    idx.resize(labels.size());
    for (std::size_t s = 0; s < labels.size(); ++s) idx[s] = labels[s] - 1;
    const double pf = pf_indexed(g, idx.data(), static_cast<int>(idx.size()));
    total += coeff * minus_i_power(labels.size() / 2) * pf;
  }
  return total;
}

GaussianMixture::GaussianMixture(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("empty Gaussian mixture");
  double sum = 0.0;
  for (const auto& [p, state] : components_) {
    if (p < 0.0) throw std::invalid_argument("negative mixture weight");
    if (state.num_majoranas() != components_.front().second.num_majoranas()) {
      throw DimensionError("mixture components differ in register size");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("mixture weights sum to " + std::to_string(sum));
  }
}

GaussianMixture GaussianMixture::pure(CovarianceMatrix state) {
  return GaussianMixture({{1.0, std::move(state)}});
}

Complex mixture_expectation(const GaussianMixture& mix,
                            const MajoranaPolynomial& op) {
  Complex total{};
  for (const auto& [p, state] : mix.components()) total += p * expectation(state, op);
  return total;
}

double energy(const GaussianMixture& mix, std::span<const MajoranaPolynomial> terms,
              double normalization) {
  double total = 0.0;
  for (const auto& t : terms) total += mixture_expectation(mix, t).real();
  return normalization * total;
}

CovarianceMatrix reduce(const CovarianceMatrix& state, std::span<const int> keep) {
  std::vector<int> labels(keep.begin(), keep.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty()) throw std::invalid_argument("reduce needs a nonempty keep set");
  if (labels.front() < 1 || labels.back() > state.num_majoranas()) {
    throw std::out_of_range("keep label outside the register");
  }
  const auto d = static_cast<Eigen::Index>(labels.size());
  Eigen::MatrixXd sub(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      sub(r, c) = state(labels[static_cast<std::size_t>(r)],
                        labels[static_cast<std::size_t>(c)]);
    }
  }
  return CovarianceMatrix(std::move(sub));
}

MajoranaPolynomial restrict_to(const MajoranaPolynomial& op, std::span<const int> keep) {
  std::vector<int> labels(keep.begin(), keep.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  MajoranaPolynomial out(static_cast<int>(labels.size()));
  for (const auto& [idx, c] : op.terms()) {
    MajoranaIndices mapped;
    for (int i : idx) {
      auto it = std::lower_bound(labels.begin(), labels.end(), i);
      if (it == labels.end() || *it != i) {
        throw std::invalid_argument("operator touches c_" + std::to_string(i) +
                                    " outside the kept set");
      }
      mapped.push_back(static_cast<int>(it - labels.begin()) + 1);
    }
    out.add_term(mapped, c);
  }
  return out;
}

CovarianceMatrix random_pure_gaussian(std::size_t modes, std::uint64_t seed) {
  if (modes == 0) throw std::invalid_argument("need at least one mode");
  const auto n = static_cast<Eigen::Index>(2 * modes);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) m(r, c) = normal(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (r(i, i) < 0.0) q.col(i) = -q.col(i);
  }
  if (q.determinant() < 0.0) q.col(0) = -q.col(0);
  Eigen::MatrixXd g = q * vacuum_covariance(modes).matrix() * q.transpose();
  return CovarianceMatrix(std::move(g), 1e-12);
}

CompiledObservable::CompiledObservable(const MajoranaPolynomial& op)
    : num_majoranas_(op.num_majoranas()),
      touching_(static_cast<std::size_t>(op.num_majoranas())) {
  for (const auto& [labels, coeff] : op.terms()) {
    if (labels.size() % 2 == 1) continue;
    const double w = (coeff * minus_i_power(labels.size() / 2)).real();
    if (labels.empty()) {
      constant_ += w;
      continue;
    }
    if (w == 0.0) continue;
    Term t;
    for (int l : labels) t.indices.push_back(l - 1);
    t.weight = w;
    for (int i : t.indices) touching_[static_cast<std::size_t>(i)].push_back(terms_.size());
    terms_.push_back(std::move(t));
  }
}

double CompiledObservable::term_value(const Term& t, const Eigen::MatrixXd& gamma) const {
  return t.weight *
         pf_indexed(gamma, t.indices.data(), static_cast<int>(t.indices.size()));
}

double CompiledObservable::value(const Eigen::MatrixXd& gamma) const {
  double total = constant_;
  for (const auto& t : terms_) total += term_value(t, gamma);
  return total;
}

double CompiledObservable::value_touching(const Eigen::MatrixXd& gamma, int a,
                                          int b) const {
  double total = 0.0;
  for (std::size_t id : touching_[static_cast<std::size_t>(a)]) {
    total += term_value(terms_[id], gamma);
  }
  for (std::size_t id : touching_[static_cast<std::size_t>(b)]) {
    const auto& idx = terms_[id].indices;
    if (std::find(idx.begin(), idx.end(), a) != idx.end()) continue;
    total += term_value(terms_[id], gamma);
  }
  return total;
}

}  // namespace nlgs
