#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "nlgs/gaussian.hpp"
#include "nlgs/rotation.hpp"
#include "support/dense_reference.hpp"

namespace {

using nlgs::Complex;
using nlgs::CovarianceMatrix;
using nlgs::MajoranaPolynomial;

const Complex kI{0.0, 1.0};

MajoranaPolynomial mono(int reg, std::initializer_list<int> idx, Complex c = 1.0) {
  return MajoranaPolynomial::monomial(reg, idx, c);
}

Eigen::MatrixXd random_antisymmetric(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      a(i, j) = normal(rng);
      a(j, i) = -a(i, j);
    }
  }
  return a;
}

MajoranaPolynomial random_even_hermitian(int reg, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> half(0, std::min(8, reg) / 2);
  MajoranaPolynomial p(reg);
  for (int t = 0; t < 6; ++t) {
    const int d = 2 * half(rng);
    std::vector<int> all(static_cast<std::size_t>(reg));
    for (int i = 0; i < reg; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> idx(all.begin(), all.begin() + d);
    std::sort(idx.begin(), idx.end());
    const double r = normal(rng);
    p.add_term(idx, (d * (d - 1) / 2) % 2 ? Complex(0.0, r) : Complex(r, 0.0));
  }
  return p;
}

Complex dense_expectation(const CovarianceMatrix& g, const MajoranaPolynomial& op) {
  const auto v = ref::gaussian_vector(g.matrix());
  return v.dot(ref::polynomial(op, g.modes()) * v);
}

TEST(Vacuum, SingleModeBlock) {
  const auto v = nlgs::vacuum_covariance(1);
  Eigen::Matrix2d expected;
  expected << 0, -1, 1, 0;
  EXPECT_EQ(v.matrix(), Eigen::MatrixXd(expected));
  // <0| c1 c2 |0> = <0| iZ |0> = i, so Gamma_12 = -1.
  const ref::Mat c1c2 = ref::majorana(1, 1) * ref::majorana(2, 1);
  EXPECT_EQ(c1c2(0, 0), kI);
}

TEST(Vacuum, PureAndBlockDiagonal) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto v = nlgs::vacuum_covariance(m);
    const auto n = static_cast<Eigen::Index>(2 * m);
    EXPECT_EQ(v.matrix() * v.matrix(), -Eigen::MatrixXd::Identity(n, n));
  }
  EXPECT_EQ(nlgs::vacuum_covariance(2)(1, 3), 0.0);
}

TEST(TwoPoint, Examples) {
  const auto v = nlgs::vacuum_covariance(2);
  EXPECT_EQ(nlgs::two_point(v, 2, 2), Complex(1.0));
  EXPECT_EQ(nlgs::two_point(v, 1, 2), kI);
  EXPECT_EQ(nlgs::two_point(v, 1, 3), Complex(0.0));
  EXPECT_THROW(nlgs::two_point(v, 0, 1), std::out_of_range);
  EXPECT_THROW(nlgs::two_point(v, 1, 5), std::out_of_range);
}

TEST(CovarianceMatrix, RejectsInvalidInput) {
  Eigen::MatrixXd a(2, 2);
  a << 0, 1, 0.5, 0;
  EXPECT_THROW(CovarianceMatrix{a}, std::invalid_argument);
  a << 0, 2, -2, 0;
  EXPECT_THROW(CovarianceMatrix{a}, std::invalid_argument);
}

TEST(Pfaffian, SmallDefinitions) {
  Eigen::MatrixXd a(2, 2);
  a << 0, 1.7, -1.7, 0;
  EXPECT_DOUBLE_EQ(nlgs::pfaffian(a), 1.7);
  std::mt19937_64 rng(2);
  const auto b = random_antisymmetric(4, rng);
  EXPECT_NEAR(nlgs::pfaffian(b), b(0, 1) * b(2, 3) - b(0, 2) * b(1, 3) + b(0, 3) * b(1, 2),
              1e-15);
}

TEST(Pfaffian, SquareEqualsDeterminant) {
  std::mt19937_64 rng(4);
  for (int d : {6, 8, 10, 12}) {
    for (int t = 0; t < 20; ++t) {
      const auto a = random_antisymmetric(d, rng);
      const double pf = nlgs::pfaffian(a);
      const double det = a.determinant();
      EXPECT_LE(std::abs(pf * pf - det), 1e-8 * std::max(1.0, std::abs(det)));
    }
  }
}

TEST(Pfaffian, ExpansionAgreesWithElimination) {
  std::mt19937_64 rng(6);
  for (int d : {2, 4, 6, 8}) {
    const auto a = random_antisymmetric(d, rng);
    EXPECT_NEAR(nlgs::pfaffian_expansion(a), nlgs::pfaffian_elimination(a), 1e-11);
  }
}

TEST(Pfaffian, RejectsBadShapes) {
  EXPECT_THROW(nlgs::pfaffian(Eigen::MatrixXd::Zero(3, 3)), std::invalid_argument);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
  a(0, 1) = 1.0;
  EXPECT_THROW(nlgs::pfaffian(a), std::invalid_argument);
}

TEST(Expectation, Examples) {
  const auto v = nlgs::vacuum_covariance(2);
  EXPECT_NEAR(std::abs(nlgs::expectation(v, mono(4, {1, 2, 3, 4})) - Complex(-1.0)), 0.0,
              1e-15);
  const auto r = nlgs::random_pure_gaussian(2, 9);
  EXPECT_EQ(nlgs::expectation(r, mono(4, {1})), Complex(0.0));
  EXPECT_EQ(nlgs::expectation(r, MajoranaPolynomial::identity(4)), Complex(1.0));
  EXPECT_THROW(nlgs::expectation(r, mono(6, {1, 2})), nlgs::DimensionError);
}

TEST(Expectation, WickMatchesDenseStatesOnUpToFiveModes) {
  std::mt19937_64 rng(21);
  double worst = 0.0;
  for (int s = 0; s < 200; ++s) {
    const std::size_t m = 1 + static_cast<std::size_t>(s % 5);
    const auto g = nlgs::random_pure_gaussian(m, 500 + static_cast<std::uint64_t>(s));
    const auto op = random_even_hermitian(static_cast<int>(2 * m), rng);
    const Complex wick = nlgs::expectation(g, op);
    worst = std::max(worst, std::abs(wick - dense_expectation(g, op)));
    EXPECT_LT(std::abs(wick.imag()), 1e-10);
  }
  EXPECT_LE(worst, 1e-9);
}

TEST(Expectation, DegreeFourIsThreeTermWick) {
  const auto g = nlgs::random_pure_gaussian(3, 12);
  const int a = 1, b = 3, c = 4, d = 6;
  auto tp = [&](int i, int j) { return nlgs::two_point(g, i, j); };
  const Complex wick = tp(a, b) * tp(c, d) - tp(a, c) * tp(b, d) + tp(a, d) * tp(b, c);
  EXPECT_EQ(nlgs::expectation(g, mono(6, {a, b, c, d})), wick);
}

TEST(Expectation, LinearInOperator) {
  std::mt19937_64 rng(8);
  const auto g = nlgs::random_pure_gaussian(4, 3);
  const auto p = random_even_hermitian(8, rng);
  const auto q = random_even_hermitian(8, rng);
  const Complex s{0.3, -1.2};
  const Complex lhs = nlgs::expectation(g, p + s * q);
  const Complex rhs = nlgs::expectation(g, p) + s * nlgs::expectation(g, q);
  EXPECT_LT(std::abs(lhs - rhs), 1e-12);
}

TEST(Mixture, Examples) {
  const auto g = nlgs::random_pure_gaussian(2, 4);
  const auto op = mono(4, {1, 2}, kI);
  EXPECT_EQ(nlgs::mixture_expectation(nlgs::GaussianMixture::pure(g), op),
            nlgs::expectation(g, op));
  const nlgs::GaussianMixture half({{0.5, g}, {0.5, CovarianceMatrix(-g.matrix())}});
  EXPECT_NEAR(std::abs(nlgs::mixture_expectation(half, op)), 0.0, 1e-15);
  EXPECT_THROW(nlgs::GaussianMixture({{0.5, g}, {0.6, g}}), std::invalid_argument);
  EXPECT_THROW(nlgs::GaussianMixture({{-0.5, g}, {1.5, g}}), std::invalid_argument);
}

TEST(Mixture, AffineInWeights) {
  const auto a = nlgs::random_pure_gaussian(2, 1);
  const auto b = nlgs::random_pure_gaussian(2, 2);
  const auto op = mono(4, {1, 2, 3, 4}) + mono(4, {2, 3}, kI);
  const double p = 0.3;
  const nlgs::GaussianMixture mix({{p, a}, {1 - p, b}});
  const Complex expected = p * nlgs::expectation(a, op) + (1 - p) * nlgs::expectation(b, op);
  EXPECT_LT(std::abs(nlgs::mixture_expectation(mix, op) - expected), 1e-15);
}

TEST(Mixture, VacuumEnergyMatchesDense) {
  const auto h = nlgs::fermionic_hamiltonian(
      nlgs::build_css_hamiltonian({2, {{1, 1}}, {{1, 1}}}), nlgs::Mapping::jordan_wigner);
  std::vector<MajoranaPolynomial> terms;
  for (const auto& t : h.terms) terms.push_back(t.projector());
  const auto vac = nlgs::GaussianMixture::pure(nlgs::vacuum_covariance(2));
  const double e = nlgs::energy(vac, terms, h.normalization);
  const ref::Mat dense = ref::polynomial(h.total(), 2);
  EXPECT_NEAR(e, dense(0, 0).real(), 1e-12);
  EXPECT_NEAR(e, 0.25, 1e-12);  // ZZ satisfied, XX half violated
}

TEST(Reduce, Examples) {
  const auto g = nlgs::random_pure_gaussian(3, 5);
  const std::vector<int> all{1, 2, 3, 4, 5, 6};
  EXPECT_EQ(nlgs::reduce(g, all).matrix(), g.matrix());
  const auto vac = nlgs::vacuum_covariance(3);
  const std::vector<int> mode2{3, 4};
  const auto r = nlgs::reduce(vac, mode2);
  EXPECT_EQ(r.matrix(), nlgs::vacuum_covariance(1).matrix());
  EXPECT_TRUE(r.is_pure());
  EXPECT_THROW(nlgs::reduce(g, std::vector<int>{}), std::invalid_argument);
}

TEST(Reduce, HalfOfEntangledStateIsMixed) {
  int mixed = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = nlgs::random_pure_gaussian(4, s);
    const std::vector<int> keep{1, 2, 3, 4};
    mixed += !nlgs::reduce(g, keep).is_pure(1e-6);
  }
  EXPECT_GE(mixed, 18);
}

TEST(Reduce, ExpectationInvariantOnSupport) {
  std::mt19937_64 rng(13);
  const auto g = nlgs::random_pure_gaussian(4, 77);
  const std::vector<int> keep{2, 3, 5, 8};  // splits modes on purpose
  const auto op = mono(8, {2, 3, 5, 8}) + mono(8, {3, 5}, kI) + mono(8, {2, 8}, 0.4 * kI);
  const auto reduced = nlgs::reduce(g, keep);
  EXPECT_LT(std::abs(nlgs::expectation(g, op) -
                     nlgs::expectation(reduced, nlgs::restrict_to(op, keep))),
            1e-14);
}

TEST(RandomPureGaussian, Properties) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto g = nlgs::random_pure_gaussian(1 + s % 6, s);
    const auto& m = g.matrix();
    EXPECT_EQ((m + m.transpose()).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_LE(m.cwiseAbs().maxCoeff(), 1.0 + 1e-12);
    EXPECT_LE(g.purity_defect(), 1e-10);
  }
  EXPECT_EQ(nlgs::random_pure_gaussian(5, 42).matrix(),
            nlgs::random_pure_gaussian(5, 42).matrix());
  EXPECT_NE(nlgs::random_pure_gaussian(5, 42).matrix(),
            nlgs::random_pure_gaussian(5, 43).matrix());
}

TEST(CompiledObservable, MatchesExpectationAndLocalDifferences) {
  std::mt19937_64 rng(31);
  const auto op = random_even_hermitian(8, rng) + MajoranaPolynomial::identity(8, 0.25);
  const nlgs::CompiledObservable obs(op);
  const auto g = nlgs::random_pure_gaussian(4, 8);
  EXPECT_NEAR(obs.value(g.matrix()), nlgs::expectation(g, op).real(), 1e-13);
  EXPECT_DOUBLE_EQ(obs.constant(), op.coeff({}).real());
  // Change only rows/columns 1 and 5 (0-based) by a plane rotation.
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(8, 8);
  r(1, 1) = r(5, 5) = std::cos(0.3);
  r(1, 5) = std::sin(0.3);
  r(5, 1) = -std::sin(0.3);
  const Eigen::MatrixXd g2 = r * g.matrix() * r.transpose();
  EXPECT_NEAR(obs.value(g2) - obs.value(g.matrix()),
              obs.value_touching(g2, 1, 5) - obs.value_touching(g.matrix(), 1, 5), 1e-13);
}

}  // namespace
