#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "nlgs/majorana.hpp"
#include "support/dense_reference.hpp"

namespace {

using nlgs::Complex;
using nlgs::MajoranaPolynomial;
using nlgs::PauliString;

const Complex kI{0.0, 1.0};

MajoranaPolynomial mono(int reg, std::initializer_list<int> idx, Complex c = 1.0) {
  return MajoranaPolynomial::monomial(reg, idx, c);
}

TEST(NormalOrder, Examples) {
  const std::vector<int> a{3, 1};
  auto m = nlgs::normal_order(a);
  EXPECT_EQ(m.indices, (std::vector<int>{1, 3}));
  EXPECT_EQ(m.coeff, Complex(-1.0));

  const std::vector<int> b{1, 1};
  m = nlgs::normal_order(b);
  EXPECT_TRUE(m.indices.empty());
  EXPECT_EQ(m.coeff, Complex(1.0));

  const std::vector<int> c{2, 4, 2};
  m = nlgs::normal_order(c);
  EXPECT_EQ(m.indices, (std::vector<int>{4}));
  EXPECT_EQ(m.coeff, Complex(-1.0));
  // c2 c4 c2 as matrices on two modes.
  const ref::Mat lhs = ref::majorana(2, 2) * ref::majorana(4, 2) * ref::majorana(2, 2);
  EXPECT_EQ(ref::max_diff(lhs, -ref::majorana(4, 2)), 0.0);
}

TEST(NormalOrder, RejectsNonPositiveLabels) {
  const std::vector<int> bad{0, 2};
  EXPECT_THROW(nlgs::normal_order(bad), std::invalid_argument);
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(mono(2, {1}) * mono(2, {1}), MajoranaPolynomial::identity(2));
  EXPECT_EQ(mono(2, {1, 2}) * mono(2, {1}), mono(2, {2}, -1.0));
  EXPECT_EQ(mono(6, {1, 2, 3, 4}) * mono(6, {1, 5}), mono(6, {2, 3, 4, 5}, -1.0));
}

TEST(PolyMul, RegisterMismatchThrows) {
  EXPECT_THROW(mono(2, {1}) * mono(4, {1}), nlgs::DimensionError);
  EXPECT_THROW(mono(2, {3}), nlgs::DimensionError);
}

TEST(PolyMul, MatchesDenseProducts) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> label(1, 8);
  auto random_poly = [&]() {
    MajoranaPolynomial p(8);
    for (int t = 0; t < 4; ++t) {
      std::vector<int> raw(static_cast<std::size_t>(label(rng) % 4));
      for (auto& r : raw) r = label(rng);
      p += MajoranaPolynomial::monomial(8, raw, Complex(normal(rng), normal(rng)));
    }
    return p;
  };
  for (int t = 0; t < 50; ++t) {
    const auto a = random_poly();
    const auto b = random_poly();
    EXPECT_LT(ref::max_diff(ref::polynomial(a * b, 4),
                            ref::polynomial(a, 4) * ref::polynomial(b, 4)),
              1e-12);
  }
}

TEST(MonomialCommutation, Examples) {
  using nlgs::Commutation;
  EXPECT_EQ(nlgs::monomial_commutation({1, 3, 10, 11}, {1, 9}), Commutation::anticommute);
  EXPECT_EQ(nlgs::monomial_commutation({1, 2}, {3, 4}), Commutation::commute);
  EXPECT_EQ(nlgs::monomial_commutation({1, 3, 7, 8}, {3, 5, 7, 9}), Commutation::commute);
  EXPECT_EQ(nlgs::monomial_commutation({1, 3, 9, 10}, {3, 5, 11, 12}),
            Commutation::anticommute);
  // Consecutive rotation generators sharing one label, checked densely.
  const auto a = ref::polynomial(mono(12, {1, 3, 9, 10}), 6);
  const auto b = ref::polynomial(mono(12, {3, 5, 11, 12}), 6);
  EXPECT_EQ(ref::max_diff(a * b, -(b * a)), 0.0);
}

TEST(MonomialCommutation, AgreesWithProductSigns) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> deg(0, 7);
  for (int t = 0; t < 1000; ++t) {
    auto pick = [&]() {
      std::vector<int> all(12);
      for (int i = 0; i < 12; ++i) all[static_cast<std::size_t>(i)] = i + 1;
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<int> idx(all.begin(), all.begin() + deg(rng));
      std::sort(idx.begin(), idx.end());
      return idx;
    };
    const auto a = pick();
    const auto b = pick();
    const auto ab = mono(12, {}) * MajoranaPolynomial::monomial(12, a) *
                    MajoranaPolynomial::monomial(12, b);
    const auto ba = MajoranaPolynomial::monomial(12, b) * MajoranaPolynomial::monomial(12, a);
    const bool commute = ab == ba;
    EXPECT_EQ(commute, nlgs::monomial_commutation(a, b) == nlgs::Commutation::commute);
  }
}

TEST(JordanWigner, Examples) {
  EXPECT_EQ(nlgs::jordan_wigner(PauliString::from_label("XI")), mono(4, {1}));
  EXPECT_EQ(nlgs::jordan_wigner(PauliString::from_label("Z")), mono(2, {1, 2}, -kI));
  EXPECT_EQ(nlgs::jordan_wigner(PauliString::from_label("ZX")), mono(4, {3}));
  EXPECT_EQ(nlgs::jordan_wigner(PauliString::from_label("IX")), mono(4, {1, 2, 3}, -kI));
  EXPECT_EQ(ref::max_diff(ref::polynomial(mono(4, {1, 2, 3}, -kI), 2), ref::letters("IX")),
            0.0);
}

TEST(JordanWigner, HomomorphismOnAllPairsUpToFourQubits) {
  const char letters[] = "IXYZ";
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t count = std::size_t{1} << (2 * n);
    std::vector<PauliString> ps;
    std::vector<MajoranaPolynomial> images;
    for (std::size_t code = 0; code < count; ++code) {
      std::string s;
      for (std::size_t q = 0; q < n; ++q) s += letters[(code >> (2 * q)) & 3u];
      ps.push_back(PauliString::from_label(s));
      images.push_back(nlgs::jordan_wigner(ps.back()));
    }
    double err = 0.0;
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        err = std::max(err, nlgs::max_abs_difference(nlgs::jordan_wigner(ps[a] * ps[b]),
                                                     images[a] * images[b]));
      }
    }
    EXPECT_LT(err, 1e-12) << "n = " << n;
  }
}

TEST(JordanWigner, DenseFormsMatchPauliMatrices) {
  for (const char* s : {"XYZ", "ZZI", "IYX", "YYY"}) {
    const auto p = PauliString::from_label(s);
    EXPECT_LT(ref::max_diff(ref::polynomial(nlgs::jordan_wigner(p), 3), ref::pauli(p)),
              1e-15);
  }
}

TEST(JordanWigner, InverseRoundTripAndRejections) {
  for (const char* s : {"XYZ", "-iZZI", "iIYX", "-YYY"}) {
    const auto p = PauliString::from_label(s);
    EXPECT_EQ(nlgs::jw_inverse(nlgs::jordan_wigner(p)), p);
  }
  EXPECT_THROW(nlgs::jw_inverse(mono(4, {1}) + mono(4, {2})), std::invalid_argument);
  EXPECT_THROW(nlgs::jw_inverse(mono(4, {1}, 2.0)), std::invalid_argument);
}

TEST(Assimilate, Examples) {
  EXPECT_EQ(nlgs::assimilate(PauliString::from_label("XI"), 2), mono(6, {1, 5}, kI));
  EXPECT_EQ(nlgs::assimilate(PauliString::from_label("IZ"), 2), mono(6, {3, 4}, -kI));
  EXPECT_EQ(nlgs::assimilate(PauliString::from_label("YI"), 2), mono(6, {2, 5}, kI));
}

TEST(Assimilate, SupportOutsideRangeThrows) {
  EXPECT_THROW(nlgs::assimilate(PauliString::from_label("IIX"), 2), nlgs::DimensionError);
}

TEST(Assimilate, SingleQubitImagesObeyPauliAlgebra) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<PauliString> ops;
    for (std::size_t j = 0; j < n; ++j) {
      for (char l : {'X', 'Y', 'Z'}) {
        std::string s(n, 'I');
        s[j] = l;
        ops.push_back(PauliString::from_label(s));
      }
    }
    for (const auto& a : ops) {
      const auto ia = nlgs::assimilate(a, n);
      EXPECT_EQ(ia.max_degree(), 2u);
      EXPECT_EQ(ia * ia, MajoranaPolynomial::identity(static_cast<int>(3 * n)));
      for (const auto& b : ops) {
        const auto ib = nlgs::assimilate(b, n);
        EXPECT_LT(nlgs::max_abs_difference(ia * ib, nlgs::assimilate(a * b, n)), 1e-12);
        const bool anti = !nlgs::pauli_commutes(a, b);
        EXPECT_EQ(ia * ib == Complex(-1.0) * (ib * ia), anti);
      }
    }
  }
}

TEST(Assimilate, DenseImagesObeyPauliAlgebraUpToFourQubits) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t q = (3 * n + 1) / 2;  // odd registers pad one mode
    std::vector<PauliString> ops;
    for (std::size_t j = 0; j < n; ++j) {
      for (char l : {'X', 'Y', 'Z'}) {
        std::string s(n, 'I');
        s[j] = l;
        ops.push_back(PauliString::from_label(s));
      }
    }
    for (const auto& a : ops) {
      const auto ma = ref::polynomial(nlgs::assimilate(a, n), q);
      EXPECT_LT(ref::max_diff(ma * ma, ref::identity(q)), 1e-12);
      for (const auto& b : ops) {
        const auto mb = ref::polynomial(nlgs::assimilate(b, n), q);
        const auto mab = ref::polynomial(nlgs::assimilate(a * b, n), q);
        EXPECT_LT(ref::max_diff(ma * mb, mab), 1e-12);
      }
    }
  }
}

TEST(Hermiticity, Examples) {
  EXPECT_TRUE(nlgs::hermitian_check(mono(2, {1, 2}, kI)));
  EXPECT_EQ(nlgs::parity_check(mono(2, {1, 2}, kI)), nlgs::Parity::even);
  EXPECT_TRUE(nlgs::hermitian_check(mono(2, {1})));
  EXPECT_EQ(nlgs::parity_check(mono(2, {1})), nlgs::Parity::odd);
  const auto four = mono(4, {1, 2, 3, 4});
  EXPECT_TRUE(nlgs::hermitian_check(four));
  const auto m = ref::polynomial(four, 2);
  EXPECT_EQ(ref::max_diff(m, m.adjoint()), 0.0);
  EXPECT_FALSE(nlgs::hermitian_check(mono(2, {1, 2})));
  EXPECT_EQ(nlgs::parity_check(mono(4, {1}) + mono(4, {1, 2})), nlgs::Parity::mixed);
}

TEST(DenseMajoranas, AnticommuteOnTwelveMajoranas) {
  for (int i = 1; i <= 12; ++i) {
    for (int j = 1; j <= 12; ++j) {
      const auto a = ref::majorana(i, 6), b = ref::majorana(j, 6);
      const ref::Mat expected = i == j ? ref::Mat(2.0 * ref::identity(6))
                                       : ref::Mat::Zero(64, 64);
      EXPECT_EQ(ref::max_diff(a * b + b * a, expected), 0.0);
    }
  }
}

}  // namespace
