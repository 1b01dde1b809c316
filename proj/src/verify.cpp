#include "nlgs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "nlgs/dense_oracle.hpp"
#include "nlgs/gaussian.hpp"
#include "nlgs/majorana.hpp"

namespace nlgs {

namespace {

using oracle::densify_majorana;
using oracle::densify_pauli;

CheckResult check(const std::string& suite, const std::string& name, double tol,
                  double err) {
  return {suite, name, tol, err, err <= tol};
}

PauliString random_pauli(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> phase(0, 3);
  BitRow x(n);
  BitRow z(n);
  for (std::size_t q = 0; q < n; ++q) {
    x[q] = static_cast<std::uint8_t>(bit(rng));
    z[q] = static_cast<std::uint8_t>(bit(rng));
  }
  return PauliString(x, z, phase(rng));
}

PauliString pauli_from_index(std::size_t n, std::size_t code) {
  static const char kLetters[] = {'I', 'X', 'Y', 'Z'};
  std::string label;
  for (std::size_t q = 0; q < n; ++q) label += kLetters[(code >> (2 * (n - 1 - q))) & 3u];
  return PauliString::from_label(label);
}

PauliString single_site(std::size_t n, std::size_t site, char letter) {
  std::string label(n, 'I');
  label[site] = letter;
  return PauliString::from_label(label);
}

double matrix_error(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

MajoranaIndices random_index_set(int reg, int degree, std::mt19937_64& rng) {
  std::vector<int> all(static_cast<std::size_t>(reg));
  for (int i = 0; i < reg; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  MajoranaIndices idx(all.begin(), all.begin() + degree);
  std::sort(idx.begin(), idx.end());
  return idx;
}

// Hermitian monomials: real coefficient when the reversal sign is +1,
// imaginary when it is -1.
MajoranaPolynomial random_even_hermitian(int reg, int max_degree, int terms,
                                         std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const int top = std::min(max_degree, reg) / 2;
  std::uniform_int_distribution<int> half(0, top);
  MajoranaPolynomial p(reg);
  for (int t = 0; t < terms; ++t) {
    const int d = 2 * half(rng);
    const auto idx = random_index_set(reg, d, rng);
    const bool flips = (d * (d - 1) / 2) % 2 == 1;
    const double r = normal(rng);
    p.add_term(idx, flips ? Complex{0.0, r} : Complex{r, 0.0});
  }
  return p;
}

std::vector<double> sorted_spectrum(const Eigen::MatrixXcd& m) {
  return oracle::spectrum({0, m});
}

double spectrum_error(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
  return err;
}

CssCode make_code(std::size_t n, BitMatrix hx, BitMatrix hz) {
  return CssCode{n, std::move(hx), std::move(hz)};
}

}  // namespace

std::vector<ToyCode> toy_codes() {
  return {
      {"rep2", make_code(2, {{1, 1}}, {{1, 1}})},
      {"css4", make_code(4, {{1, 1, 1, 1}}, {{1, 1, 0, 0}, {0, 0, 1, 1}})},
      {"pair4", make_code(4, {{1, 1, 0, 0}}, {{1, 1, 0, 0}})},
  };
}

std::vector<RotationSetup> rotation_setups() {
  const auto codes = toy_codes();
  return {
      {"rep2/shared+2", codes[0].code, AncillaPolicy::shared, 2},
      {"rep2/fresh+4", codes[0].code, AncillaPolicy::fresh, 4},
      {"css4/shared+2", codes[1].code, AncillaPolicy::shared, 2},
      {"pair4/shared", codes[2].code, AncillaPolicy::shared, 0},
  };
}

std::vector<std::string> suite_names() {
  return {"algebra", "wick", "rotation", "spectrum"};
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "algebra") return run_algebra_suite(seed);
  if (name == "wick") return run_wick_suite(seed);
  if (name == "rotation") return run_rotation_suite(seed);
  if (name == "spectrum") return run_spectrum_suite(seed);
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<CheckResult> run_algebra_suite(std::uint64_t seed) {
  const std::string suite = "algebra";
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;

  // All ordered pairs of 2-qubit Pauli letters.
  double prod_err = 0.0;
  double comm_err = 0.0;
  for (std::size_t a = 0; a < 16; ++a) {
    for (std::size_t b = 0; b < 16; ++b) {
      const auto pa = pauli_from_index(2, a);
      const auto pb = pauli_from_index(2, b);
      const auto ma = densify_pauli(pa).matrix;
      const auto mb = densify_pauli(pb).matrix;
      prod_err = std::max(prod_err, matrix_error(densify_pauli(pa * pb).matrix, ma * mb));
      const bool dense_commute = (ma * mb - mb * ma).cwiseAbs().maxCoeff() == 0.0;
      if (dense_commute != pauli_commutes(pa, pb)) comm_err += 1.0;
    }
  }
  out.push_back(check(suite, "pauli_products_2q", 0.0, prod_err));
  out.push_back(check(suite, "pauli_commutation_2q", 0.0, comm_err));

  double anti_err = 0.0;
  for (std::size_t q = 1; q <= 6; ++q) {
    const int reg = static_cast<int>(2 * q);
    std::vector<Eigen::MatrixXcd> cs;
    for (int i = 1; i <= reg; ++i) cs.push_back(oracle::majorana_matrix(i, q));
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << q);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = 0; j < cs.size(); ++j) {
        const Eigen::MatrixXcd expected = i == j ? Eigen::MatrixXcd(2.0 * id)
                                                 : Eigen::MatrixXcd::Zero(dim, dim);
        anti_err = std::max(anti_err, matrix_error(cs[i] * cs[j] + cs[j] * cs[i], expected));
      }
    }
  }
  out.push_back(check(suite, "majorana_anticommutation", 0.0, anti_err));

  double jw_err = 0.0;
  std::uniform_int_distribution<int> qubits(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<std::size_t>(qubits(rng));
    const auto a = random_pauli(n, rng);
    const auto b = random_pauli(n, rng);
    jw_err = std::max(jw_err, max_abs_difference(jordan_wigner(a * b),
                                                 jordan_wigner(a) * jordan_wigner(b)));
    if (trial % 10 == 0) {
      jw_err = std::max(jw_err, matrix_error(densify_majorana(jordan_wigner(a)).matrix,
                                             densify_pauli(a).matrix));
    }
  }
  out.push_back(check(suite, "jw_homomorphism", 1e-12, jw_err));

  double rule_err = 0.0;
  std::uniform_int_distribution<int> deg(0, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const MajoranaMonomial a{random_index_set(12, deg(rng), rng)};
    const MajoranaMonomial b{random_index_set(12, deg(rng), rng)};
    const auto ab = monomial_mul(a, b);
    const auto ba = monomial_mul(b, a);
    const bool commute = std::abs(ab.coeff - ba.coeff) < 1e-15;
    const bool predicted =
        monomial_commutation(a.indices, b.indices) == Commutation::commute;
    if (commute != predicted) rule_err += 1.0;
  }
  out.push_back(check(suite, "monomial_commutation_rule", 0.0, rule_err));

  // Assimilation images multiply like the Paulis they came from.
  double assim_sym = 0.0;
  double assim_dense = 0.0;
  double degree_err = 0.0;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<PauliString> ops;
    for (std::size_t j = 0; j < n; ++j) {
      for (char l : {'X', 'Y', 'Z'}) ops.push_back(single_site(n, j, l));
    }
    std::vector<MajoranaPolynomial> images;
    for (const auto& p : ops) {
      images.push_back(assimilate(p, n));
      if (images.back().max_degree() != 2 || images.back().size() != 1) degree_err += 1.0;
    }
    std::vector<Eigen::MatrixXcd> dense;
    if (n <= 4) {
      for (const auto& im : images) dense.push_back(densify_majorana(im).matrix);
    }
    for (std::size_t a = 0; a < ops.size(); ++a) {
      for (std::size_t b = 0; b < ops.size(); ++b) {
        const auto target = assimilate(ops[a] * ops[b], n);
        assim_sym = std::max(assim_sym, max_abs_difference(images[a] * images[b], target));
        if (n <= 4) {
          assim_dense = std::max(
              assim_dense, matrix_error(dense[a] * dense[b], densify_majorana(target).matrix));
        }
      }
    }
  }
  out.push_back(check(suite, "assimilation_algebra_symbolic", 1e-12, assim_sym));
  out.push_back(check(suite, "assimilation_algebra_dense", 1e-12, assim_dense));
  out.push_back(check(suite, "assimilation_degree_two", 0.0, degree_err));
  return out;
}

std::vector<CheckResult> run_wick_suite(std::uint64_t seed) {
  const std::string suite = "wick";
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;

  double wick_err = 0.0;
  for (int s = 0; s < 200; ++s) {
    const std::size_t m = 1 + static_cast<std::size_t>(s % 5);
    const auto state = random_pure_gaussian(m, seed * 1000 + static_cast<std::uint64_t>(s));
    const auto op = random_even_hermitian(static_cast<int>(2 * m), 8, 6, rng);
    const auto v = oracle::gaussian_state_vector(state);
    const Complex dense = oracle::expect(v, densify_majorana(op));
    wick_err = std::max(wick_err, std::abs(expectation(state, op) - dense));
  }
  out.push_back(check(suite, "wick_vs_dense", 1e-9, wick_err));

  double pf_err = 0.0;
  double pf_cross = 0.0;
  std::normal_distribution<double> normal;
  for (int t = 0; t < 50; ++t) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(10, 10);
    for (int i = 0; i < 10; ++i) {
      for (int j = i + 1; j < 10; ++j) {
        a(i, j) = normal(rng);
        a(j, i) = -a(i, j);
      }
    }
    const double pf = pfaffian(a);
    const double det = a.determinant();
    pf_err = std::max(pf_err, std::abs(pf * pf - det) / std::max(1.0, std::abs(det)));
    const Eigen::MatrixXd b = a.topLeftCorner(8, 8);
    pf_cross = std::max(pf_cross, std::abs(pfaffian_expansion(b) - pfaffian_elimination(b)));
  }
  out.push_back(check(suite, "pfaffian_squared_det_10x10", 1e-8, pf_err));
  out.push_back(check(suite, "pfaffian_expansion_vs_elimination_8x8", 1e-10, pf_cross));

  double roundtrip = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto state = random_pure_gaussian(3, seed + s);
    const auto v = oracle::gaussian_state_vector(state);
    roundtrip = std::max(roundtrip,
                         (oracle::covariance_of(v, 6) - state.matrix()).cwiseAbs().maxCoeff());
  }
  out.push_back(check(suite, "state_vector_roundtrip", 1e-8, roundtrip));
  return out;
}

std::vector<CheckResult> run_rotation_suite(std::uint64_t seed) {
  const std::string suite = "rotation";
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 3.141592653589793);
  std::vector<CheckResult> out;

  double sym_vs_dense = 0.0;
  double spec_err = 0.0;
  double unitarity = 0.0;
  double roundtrip = 0.0;
  double theta_zero = 0.0;
  for (const auto& setup : rotation_setups()) {
    const auto hq = build_css_hamiltonian(setup.code);
    const auto h = fermionic_hamiltonian(hq, Mapping::assimilation, setup.extra_ancillas);
    const auto dense_h = densify_majorana(h.total()).matrix;
    const auto spec_h = sorted_spectrum(dense_h);

    const auto zero = rotate_hamiltonian(h, 0.0, setup.policy);
    for (std::size_t t = 0; t < h.terms.size(); ++t) {
      if (!(zero.terms[t].generator == h.terms[t].generator)) theta_zero += 1.0;
    }

    for (int s = 0; s < 20; ++s) {
      const double theta = angle(rng);
      const auto rot = rotate_hamiltonian(h, theta, setup.policy);
      const auto d = oracle::rotation_unitary(rot.generators, theta, h.num_majoranas).matrix;
      const auto dim = d.rows();
      unitarity = std::max(
          unitarity, matrix_error(d * d.adjoint(), Eigen::MatrixXcd::Identity(dim, dim)));
      const Eigen::MatrixXcd conj = d * dense_h * d.adjoint();
      const auto dense_rot = densify_majorana(rot.total()).matrix;
      sym_vs_dense = std::max(sym_vs_dense, matrix_error(dense_rot, conj));
      spec_err = std::max(spec_err, spectrum_error(sorted_spectrum(dense_rot), spec_h));

      for (const auto& term : h.terms) {
        for (const auto& g : rot.generators) {
          const auto there = conjugate_monomial(term.generator, g, theta);
          const auto back = conjugate_monomial(there, g, -theta);
          roundtrip = std::max(roundtrip, max_abs_difference(back, term.generator));
        }
      }
    }
  }
  out.push_back(check(suite, "symbolic_vs_dense_conjugation", 1e-10, sym_vs_dense));
  out.push_back(check(suite, "spectrum_preserved", 1e-10, spec_err));
  out.push_back(check(suite, "rotation_unitary", 1e-12, unitarity));
  out.push_back(check(suite, "conjugation_round_trip", 1e-12, roundtrip));
  out.push_back(check(suite, "theta_zero_identity", 0.0, theta_zero));
  return out;
}

std::vector<CheckResult> run_spectrum_suite(std::uint64_t seed) {
  const std::string suite = "spectrum";
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;

  auto codes = toy_codes();
  // Larger frustration-free checks up to n = 8.
  codes.push_back({"six_qubit",
                   make_code(6, {{1, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 1}},
                             {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}})});
  codes.push_back({"rep8x",
                   make_code(8, {{1, 1, 1, 1, 1, 1, 1, 1}},
                             {{1, 1, 0, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 0, 0},
                              {0, 0, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 0, 0},
                              {0, 0, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 1, 0},
                              {0, 0, 0, 0, 0, 0, 1, 1}})});

  double ground = 0.0;
  double jw_spec = 0.0;
  double assim_ground = 0.0;
  for (const auto& toy : codes) {
    const auto hq = build_css_hamiltonian(toy.code);
    const auto qspec = oracle::spectrum(oracle::densify_hamiltonian(hq));
    ground = std::max(ground, std::abs(qspec.front()));
    if (toy.code.n <= 6) {
      const auto hj = fermionic_hamiltonian(hq, Mapping::jordan_wigner);
      jw_spec = std::max(jw_spec, spectrum_error(oracle::spectrum(densify_majorana(hj.total())),
                                                 qspec));
    }
    if (toy.code.n <= 4) {
      const auto ha = fermionic_hamiltonian(hq, Mapping::assimilation);
      assim_ground = std::max(
          assim_ground, std::abs(oracle::ground_energy(densify_majorana(ha.total()))));
    }
  }
  out.push_back(check(suite, "frustration_free_ground_zero", 1e-10, ground));
  out.push_back(check(suite, "jw_spectrum_matches_qubit", 1e-10, jw_spec));
  out.push_back(check(suite, "assimilated_ground_zero", 1e-10, assim_ground));

  // Each rotated term stays a Hermitian idempotent.
  double projector_err = 0.0;
  std::uniform_real_distribution<double> angle(0.0, 3.141592653589793);
  for (const auto& setup : rotation_setups()) {
    const auto h = fermionic_hamiltonian(build_css_hamiltonian(setup.code),
                                         Mapping::assimilation, setup.extra_ancillas);
    const auto rot = rotate_hamiltonian(h, angle(rng), setup.policy);
    for (const auto& t : rot.terms) {
      const auto p = densify_majorana(t.projector()).matrix;
      projector_err = std::max({projector_err, matrix_error(p * p, p),
                                matrix_error(p, p.adjoint())});
    }
  }
  out.push_back(check(suite, "rotated_terms_are_projectors", 1e-10, projector_err));
  return out;
}

}  // namespace nlgs
