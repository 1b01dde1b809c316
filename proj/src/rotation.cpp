#include "nlgs/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nlgs {

namespace {

constexpr Complex kI{0.0, 1.0};
// Cancellation residue left after chained conjugations.
constexpr double kPruneTol = 1e-15;

MajoranaPolynomial term_monomial(int reg, std::initializer_list<int> raw,
                                 Complex coeff) {
  return MajoranaPolynomial::monomial(reg, raw, coeff);
}

std::set<int> frame_indices(std::size_t site, std::size_t n) {
  const int j = static_cast<int>(site);
  const int nn = static_cast<int>(n);
  return {2 * j - 1, 2 * j, 2 * j + 1, 2 * nn + j};
}

}  // namespace

MajoranaPolynomial ProjectorTerm::projector() const {
  auto p = MajoranaPolynomial::identity(generator.num_majoranas(), 0.5);
  p += Complex{-0.5, 0.0} * generator;
  return p;
}

std::size_t FermionicHamiltonian::k0() const noexcept {
  std::size_t k = 0;
  for (const auto& t : terms) k = std::max(k, t.k);
  return k;
}

MajoranaPolynomial FermionicHamiltonian::total() const {
  MajoranaPolynomial h(num_majoranas);
  for (const auto& t : terms) h += t.projector();
  h *= normalization;
  return h;
}

FermionicHamiltonian fermionic_hamiltonian(const QubitHamiltonian& hq,
                                           Mapping mapping,
                                           int extra_ancillas) {
  if (extra_ancillas < 0) throw std::invalid_argument("negative ancilla count");
  FermionicHamiltonian h;
  h.num_qubits = hq.n;
  h.mapping = mapping;
  h.normalization = hq.normalization;
  const int natural = static_cast<int>(
      mapping == Mapping::assimilation ? 3 * hq.n : 2 * hq.n);
  h.num_majoranas = natural + extra_ancillas;

  for (const auto& qt : hq.terms) {
    ProjectorTerm term;
    MajoranaPolynomial image = mapping == Mapping::assimilation
                                   ? assimilate(qt.generator, hq.n)
                                   : jordan_wigner(qt.generator);
    term.generator = image.widened(h.num_majoranas);
    term.support = term.generator.support();
    term.k = qt.k;
    term.kind = qt.generator.is_x_type()   ? TermKind::x_type
                : qt.generator.is_z_type() ? TermKind::z_type
                                           : TermKind::mixed;
    for (std::size_t q : qt.support) term.sites.push_back(q + 1);

    const auto square = poly_mul(term.generator, term.generator);
    if (max_abs_difference(square,
                           MajoranaPolynomial::identity(h.num_majoranas)) >
            1e-12 ||
        !hermitian_check(term.generator) ||
        parity_check(term.generator) != Parity::even) {
      throw std::logic_error("mapped generator is not an even Hermitian "
                             "involution: " + qt.generator.to_string());
    }
    h.terms.push_back(std::move(term));
  }
  return h;
}

std::vector<RotationGenerator> select_ancillas(const ProjectorTerm& term,
                                               std::size_t num_qubits,
                                               int num_majoranas,
                                               AncillaPolicy policy) {
  const int n = static_cast<int>(num_qubits);
  const std::set<int> support(term.support.begin(), term.support.end());

  std::vector<int> pool;
  for (int c = 2 * n + 1; c <= num_majoranas; ++c) {
    if (!support.contains(c)) pool.push_back(c);
  }

  for (std::size_t site : term.sites) {
    if (2 * static_cast<int>(site) + 1 > num_majoranas) {
      throw CapacityError("site " + std::to_string(site) +
                              " needs c_" + std::to_string(2 * site + 1) +
                              " outside the register",
                          2 * site + 1, static_cast<std::size_t>(num_majoranas));
    }
  }

  auto make = [&](std::size_t site, int k3, int k4) {
    const int j = static_cast<int>(site);
    RotationGenerator g;
    g.monomial = normal_order(std::vector<int>{2 * j - 1, 2 * j + 1, k3, k4});
    g.site = site;
    g.ancilla_pair = {k3, k4};
    return g;
  };

  std::vector<RotationGenerator> out;
  if (policy == AncillaPolicy::fresh) {
    std::set<int> used;
    for (std::size_t site : term.sites) {
      const auto frame = frame_indices(site, num_qubits);
      std::vector<int> picks;
      for (int c : pool) {
        if (frame.contains(c) || used.contains(c)) continue;
        picks.push_back(c);
        if (picks.size() == 2) break;
      }
      if (picks.size() < 2) {
        std::ostringstream msg;
        msg << "fresh-pair policy needs " << 2 * term.sites.size()
            << " free ancilla Majoranas, " << pool.size() << " available";
        throw CapacityError(msg.str(), 2 * term.sites.size(), pool.size());
      }
      used.insert(picks.begin(), picks.end());
      out.push_back(make(site, picks[0], picks[1]));
    }
  } else {
    std::set<int> excluded;
    for (std::size_t site : term.sites) {
      const auto frame = frame_indices(site, num_qubits);
      excluded.insert(frame.begin(), frame.end());
    }
    std::vector<int> picks;
    for (int c : pool) {
      if (excluded.contains(c)) continue;
      picks.push_back(c);
      if (picks.size() == 2) break;
    }
    if (picks.size() < 2) {
      std::ostringstream msg;
      msg << "shared-pair policy needs 2 free ancilla Majoranas, "
          << picks.size() << " available";
      throw CapacityError(msg.str(), 2, picks.size());
    }
    for (std::size_t site : term.sites) out.push_back(make(site, picks[0], picks[1]));
  }
  return out;
}

MajoranaPolynomial conjugate_monomial(const MajoranaPolynomial& a,
                                      const RotationGenerator& g,
                                      double theta) {
  const double c2 = std::cos(2.0 * theta);
  const double s2 = std::sin(2.0 * theta);
  MajoranaPolynomial out(a.num_majoranas());
  for (const auto& [idx, coeff] : a.terms()) {
    if (monomial_commutation(idx, g.monomial.indices) == Commutation::commute) {
      out.add_term(idx, coeff);
      continue;
    }
    out.add_term(idx, c2 * coeff);
    if (s2 != 0.0) {
      auto cp = monomial_mul(g.monomial, MajoranaMonomial{idx, coeff});
      out.add_term(cp.indices, kI * s2 * cp.coeff);
    }
  }
  return out;
}

MajoranaPolynomial conjugate_by_product(
    const MajoranaPolynomial& a, const std::vector<RotationGenerator>& gens,
    double theta) {
  MajoranaPolynomial out = a;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    out = conjugate_monomial(out, *it, theta).pruned(kPruneTol);
  }
  return out;
}

bool generators_mutually_commute(const std::vector<RotationGenerator>& gens) {
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (monomial_commutation(gens[a].monomial.indices,
                               gens[b].monomial.indices) ==
          Commutation::anticommute) {
        return false;
      }
    }
  }
  return true;
}

MajoranaPolynomial RotatedHamiltonian::total() const {
  MajoranaPolynomial h(num_majoranas);
  for (const auto& t : terms) h += t.projector();
  h *= normalization;
  return h;
}

RotatedHamiltonian rotate_hamiltonian(const FermionicHamiltonian& h,
                                      double theta, AncillaPolicy policy) {
  RotatedHamiltonian out;
  out.num_majoranas = h.num_majoranas;
  out.num_qubits = h.num_qubits;
  out.theta = theta;
  out.normalization = h.normalization;
  out.k0 = h.k0();
  out.policy = policy;

  for (const auto& term : h.terms) {
    auto gens = select_ancillas(term, h.num_qubits, h.num_majoranas, policy);
    for (const auto& g : gens) {
      if (std::find(out.generators.begin(), out.generators.end(), g) ==
          out.generators.end()) {
        out.generators.push_back(g);
      }
    }
    out.term_generators.push_back(std::move(gens));
  }
  out.generators_commute = generators_mutually_commute(out.generators);

  for (const auto& term : h.terms) {
    ProjectorTerm rotated = term;
    rotated.generator = conjugate_by_product(term.generator, out.generators, theta);
    rotated.support = rotated.generator.support();
    out.terms.push_back(std::move(rotated));
  }
  return out;
}

MajoranaPolynomial assimilated_css_generator(
    TermKind kind, const std::vector<std::size_t>& sites, std::size_t n,
    int num_majoranas) {
  if (kind == TermKind::mixed) {
    throw std::invalid_argument("closed forms exist for X- or Z-type terms only");
  }
  const int nn = static_cast<int>(n);
  auto acc = MajoranaPolynomial::identity(num_majoranas);
  for (std::size_t s : sites) {
    const int j = static_cast<int>(s);
    acc = poly_mul(acc, kind == TermKind::x_type
                            ? term_monomial(num_majoranas, {2 * j - 1, 2 * nn + j}, kI)
                            : term_monomial(num_majoranas, {2 * j, 2 * j - 1}, kI));
  }
  return acc;
}

ClosedFormComparison printed_closed_form(
    TermKind kind, const std::vector<std::size_t>& sites, std::size_t n,
    int num_majoranas, double theta,
    const std::vector<RotationGenerator>& generators,
    ClosedFormReading reading, double tol) {
  ClosedFormComparison cmp;
  const int nn = static_cast<int>(n);
  const double c2 = std::cos(2.0 * theta);
  const double s2 = std::sin(2.0 * theta);

  auto closed = MajoranaPolynomial::identity(num_majoranas);
  for (std::size_t s : sites) {
    auto g = std::find_if(generators.begin(), generators.end(),
                          [&](const RotationGenerator& r) { return r.site == s; });
    if (g == generators.end()) {
      throw std::invalid_argument("no rotation generator for site " +
                                  std::to_string(s));
    }
    const int j = static_cast<int>(s);
    const auto [k3, k4] = g->ancilla_pair;
    const int partner = reading == ClosedFormReading::corrected ? 2 * nn + j
                                                                : 2 * nn + 1;
    MajoranaPolynomial h(num_majoranas);
    h += term_monomial(num_majoranas, {2 * j - 1, partner}, kI * c2);
    if (kind == TermKind::x_type) {
      h += term_monomial(num_majoranas, {2 * j + 1, k3, k4, 2 * nn + j}, s2);
    } else {
      h += term_monomial(num_majoranas, {2 * j + 1, k3, k4, 2 * j}, -s2);
    }
    closed = poly_mul(closed, h);
    cmp.factors.push_back(std::move(h));
  }
  cmp.closed_form = closed;

  const auto unrotated = assimilated_css_generator(kind, sites, n, num_majoranas);
  cmp.engine = conjugate_by_product(unrotated, generators, theta);

  std::set<MajoranaIndices> keys;
  for (const auto& [idx, c] : cmp.engine.terms()) keys.insert(idx);
  for (const auto& [idx, c] : cmp.closed_form.terms()) keys.insert(idx);
  for (const auto& idx : keys) {
    const Complex e = cmp.engine.coeff(idx);
    const Complex p = cmp.closed_form.coeff(idx);
    if (std::abs(e - p) > tol) cmp.diff.push_back({idx, e, p});
  }
  return cmp;
}

}  // namespace nlgs
