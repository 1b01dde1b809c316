#pragma once

// Fermionic stabilizer Hamiltonians and their conjugation by the non-Gaussian
// rotation D = prod_j exp(i theta C_j), C_j = c_{2j-1} c_{2j+1} c_{k3} c_{k4}.
//
// Rotated terms are derived exactly from the commute/anticommute split of
// every monomial against every generator; the printed closed forms are only
// reproduced for comparison (see printed_closed_form).

#include <cstddef>
#include <utility>
#include <vector>

#include "nlgs/majorana.hpp"
#include "nlgs/pauli.hpp"

namespace nlgs {

enum class Mapping { jordan_wigner, assimilation };
enum class TermKind { x_type, z_type, mixed };

/// One local term (I - T)/2 with T^2 = 1, T Hermitian and even.
struct ProjectorTerm {
  MajoranaPolynomial generator;
  MajoranaIndices support;          // Majorana labels touched by T
  std::size_t k = 0;                // weight of the originating Pauli
  TermKind kind = TermKind::mixed;
  std::vector<std::size_t> sites;   // 1-based qubits of the originating Pauli

  MajoranaPolynomial projector() const;
};

struct FermionicHamiltonian {
  std::size_t num_qubits = 0;
  int num_majoranas = 0;
  Mapping mapping = Mapping::assimilation;
  double normalization = 1.0;
  std::vector<ProjectorTerm> terms;

  /// Assimilation is only defined for even n; odd n is accepted but flagged.
  bool odd_qubit_count() const noexcept { return num_qubits % 2 == 1; }
  std::size_t k0() const noexcept;

  /// normalization * sum_S (I - T_S)/2 as one polynomial.
  MajoranaPolynomial total() const;
};

/// Maps every generator of `hq`. `extra_ancillas` appends unused Majoranas
/// after the natural register (2n or 3n) to widen the ancilla pool.
FermionicHamiltonian fermionic_hamiltonian(const QubitHamiltonian& hq,
                                           Mapping mapping,
                                           int extra_ancillas = 0);

enum class AncillaPolicy { fresh, shared };

struct RotationGenerator {
  MajoranaMonomial monomial;  // c_{2j-1} c_{2j+1} c_{k3} c_{k4}, coeff 1
  std::size_t site = 0;       // j, 1-based
  std::pair<int, int> ancilla_pair{0, 0};

  friend bool operator==(const RotationGenerator& a,
                         const RotationGenerator& b) {
    return a.monomial.indices == b.monomial.indices;
  }
};

/// Picks (k3, k4) per site from the ancilla pool [2n+1, num_majoranas]:
/// never in the term's support, never in {2j-1, 2j, 2j+1, 2n+j}. The fresh
/// policy takes the two smallest unused labels for each site in turn; the
/// shared policy uses one pair for every site. Throws CapacityError when the
/// pool is too small.
std::vector<RotationGenerator> select_ancillas(const ProjectorTerm& term,
                                               std::size_t num_qubits,
                                               int num_majoranas,
                                               AncillaPolicy policy);

/// exp(i theta C) A exp(-i theta C) for C^2 = 1: parts of A commuting with C
/// are unchanged, anticommuting parts P become cos(2 theta) P + i sin(2 theta) C P.
MajoranaPolynomial conjugate_monomial(const MajoranaPolynomial& a,
                                      const RotationGenerator& g, double theta);

/// D A D^dagger for D = exp(i theta C_1) ... exp(i theta C_m).
MajoranaPolynomial conjugate_by_product(
    const MajoranaPolynomial& a, const std::vector<RotationGenerator>& gens,
    double theta);

bool generators_mutually_commute(const std::vector<RotationGenerator>& gens);

struct RotatedHamiltonian {
  int num_majoranas = 0;
  std::size_t num_qubits = 0;
  double theta = 0.0;
  double normalization = 1.0;
  std::vector<ProjectorTerm> terms;  // generators replaced by D T D^dagger
  std::size_t k0 = 0;
  AncillaPolicy policy = AncillaPolicy::fresh;
  bool generators_commute = true;
  /// Global ordered generator list defining D (union over terms, deduplicated).
  std::vector<RotationGenerator> generators;
  /// Generators selected for each term, before deduplication.
  std::vector<std::vector<RotationGenerator>> term_generators;

  MajoranaPolynomial total() const;
};

/// One D for the whole Hamiltonian: the per-term selections are merged in
/// term order, so every term is conjugated by the same unitary.
RotatedHamiltonian rotate_hamiltonian(const FermionicHamiltonian& h,
                                      double theta,
                                      AncillaPolicy policy = AncillaPolicy::fresh);

/// How to read the printed h^j factors. `corrected` substitutes c_{2n+j} for
/// the printed c_{2n+1}; `literal` keeps the print.
enum class ClosedFormReading { corrected, literal };

struct ClosedFormDiffEntry {
  MajoranaIndices indices;
  Complex engine;
  Complex closed_form;
};

struct ClosedFormComparison {
  MajoranaPolynomial closed_form;   // ordered product of h^j
  MajoranaPolynomial engine;        // exact conjugation by the given generators
  std::vector<MajoranaPolynomial> factors;  // h^j, ascending site
  std::vector<ClosedFormDiffEntry> diff;

  bool matches() const noexcept { return diff.empty(); }
};

/// Printed factors
///   h_X^j = cos2t i c_{2j-1} c_{2n+1} + sin2t c_{2j+1} c_{k3} c_{k4} c_{2n+j}
///   h_Z^j = cos2t i c_{2j-1} c_{2n+1} - sin2t c_{2j+1} c_{k3} c_{k4} c_{2j}
/// compared against conjugating the unrotated term by `generators`.
ClosedFormComparison printed_closed_form(
    TermKind kind, const std::vector<std::size_t>& sites, std::size_t n,
    int num_majoranas, double theta,
    const std::vector<RotationGenerator>& generators,
    ClosedFormReading reading = ClosedFormReading::corrected,
    double tol = 1e-12);

/// Unrotated generator of an X- or Z-type term under assimilation.
MajoranaPolynomial assimilated_css_generator(TermKind kind,
                                             const std::vector<std::size_t>& sites,
                                             std::size_t n, int num_majoranas);

}  // namespace nlgs
