#pragma once

// Exact n-qubit Pauli algebra in symplectic form and CSS stabilizer
// Hamiltonians built from binary parity-check matrices.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nlgs/errors.hpp"

namespace nlgs {

using BitRow = std::vector<std::uint8_t>;
using BitMatrix = std::vector<BitRow>;

/// Signed Pauli operator i^phase_exp * prod_j X_j^{x_j} Z_j^{z_j}.
///
/// The phase is stored in the raw symplectic convention, so Y on a single
/// qubit is (x=1, z=1, phase_exp=1). Qubit positions are 0-based.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t num_qubits);
  PauliString(BitRow x_bits, BitRow z_bits, int phase_exp = 0);

  /// Parses labels such as "XIZ", "-iYX", "+Z". The optional prefix is the
  /// displayed phase in front of the letter product.
  static PauliString from_label(std::string_view label);

  static PauliString x_type(const BitRow& support);
  static PauliString z_type(const BitRow& support);

  std::size_t num_qubits() const noexcept { return x_.size(); }
  bool x(std::size_t q) const { return x_.at(q) != 0; }
  bool z(std::size_t q) const { return z_.at(q) != 0; }
  const BitRow& x_bits() const noexcept { return x_; }
  const BitRow& z_bits() const noexcept { return z_; }
  int phase_exp() const noexcept { return phase_; }

  std::size_t weight() const noexcept;
  std::vector<std::size_t> support() const;
  bool is_identity() const noexcept;
  bool is_hermitian() const noexcept;
  bool is_x_type() const noexcept;
  bool is_z_type() const noexcept;

  /// Letter form with the displayed phase, e.g. "+iYX".
  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  BitRow x_;
  BitRow z_;
  int phase_ = 0;
};

PauliString pauli_mul(const PauliString& a, const PauliString& b);
bool pauli_commutes(const PauliString& a, const PauliString& b);

inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return pauli_mul(a, b);
}

struct CssCode {
  std::size_t n = 0;
  BitMatrix h_x;
  BitMatrix h_z;
};

/// Throws InvalidCodeError for ragged/zero/duplicate rows or an odd
/// X/Z row overlap; the error names the offending row pair.
void validate_code(const CssCode& code);

/// X-type generators (rows of h_x) followed by Z-type generators.
std::vector<PauliString> css_generators(const CssCode& code);

/// Which operators the Hamiltonian sums over.
enum class TermSet { generators, full_group };

/// 1/(number of generators) or 1/(order of the stabilizer group).
enum class Normalization { generator_count, group_order };

struct HamiltonianOptions {
  TermSet term_set = TermSet::generators;
  Normalization normalization = Normalization::generator_count;
};

/// One penalty term (I - S)/2.
struct QubitTerm {
  PauliString generator;
  std::vector<std::size_t> support;  // 0-based qubits
  std::size_t k = 0;                 // weight of the generator
};

struct QubitHamiltonian {
  std::size_t n = 0;
  std::vector<QubitTerm> terms;
  double normalization = 1.0;
  std::size_t num_generators = 0;
  TermSet term_set = TermSet::generators;
  Normalization normalization_kind = Normalization::generator_count;
};

/// Full-group expansion enumerates 2^r products and is capped at r <= 16.
QubitHamiltonian build_css_hamiltonian(const CssCode& code,
                                       const HamiltonianOptions& options = {});

}  // namespace nlgs
