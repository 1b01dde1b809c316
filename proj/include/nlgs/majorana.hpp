#pragma once

// Canonical Majorana monomials and polynomials, plus the Jordan-Wigner and
// qubit-assimilation maps from Pauli strings.
//
// Majorana labels are 1-based. A register of size N holds c_1 .. c_N.

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nlgs/pauli.hpp"

namespace nlgs {

using Complex = std::complex<double>;
using MajoranaIndices = std::vector<int>;

/// coeff * c_{indices[0]} c_{indices[1]} ..., indices strictly ascending.
struct MajoranaMonomial {
  MajoranaIndices indices;
  Complex coeff{1.0, 0.0};

  std::size_t degree() const noexcept { return indices.size(); }
  int parity() const noexcept { return static_cast<int>(indices.size() % 2); }
};

/// Sorts a raw product of Majoranas, flipping the sign once per adjacent
/// transposition and cancelling equal neighbours (c_i^2 = 1).
MajoranaMonomial normal_order(std::span<const int> raw, Complex coeff = 1.0);

class MajoranaPolynomial {
 public:
  using TermMap = std::map<MajoranaIndices, Complex>;

  MajoranaPolynomial() = default;
  explicit MajoranaPolynomial(int num_majoranas);

  static MajoranaPolynomial identity(int num_majoranas, Complex coeff = 1.0);
  /// Normal-orders `raw` before storing.
  static MajoranaPolynomial monomial(int num_majoranas,
                                     std::span<const int> raw,
                                     Complex coeff = 1.0);
  static MajoranaPolynomial monomial(int num_majoranas,
                                     std::initializer_list<int> raw,
                                     Complex coeff = 1.0);

  int num_majoranas() const noexcept { return num_majoranas_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient of a canonical index set (0 when absent).
  Complex coeff(const MajoranaIndices& indices) const;

  /// Adds to a canonical index set; exact zeros are erased.
  void add_term(const MajoranaIndices& indices, Complex coeff);

  /// Same polynomial on a larger register.
  MajoranaPolynomial widened(int num_majoranas) const;

  /// Drops terms with |coeff| <= tol.
  MajoranaPolynomial pruned(double tol) const;

  /// Sorted union of every index that appears.
  MajoranaIndices support() const;
  std::size_t max_degree() const noexcept;

  MajoranaPolynomial& operator+=(const MajoranaPolynomial& other);
  MajoranaPolynomial& operator-=(const MajoranaPolynomial& other);
  MajoranaPolynomial& operator*=(Complex scalar);

  std::string to_string() const;

  friend bool operator==(const MajoranaPolynomial&,
                         const MajoranaPolynomial&) = default;

 private:
  int num_majoranas_ = 0;
  TermMap terms_;
};

MajoranaPolynomial operator+(MajoranaPolynomial a, const MajoranaPolynomial& b);
MajoranaPolynomial operator-(MajoranaPolynomial a, const MajoranaPolynomial& b);
MajoranaPolynomial operator*(Complex s, MajoranaPolynomial a);

/// Product of two canonical monomials (indices and sign only).
MajoranaMonomial monomial_mul(const MajoranaMonomial& a,
                              const MajoranaMonomial& b);

MajoranaPolynomial poly_mul(const MajoranaPolynomial& a,
                            const MajoranaPolynomial& b);

inline MajoranaPolynomial operator*(const MajoranaPolynomial& a,
                                    const MajoranaPolynomial& b) {
  return poly_mul(a, b);
}

enum class Commutation { commute, anticommute };

/// Sign rule: ab = (-1)^(deg a * deg b - shared) ba.
Commutation monomial_commutation(const MajoranaIndices& a,
                                 const MajoranaIndices& b);

/// Max |coeff difference| over the union of terms.
double max_abs_difference(const MajoranaPolynomial& a,
                          const MajoranaPolynomial& b);

bool hermitian_check(const MajoranaPolynomial& a, double tol = 1e-12);

enum class Parity { even, odd, mixed };
Parity parity_check(const MajoranaPolynomial& a);

/// Jordan-Wigner in Majorana form on a 2n register:
/// c_{2j-1} = (prod_{k<j} Z_k) X_j, c_{2j} = (prod_{k<j} Z_k) Y_j.
MajoranaPolynomial jordan_wigner(const PauliString& p);

/// Inverse of jordan_wigner. Accepts only a single monomial whose coefficient
/// is a power of i, on an even register.
PauliString jw_inverse(const MajoranaPolynomial& a);

/// Locality-preserving n-qubit -> 3n-Majorana assimilation:
///   X_j -> i c_{2j-1} c_{2n+j},  Y_j -> i c_{2j} c_{2n+j},
///   Z_j -> i c_{2j} c_{2j-1}.
/// The support of `p` must lie inside the first n qubits.
MajoranaPolynomial assimilate(const PauliString& p, std::size_t n);

}  // namespace nlgs
