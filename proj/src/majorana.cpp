#include "nlgs/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace nlgs {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_same_register(const MajoranaPolynomial& a,
                           const MajoranaPolynomial& b) {
  if (a.num_majoranas() != b.num_majoranas()) {
    std::ostringstream msg;
    msg << "Majorana registers differ: " << a.num_majoranas() << " vs "
        << b.num_majoranas();
    throw DimensionError(msg.str());
  }
}

Complex i_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

MajoranaMonomial normal_order(std::span<const int> raw, Complex coeff) {
  std::vector<int> work(raw.begin(), raw.end());
  for (int v : work) {
    if (v <= 0) throw std::invalid_argument("Majorana labels are positive");
  }
  bool negative = false;
  // Bubble sort; any adjacent equal pair squares to the identity.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < work.size();) {
      if (work[i] > work[i + 1]) {
        std::swap(work[i], work[i + 1]);
        negative = !negative;
        changed = true;
        ++i;
      } else if (work[i] == work[i + 1]) {
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i),
                   work.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
      } else {
        ++i;
      }
    }
  }
  return MajoranaMonomial{std::move(work), negative ? -coeff : coeff};
}

MajoranaPolynomial::MajoranaPolynomial(int num_majoranas)
    : num_majoranas_(num_majoranas) {
  if (num_majoranas < 0) throw std::invalid_argument("negative register size");
}

MajoranaPolynomial MajoranaPolynomial::identity(int num_majoranas,
                                                Complex coeff) {
  MajoranaPolynomial p(num_majoranas);
  p.add_term({}, coeff);
  return p;
}

MajoranaPolynomial MajoranaPolynomial::monomial(int num_majoranas,
                                                std::span<const int> raw,
                                                Complex coeff) {
  MajoranaPolynomial p(num_majoranas);
  auto m = normal_order(raw, coeff);
  p.add_term(m.indices, m.coeff);
  return p;
}

MajoranaPolynomial MajoranaPolynomial::monomial(int num_majoranas,
                                                std::initializer_list<int> raw,
                                                Complex coeff) {
  return monomial(num_majoranas, std::span<const int>(raw.begin(), raw.size()),
                  coeff);
}

Complex MajoranaPolynomial::coeff(const MajoranaIndices& indices) const {
  auto it = terms_.find(indices);
  return it == terms_.end() ? Complex{} : it->second;
}

void MajoranaPolynomial::add_term(const MajoranaIndices& indices,
                                  Complex coeff) {
  if (!indices.empty() && indices.back() > num_majoranas_) {
    throw DimensionError("Majorana c_" + std::to_string(indices.back()) +
                         " outside register of size " +
                         std::to_string(num_majoranas_));
  }
  if (coeff == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(indices, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

MajoranaPolynomial MajoranaPolynomial::widened(int num_majoranas) const {
  if (num_majoranas < num_majoranas_) {
    throw DimensionError("cannot shrink a Majorana register");
  }
  MajoranaPolynomial out(num_majoranas);
  out.terms_ = terms_;
  return out;
}

MajoranaPolynomial MajoranaPolynomial::pruned(double tol) const {
  MajoranaPolynomial out(num_majoranas_);
  for (const auto& [idx, c] : terms_) {
    if (std::abs(c) > tol) out.terms_.emplace(idx, c);
  }
  return out;
}

MajoranaIndices MajoranaPolynomial::support() const {
  MajoranaIndices out;
  for (const auto& [idx, c] : terms_) out.insert(out.end(), idx.begin(), idx.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t MajoranaPolynomial::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& [idx, c] : terms_) d = std::max(d, idx.size());
  return d;
}

MajoranaPolynomial& MajoranaPolynomial::operator+=(
    const MajoranaPolynomial& other) {
  require_same_register(*this, other);
  for (const auto& [idx, c] : other.terms_) add_term(idx, c);
  return *this;
}

MajoranaPolynomial& MajoranaPolynomial::operator-=(
    const MajoranaPolynomial& other) {
  require_same_register(*this, other);
  for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
  return *this;
}

MajoranaPolynomial& MajoranaPolynomial::operator*=(Complex scalar) {
  if (scalar == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, c] : terms_) c *= scalar;
  return *this;
}

std::string MajoranaPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os << std::setprecision(12);
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag())
       << "i)";
    if (idx.empty()) os << " I";
    for (int i : idx) os << " c" << i;
  }
  return os.str();
}

MajoranaPolynomial operator+(MajoranaPolynomial a, const MajoranaPolynomial& b) {
  a += b;
  return a;
}

MajoranaPolynomial operator-(MajoranaPolynomial a, const MajoranaPolynomial& b) {
  a -= b;
  return a;
}

MajoranaPolynomial operator*(Complex s, MajoranaPolynomial a) {
  a *= s;
  return a;
}

MajoranaMonomial monomial_mul(const MajoranaMonomial& a,
                              const MajoranaMonomial& b) {
  // Moving each b_j left into place passes every a_i > b_j once; equal
  // labels meet and cancel without further sign.
  MajoranaMonomial out;
  out.indices.reserve(a.indices.size() + b.indices.size());
  std::size_t crossings = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  const std::size_t na = a.indices.size();
  const std::size_t nb = b.indices.size();
  while (i < na && j < nb) {
    if (a.indices[i] < b.indices[j]) {
      out.indices.push_back(a.indices[i++]);
    } else if (a.indices[i] > b.indices[j]) {
      crossings += na - i;
      out.indices.push_back(b.indices[j++]);
    } else {
      crossings += na - i - 1;
      ++i;
      ++j;
    }
  }
  while (i < na) out.indices.push_back(a.indices[i++]);
  while (j < nb) out.indices.push_back(b.indices[j++]);
  out.coeff = a.coeff * b.coeff;
  if (crossings % 2 == 1) out.coeff = -out.coeff;
  return out;
}

MajoranaPolynomial poly_mul(const MajoranaPolynomial& a,
                            const MajoranaPolynomial& b) {
  require_same_register(a, b);
  MajoranaPolynomial out(a.num_majoranas());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      auto m = monomial_mul({ia, ca}, {ib, cb});
      out.add_term(m.indices, m.coeff);
    }
  }
  return out;
}

Commutation monomial_commutation(const MajoranaIndices& a,
                                 const MajoranaIndices& b) {
  std::size_t shared = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  const std::size_t exponent = a.size() * b.size() - shared;
  return exponent % 2 == 0 ? Commutation::commute : Commutation::anticommute;
}

double max_abs_difference(const MajoranaPolynomial& a,
                          const MajoranaPolynomial& b) {
  double worst = 0.0;
  for (const auto& [idx, c] : a.terms()) {
    worst = std::max(worst, std::abs(c - b.coeff(idx)));
  }
  for (const auto& [idx, c] : b.terms()) {
    if (!a.terms().contains(idx)) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

bool hermitian_check(const MajoranaPolynomial& a, double tol) {
  for (const auto& [idx, c] : a.terms()) {
    // Reversing d anticommuting factors costs (-1)^{d(d-1)/2}.
    const std::size_t d = idx.size();
    const double reversal = ((d * (d - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    if (std::abs(std::conj(c) * reversal - c) > tol) return false;
  }
  return true;
}

Parity parity_check(const MajoranaPolynomial& a) {
  bool has_even = false;
  bool has_odd = false;
  for (const auto& [idx, c] : a.terms()) {
    (idx.size() % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_odd && has_even) return Parity::mixed;
  return has_odd ? Parity::odd : Parity::even;
}

MajoranaPolynomial jordan_wigner(const PauliString& p) {
  const int n = static_cast<int>(p.num_qubits());
  const int reg = 2 * n;
  // Z_j = -i c_{2j-1} c_{2j}; X_j = (prod_{k<j} Z_k) c_{2j-1}.
  MajoranaMonomial acc{{}, i_power(p.phase_exp())};
  for (int j = 1; j <= n; ++j) {
    if (p.x(j - 1)) {
      MajoranaMonomial x_j{{}, 1.0};
      for (int k = 1; k < j; ++k) {
        x_j = monomial_mul(x_j, MajoranaMonomial{{2 * k - 1, 2 * k}, -kI});
      }
      x_j = monomial_mul(x_j, MajoranaMonomial{{2 * j - 1}, 1.0});
      acc = monomial_mul(acc, x_j);
    }
    if (p.z(j - 1)) {
      acc = monomial_mul(acc, MajoranaMonomial{{2 * j - 1, 2 * j}, -kI});
    }
  }
  MajoranaPolynomial out(reg);
  out.add_term(acc.indices, acc.coeff);
  return out;
}

PauliString jw_inverse(const MajoranaPolynomial& a) {
  if (a.num_majoranas() % 2 != 0) {
    throw DimensionError("jw_inverse needs an even Majorana register");
  }
  if (a.size() != 1) {
    throw std::invalid_argument("jw_inverse accepts a single monomial only");
  }
  const auto& [indices, coeff] = *a.terms().begin();
  int phase = -1;
  for (int e = 0; e < 4; ++e) {
    if (std::abs(coeff - i_power(e)) < 1e-12) phase = e;
  }
  if (phase < 0) {
    throw std::invalid_argument(
        "jw_inverse needs a coefficient in {1, i, -1, -i}");
  }
  const std::size_t n = static_cast<std::size_t>(a.num_majoranas() / 2);
  PauliString acc(BitRow(n, 0), BitRow(n, 0), phase);
  for (int idx : indices) {
    const std::size_t q = static_cast<std::size_t>((idx + 1) / 2 - 1);
    BitRow x(n, 0);
    BitRow z(n, 0);
    for (std::size_t k = 0; k < q; ++k) z[k] = 1;
    x[q] = 1;
    int ph = 0;
    if (idx % 2 == 0) {
      z[q] = 1;  // Y = i X Z
      ph = 1;
    }
    acc = pauli_mul(acc, PauliString(std::move(x), std::move(z), ph));
  }
  return acc;
}

MajoranaPolynomial assimilate(const PauliString& p, std::size_t n) {
  for (std::size_t q : p.support()) {
    if (q >= n) {
      throw DimensionError("Pauli support on qubit " + std::to_string(q + 1) +
                           " lies outside [1, " + std::to_string(n) + "]");
    }
  }
  const int nn = static_cast<int>(n);
  MajoranaMonomial acc{{}, i_power(p.phase_exp())};
  for (int j = 1; j <= nn && j <= static_cast<int>(p.num_qubits()); ++j) {
    if (p.x(j - 1)) {
      acc = monomial_mul(acc, normal_order(std::vector<int>{2 * j - 1, 2 * nn + j}, kI));
    }
    if (p.z(j - 1)) {
      acc = monomial_mul(acc, normal_order(std::vector<int>{2 * j, 2 * j - 1}, kI));
    }
  }
  MajoranaPolynomial out(3 * nn);
  out.add_term(acc.indices, acc.coeff);
  return out;
}

}  // namespace nlgs
