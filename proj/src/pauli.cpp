#include "nlgs/pauli.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nlgs {

namespace {

void require_same_size(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    std::ostringstream msg;
    msg << "Pauli strings act on " << a.num_qubits() << " and "
        << b.num_qubits() << " qubits";
    throw DimensionError(msg.str());
  }
}

bool is_binary(const BitRow& row) {
  return std::all_of(row.begin(), row.end(),
                     [](std::uint8_t b) { return b <= 1; });
}

}  // namespace

PauliString::PauliString(std::size_t num_qubits)
    : x_(num_qubits, 0), z_(num_qubits, 0) {}

PauliString::PauliString(BitRow x_bits, BitRow z_bits, int phase_exp)
    : x_(std::move(x_bits)), z_(std::move(z_bits)),
      phase_(((phase_exp % 4) + 4) % 4) {
  if (x_.size() != z_.size()) {
    throw DimensionError("x_bits and z_bits must have equal length");
  }
  if (!is_binary(x_) || !is_binary(z_)) {
    throw std::invalid_argument("Pauli bit vectors must be 0/1");
  }
}

PauliString PauliString::from_label(std::string_view label) {
  int displayed = 0;
  std::size_t pos = 0;
  if (pos < label.size() && (label[pos] == '+' || label[pos] == '-')) {
    if (label[pos] == '-') displayed = 2;
    ++pos;
  }
  if (pos < label.size() && label[pos] == 'i') {
    displayed += 1;
    ++pos;
  }
  BitRow xs;
  BitRow zs;
  int num_y = 0;
  for (; pos < label.size(); ++pos) {
    switch (label[pos]) {
      case 'I': xs.push_back(0); zs.push_back(0); break;
      case 'X': xs.push_back(1); zs.push_back(0); break;
      case 'Z': xs.push_back(0); zs.push_back(1); break;
      case 'Y': xs.push_back(1); zs.push_back(1); ++num_y; break;
      default:
        throw std::invalid_argument("bad Pauli label: " + std::string(label));
    }
  }
  // Y = i X Z, so each Y contributes one factor of i to the raw phase.
  return PauliString(std::move(xs), std::move(zs), displayed + num_y);
}

PauliString PauliString::x_type(const BitRow& support) {
  return PauliString(support, BitRow(support.size(), 0), 0);
}

PauliString PauliString::z_type(const BitRow& support) {
  return PauliString(BitRow(support.size(), 0), support, 0);
}

std::size_t PauliString::weight() const noexcept {
  std::size_t w = 0;
  for (std::size_t q = 0; q < x_.size(); ++q) w += (x_[q] | z_[q]);
  return w;
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < x_.size(); ++q) {
    if (x_[q] | z_[q]) out.push_back(q);
  }
  return out;
}

bool PauliString::is_identity() const noexcept {
  return weight() == 0 && phase_ == 0;
}

bool PauliString::is_hermitian() const noexcept {
  int num_y = 0;
  for (std::size_t q = 0; q < x_.size(); ++q) num_y += x_[q] & z_[q];
  return (phase_ - num_y) % 2 == 0;
}

bool PauliString::is_x_type() const noexcept {
  return std::all_of(z_.begin(), z_.end(), [](auto b) { return b == 0; });
}

bool PauliString::is_z_type() const noexcept {
  return std::all_of(x_.begin(), x_.end(), [](auto b) { return b == 0; });
}

std::string PauliString::to_string() const {
  int num_y = 0;
  std::string letters;
  for (std::size_t q = 0; q < x_.size(); ++q) {
    if (x_[q] && z_[q]) {
      letters += 'Y';
      ++num_y;
    } else if (x_[q]) {
      letters += 'X';
    } else if (z_[q]) {
      letters += 'Z';
    } else {
      letters += 'I';
    }
  }
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  return kPrefix[((phase_ - num_y) % 4 + 4) % 4] + letters;
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  const std::size_t n = a.num_qubits();
  BitRow x(n);
  BitRow z(n);
  int phase = a.phase_exp() + b.phase_exp();
  for (std::size_t q = 0; q < n; ++q) {
    // Z^{za} X^{xb} = (-1)^{za xb} X^{xb} Z^{za}
    phase += 2 * (a.z_bits()[q] & b.x_bits()[q]);
    x[q] = a.x_bits()[q] ^ b.x_bits()[q];
    z[q] = a.z_bits()[q] ^ b.z_bits()[q];
  }
  return PauliString(std::move(x), std::move(z), phase);
}

bool pauli_commutes(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  unsigned parity = 0;
  for (std::size_t q = 0; q < a.num_qubits(); ++q) {
    parity ^= (a.x_bits()[q] & b.z_bits()[q]) ^ (a.z_bits()[q] & b.x_bits()[q]);
  }
  return parity == 0;
}

void validate_code(const CssCode& code) {
  auto check_rows = [&](const BitMatrix& rows, const char* name, bool is_x) {
    std::set<BitRow> seen;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& row = rows[r];
      const std::size_t xr = is_x ? r : InvalidCodeError::npos;
      const std::size_t zr = is_x ? InvalidCodeError::npos : r;
      if (row.size() != code.n || !is_binary(row)) {
        throw InvalidCodeError(std::string(name) + " row " + std::to_string(r) +
                                   " is not a length-" +
                                   std::to_string(code.n) + " binary row",
                               xr, zr);
      }
      if (std::none_of(row.begin(), row.end(), [](auto b) { return b != 0; })) {
        throw InvalidCodeError(
            std::string(name) + " row " + std::to_string(r) + " is zero", xr,
            zr);
      }
      if (!seen.insert(row).second) {
        throw InvalidCodeError(std::string(name) + " row " + std::to_string(r) +
                                   " duplicates an earlier row",
                               xr, zr);
      }
    }
  };
  check_rows(code.h_x, "h_x", true);
  check_rows(code.h_z, "h_z", false);

  for (std::size_t i = 0; i < code.h_x.size(); ++i) {
    for (std::size_t j = 0; j < code.h_z.size(); ++j) {
      unsigned overlap = 0;
      for (std::size_t q = 0; q < code.n; ++q) {
        overlap ^= code.h_x[i][q] & code.h_z[j][q];
      }
      if (overlap != 0) {
        throw InvalidCodeError("h_x row " + std::to_string(i) +
                                   " and h_z row " + std::to_string(j) +
                                   " have odd overlap",
                               i, j);
      }
    }
  }
}

std::vector<PauliString> css_generators(const CssCode& code) {
  validate_code(code);
  std::vector<PauliString> out;
  out.reserve(code.h_x.size() + code.h_z.size());
  for (const auto& row : code.h_x) out.push_back(PauliString::x_type(row));
  for (const auto& row : code.h_z) out.push_back(PauliString::z_type(row));
  return out;
}

QubitHamiltonian build_css_hamiltonian(const CssCode& code,
                                       const HamiltonianOptions& options) {
  const auto generators = css_generators(code);
  const std::size_t r = generators.size();

  QubitHamiltonian h;
  h.n = code.n;
  h.num_generators = r;
  h.term_set = options.term_set;
  h.normalization_kind = options.normalization;

  std::vector<PauliString> operators;
  if (options.term_set == TermSet::generators) {
    operators = generators;
  } else {
    if (r > 16) {
      throw CapacityError("full-group expansion limited to 16 generators", r,
                          16);
    }
    std::set<std::pair<BitRow, BitRow>> seen;
    for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
      PauliString p(code.n);
      for (std::size_t g = 0; g < r; ++g) {
        if (mask & (1u << g)) p = pauli_mul(p, generators[g]);
      }
      if (p.weight() == 0) continue;
      if (seen.emplace(p.x_bits(), p.z_bits()).second) operators.push_back(p);
    }
  }

  for (auto& p : operators) {
    QubitTerm term;
    term.support = p.support();
    term.k = term.support.size();
    term.generator = std::move(p);
    h.terms.push_back(std::move(term));
  }

  if (options.normalization == Normalization::generator_count) {
    h.normalization = r == 0 ? 1.0 : 1.0 / static_cast<double>(r);
  } else {
    h.normalization = 1.0 / static_cast<double>(1ull << r);
  }
  return h;
}

}  // namespace nlgs
