#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlgs {

/// Operand sizes disagree (qubit counts, Majorana registers, matrix shapes).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parity-check description does not define a valid CSS code.
class InvalidCodeError : public std::invalid_argument {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  InvalidCodeError(const std::string& what, std::size_t x_row = npos,
                   std::size_t z_row = npos)
      : std::invalid_argument(what), x_row_(x_row), z_row_(z_row) {}

  // Offending rows (0-based into h_x / h_z); npos when not applicable.
  std::size_t x_row() const noexcept { return x_row_; }
  std::size_t z_row() const noexcept { return z_row_; }

 private:
  std::size_t x_row_;
  std::size_t z_row_;
};

/// Not enough room: free ancilla Majoranas, or the dense-oracle qubit cap.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::size_t required,
                std::size_t available)
      : std::runtime_error(what), required_(required), available_(available) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace nlgs
