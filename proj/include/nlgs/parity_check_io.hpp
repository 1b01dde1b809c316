#pragma once

// Parity-check text format:
//   n r_X r_Z
//   r_X rows of n characters in {0,1}
//   r_Z rows likewise
// Lines starting with '#' and blank lines are ignored.

#include <filesystem>
#include <istream>
#include <string>

#include "nlgs/pauli.hpp"

namespace nlgs {

/// Throws ParseError (with a 1-based line number) on malformed input. The
/// result is not validated as a CSS code.
CssCode parse_parity_check(std::istream& in);
CssCode parse_parity_check(const std::string& text);
CssCode read_parity_check_file(const std::filesystem::path& path);

}  // namespace nlgs
