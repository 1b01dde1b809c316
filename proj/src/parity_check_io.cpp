#include "nlgs/parity_check_io.hpp"

#include <fstream>
#include <sstream>

namespace nlgs {

namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

std::string trimmed(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

BitRow parse_row(const std::string& text, std::size_t n, std::size_t line_no) {
  if (text.size() != n) {
    throw ParseError("row has " + std::to_string(text.size()) +
                         " characters, expected " + std::to_string(n),
                     line_no);
  }
  BitRow row(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw ParseError(std::string("unexpected character '") + text[i] + "' in row",
                       line_no);
    }
    row[i] = static_cast<std::uint8_t>(text[i] - '0');
  }
  return row;
}

}  // namespace

CssCode parse_parity_check(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!skippable(line)) return true;
    }
    return false;
  };

  if (!next()) throw ParseError("missing header line 'n r_X r_Z'", line_no);
  std::istringstream header(line);
  long long n = -1;
  long long rx = -1;
  long long rz = -1;
  std::string extra;
  if (!(header >> n >> rx >> rz) || (header >> extra) || n <= 0 || rx < 0 || rz < 0) {
    throw ParseError("malformed header, expected 'n r_X r_Z'", line_no);
  }

  CssCode code;
  code.n = static_cast<std::size_t>(n);
  auto read_rows = [&](long long count, BitMatrix& into, const char* which) {
    for (long long r = 0; r < count; ++r) {
      if (!next()) {
        throw ParseError(std::string("expected ") + std::to_string(count) + " " +
                             which + " rows, got " + std::to_string(r),
                         line_no);
      }
      into.push_back(parse_row(trimmed(line), code.n, line_no));
    }
  };
  read_rows(rx, code.h_x, "X");
  read_rows(rz, code.h_z, "Z");
  if (next()) throw ParseError("unexpected content after the last row", line_no);
  return code;
}

CssCode parse_parity_check(const std::string& text) {
  std::istringstream in(text);
  return parse_parity_check(in);
}

CssCode read_parity_check_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return parse_parity_check(in);
}

}  // namespace nlgs
