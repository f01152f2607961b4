#include "divcodes/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace divcodes {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

BitMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError(lineno + 1, 1, "missing header \"n k\"");
  std::istringstream header(line);
  long long n = -1;
  long long k = -1;
  std::string extra;
  if (!(header >> n >> k) || n < 0 || k < 0) throw ParseError(lineno, 1, "header must be two nonnegative integers \"n k\"");
  if (header >> extra) throw ParseError(lineno, line.find(extra) + 1, "unexpected text after header");
  BitMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
  for (long long i = 0; i < k; ++i) {
    if (!next_content_line(in, line, lineno)) {
      throw ParseError(lineno + 1, 1, "expected " + std::to_string(k) + " rows, found " + std::to_string(i));
    }
    const auto first = line.find_first_not_of(" \t");
    const auto last = line.find_last_not_of(" \t");
    const std::string body = line.substr(first, last - first + 1);
    for (std::size_t j = 0; j < body.size(); ++j) {
      const char c = body[j];
      if (c != '0' && c != '1') throw ParseError(lineno, first + j + 1, std::string("invalid character '") + c + "'");
      if (j >= static_cast<std::size_t>(n)) throw ParseError(lineno, first + j + 1, "row longer than n");
      if (c == '1') m.set(static_cast<std::size_t>(i), j);
    }
    if (body.size() != static_cast<std::size_t>(n)) {
      throw ParseError(lineno, first + body.size() + 1, "row has " + std::to_string(body.size()) + " entries, expected " + std::to_string(n));
    }
  }
  if (next_content_line(in, line, lineno)) throw ParseError(lineno, 1, "unexpected extra row");
  return m;
}

BitMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const BitMatrix& m) {
  out << m.cols() << ' ' << m.rows() << '\n';
  for (const auto& row : m.to_strings()) out << row << '\n';
}

std::string format_matrix(const BitMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

}  // namespace divcodes
