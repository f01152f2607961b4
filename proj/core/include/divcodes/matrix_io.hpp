#pragma once

// Plain-text generator matrix format: a header line "n k" followed by k
// rows of exactly n characters from {0,1}.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "divcodes/gf2.hpp"

namespace divcodes {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads one matrix; the generator may be rank-deficient.
BitMatrix read_matrix(std::istream& in);
BitMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const BitMatrix& m);
std::string format_matrix(const BitMatrix& m);

}  // namespace divcodes
