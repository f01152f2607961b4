#include <sstream>

#include "divcodes/matrix_io.hpp"
#include "doctest.h"

using namespace divcodes;

namespace {

BitMatrix parse(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

}  // namespace

TEST_CASE("round trip") {
  auto m = BitMatrix::from_strings({"10110", "01011"});
  CHECK(format_matrix(m) == "5 2\n10110\n01011\n");
  CHECK(parse(format_matrix(m)) == m);
}

TEST_CASE("blank lines and surrounding whitespace are tolerated") {
  auto m = parse("\n3 1\r\n\n  101  \n\n");
  CHECK(m.to_strings() == std::vector<std::string>{"101"});
}

TEST_CASE("errors carry line and column") {
  try {
    parse("3 2\n101\n1x1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 2);
  }
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("3\n101\n"), ParseError);
  CHECK_THROWS_AS(parse("3 2\n101\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n1011\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n10\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n101\n111\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1 4\n101\n"), ParseError);
}
