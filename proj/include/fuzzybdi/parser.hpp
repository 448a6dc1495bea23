#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzybdi/formula.hpp"
#include "fuzzybdi/program.hpp"
#include "fuzzybdi/term.hpp"

namespace fbdi {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(int line, int column, std::vector<std::string> expected, std::string found);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Parses the AgentSpeak subset: beliefs, belief rules, initial goals and
/// `+!goal` plans. `//` and `/* */` comments are skipped.
Program parse_program(std::string_view source);

Term parse_term(std::string_view source);
Formula parse_formula(std::string_view source);

}  // namespace fbdi
