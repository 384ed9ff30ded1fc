#pragma once

#include <string>
#include <string_view>

#include "flex/robustness.hpp"

namespace flex {

/// Syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int col, std::string expected, const std::string& found);
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_;
  int col_;
  std::string expected_;
};

/// One inclusion per line: `expr in ext`, `#` starts a comment.
FlexibleSystem parse_system(std::string_view text);
ExternalScalar parse_external(std::string_view text);
/// Comma-separated real entries, optionally in parentheses.
EpsVector parse_point(std::string_view text);

/// Text that parse_system reads back to an identical system.
std::string format_system(const FlexibleSystem& s);

std::string format_vector(const EpsVector& v);
std::string format_solution_text(const SolutionSet& z);
std::string format_solution_json(const SolutionSet& z, bool exact = false, int indent = 2);

std::string format_integrated(const IntegratedSystem& sys);
std::string format_echelon(const EchelonSystem& e);
std::string format_echelon_json(const IntegratedSystem& sys, const EchelonSystem& e, bool exact = false,
                                int indent = 2);
/// `verdict` is appended when non-empty.
std::string format_feasibility(const FlexibleSystem& s, const IntegratedSystem& sys, const std::string& verdict = {});
std::string format_feasibility_json(const FlexibleSystem& s, const IntegratedSystem& sys,
                                    const std::string& verdict = {}, int indent = 2);
std::string format_robustness(const RobustnessReport& r);
std::string format_robustness_json(const RobustnessReport& r, int indent = 2);

}  // namespace flex
