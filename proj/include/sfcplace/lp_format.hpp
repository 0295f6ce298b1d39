#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "sfcplace/ilp.hpp"

namespace sfcplace {

// CPLEX-style LP text: Minimize / Subject To / Bounds / Binaries / End.
// Constraint names are "<tag>_<ordinal within tag>".
void write_lp(std::ostream& os, const IlpModel& model);
std::string to_lp_string(const IlpModel& model);

// Solution exchange file written by an external backend:
//   =obj= <objective>
//   <var-name> <value>
// Variables that are not listed are zero. A missing "=obj=" line, or the
// word "infeasible" on the first line, means no solution.
struct ExternalSolution {
  bool has_solution = false;
  Rational objective;
  std::map<std::string, Rational> values;
};

ExternalSolution parse_solution_file(std::string_view text);
std::string format_solution_file(const IlpModel& model, const std::vector<Rational>& values,
                                 const Rational& objective);

}  // namespace sfcplace
