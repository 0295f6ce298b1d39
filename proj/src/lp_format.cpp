#include "sfcplace/lp_format.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace sfcplace {
namespace {

constexpr std::size_t kWrap = 8;  // terms per output line

void write_terms(std::ostream& os, const std::vector<Term>& terms, const VarRegistry& vars) {
  std::size_t written = 0;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    const bool negative = t.coeff.sign() < 0;
    const Rational mag = negative ? -t.coeff : t.coeff;
    if (written > 0 && written % kWrap == 0) os << "\n   ";
    if (written == 0) {
      os << (negative ? "- " : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mag != Rational(1)) os << mag.decimal() << ' ';
    os << vars.name(t.var);
    ++written;
  }
  if (written == 0) os << "0 " << vars.name(terms.empty() ? 0 : terms.front().var);
}

}  // namespace

void write_lp(std::ostream& os, const IlpModel& model) {
  const auto& vars = model.vars;
  os << "\\ SFC placement model: " << vars.size() << " variables, " << model.constraints.size()
     << " constraints\n";
  os << "Minimize\n obj:";
  bool any = false;
  for (const auto& t : model.objective) any = any || !t.coeff.is_zero();
  if (any) {
    os << ' ';
    write_terms(os, model.objective, vars);
  }
  os << "\nSubject To\n";
  std::map<std::string, std::size_t> ordinal;
  for (const auto& row : model.constraints) {
    const std::size_t id = ordinal[row.tag]++;
    std::string name = row.tag + "_" + std::to_string(id);
    for (auto& ch : name)
      if (ch == '-') ch = '_';
    bool nonzero = false;
    for (const auto& t : row.terms) nonzero = nonzero || !t.coeff.is_zero();
    if (!nonzero) {
      // Constant row; only emitted as a comment when it holds.
      const Rational zero(0);
      const bool holds = row.sense == Sense::LessEqual      ? zero <= row.rhs
                         : row.sense == Sense::GreaterEqual ? zero >= row.rhs
                                                            : zero == row.rhs;
      if (holds) {
        os << "\\ " << name << ": constant row, always satisfied\n";
        continue;
      }
    }
    os << ' ' << name << ": ";
    if (row.terms.empty()) {
      os << "0 " << vars.name(0);
    } else {
      write_terms(os, row.terms, vars);
    }
    os << ' ' << to_string(row.sense) << ' ' << row.rhs.decimal() << '\n';
  }
  os << "Bounds\n";
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars.info(static_cast<int>(i)).continuous) os << ' ' << vars.name(static_cast<int>(i)) << " >= 0\n";
  os << "Binaries\n";
  std::size_t on_line = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars.info(static_cast<int>(i)).continuous) continue;
    os << (on_line == 0 ? " " : " ") << vars.name(static_cast<int>(i));
    if (++on_line == kWrap) {
      os << '\n';
      on_line = 0;
    }
  }
  if (on_line != 0) os << '\n';
  os << "End\n";
}

std::string to_lp_string(const IlpModel& model) {
  std::ostringstream os;
  write_lp(os, model);
  return os.str();
}

ExternalSolution parse_solution_file(std::string_view text) {
  ExternalSolution out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key, value;
    if (!(ls >> key)) continue;
    if (first && (key == "infeasible" || key == "INFEASIBLE")) return ExternalSolution{};
    first = false;
    if (!(ls >> value)) throw std::invalid_argument("solution line without a value: " + line);
    Rational v;
    try {
      v = Rational::parse(value);
    } catch (const std::exception&) {
      // Solvers print values like 0.99999999997 or 1e-12 for binaries.
      v = Rational::from_double(std::stod(value));
    }
    if (key == "=obj=") {
      out.has_solution = true;
      out.objective = v;
    } else {
      out.values[key] = v;
    }
  }
  return out;
}

std::string format_solution_file(const IlpModel& model, const std::vector<Rational>& values,
                                 const Rational& objective) {
  std::ostringstream os;
  os << "=obj= " << objective.decimal() << '\n';
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!values[i].is_zero()) os << model.vars.name(static_cast<int>(i)) << ' ' << values[i].decimal() << '\n';
  return os.str();
}

}  // namespace sfcplace
