#include "bddil/dimacs.hpp"

#include <istream>
#include <sstream>

namespace bddil {

CnfFormula parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
  auto warn = [&](const std::string& message) {
    if (warnings) warnings->push_back(message);
  };
  CnfFormula cnf;
  bool header_seen = false;
  std::uint32_t declared_vars = 0;
  std::size_t declared_clauses = 0;
  std::size_t parsed_clauses = 0;
  std::vector<Literal> pending;
  std::string line;
  int line_no = 0;
  bool done = false;
  while (!done && std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream ls(line);
      std::string p, fmt;
      if (!(ls >> p >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf") {
        throw ParseError(line_no, "malformed problem line");
      }
      if (header_seen) throw ParseError(line_no, "duplicate problem line");
      header_seen = true;
      cnf.set_num_variables(declared_vars);
      continue;
    }
    if (line[0] == '%') break;  // SATLIB-style terminator
    if (!header_seen) throw ParseError(line_no, "clause before the problem line");
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      if (token == "%") {
        done = true;
        break;
      }
      int value = 0;
      try {
        std::size_t pos = 0;
        value = std::stoi(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError(line_no, "not a literal: '" + token + "'");
      }
      if (value == 0) {
        cnf.add_clause(std::move(pending));
        pending.clear();
        ++parsed_clauses;
      } else {
        const auto var = static_cast<std::uint32_t>(value < 0 ? -value : value);
        if (var > declared_vars) {
          warn("literal " + std::to_string(value) + " exceeds the declared variable count");
        }
        pending.push_back(Literal::from_dimacs(value));
      }
    }
  }
  if (!header_seen) throw ParseError(line_no, "missing problem line");
  if (!pending.empty()) throw ParseError(line_no, "unterminated clause at end of input");
  if (parsed_clauses != declared_clauses) {
    warn("header declares " + std::to_string(declared_clauses) + " clauses, parsed " +
         std::to_string(parsed_clauses));
  }
  return cnf;
}

CnfFormula parse_dimacs(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_dimacs(in, warnings);
}

}  // namespace bddil
