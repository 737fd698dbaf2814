#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bddil/cnf.hpp"

namespace bddil {

/// Standard DIMACS CNF: `c` comment lines, one `p cnf <vars> <clauses>`
/// header, zero-terminated clauses (possibly spanning lines). A lone `%`
/// ends the input. Count mismatches against the header are reported as
/// warnings, not errors. Throws ParseError on malformed input.
CnfFormula parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);

CnfFormula parse_dimacs(const std::string& text, std::vector<std::string>* warnings = nullptr);

}  // namespace bddil
