#pragma once

// Operator expressions for the command line and Berezin grid dumps.
//
//   expr   := term (('+' | '-') term)*
//   term   := [scalar '*'] atom | '-' term
//   atom   := 'I' | 'J' | 'P(' complex ')' | 'lift(' path ')' | '(' expr ')'
//   scalar := real | real 'i' | 'i' | '(' complex ')'
//
// Complex literals read as a, bi, a+bi, a-bi with i the unit of the space.
// lift(path) reads a JSON array of N+1 rows, each N+1 [re, im] pairs, as the
// finite section of the operator (zero tail).

#include <string>
#include <vector>

#include "qslab/bergman.hpp"
#include "qslab/errors.hpp"

namespace qslab {

class SpecError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Throws SpecError on a malformed expression, an unreadable or misshapen
/// matrix file, or a P(z) point outside the disk.
BergOperator parse_operator(const std::string& spec, const BergmanSpace& s);

/// "RxA" polar grid: r_k = k/R (k < R), theta_a = 2 pi a/A, radius-major.
/// "0x0" (or any zero count) is empty. Throws SpecError.
std::vector<Complex> parse_grid(const std::string& g);

/// CSV with header re_z,im_z,re_value,im_value and one row per point,
/// values printed with 17 significant digits (they round-trip exactly).
std::string berezin_csv(const BergmanSpace& s, const BergOperator& t, const std::vector<Complex>& grid);

}  // namespace qslab
