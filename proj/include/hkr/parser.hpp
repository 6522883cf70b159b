#pragma once

// Text presentations:
//
//   # comment
//   var x weight 1;
//   var y weight 2;
//   rel x^2 - 3/2*y;
//
// Relations are polynomials over Q in the declared variables with + - * ^,
// parentheses and integer or rational literals.

#include <string>
#include <string_view>

#include "hkr/chern.hpp"
#include "hkr/resolvent.hpp"

namespace hkr {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

AlgebraPresentation parse_algebra(std::string_view text);
std::string format_algebra(const AlgebraPresentation& algebra);

/// A polynomial in the variables of `algebra`; errors carry line 1 and the column.
Element parse_polynomial(std::string_view text, const Gca& algebra);

/// {"generators": [{"name", "degree", "weight"}], "differential": [[...]]} where
/// differential[i][j] is the coefficient of generator i in the differential of
/// generator j, written as a polynomial string in the variables of `ring`.
TwistedComplex parse_twisted_complex(std::string_view json_text, const GcaPtr& ring);

}  // namespace hkr
