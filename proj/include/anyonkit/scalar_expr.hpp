#pragma once

#include <string>

#include "anyonkit/cyclotomic.hpp"
#include "anyonkit/matrix.hpp"

namespace anyonkit {

// Small expression language for writing exact scalars compactly in data
// tables and tests:
//   numbers        rationals, e.g. 2, -1/3
//   w, w2          e^{2 pi i/3} and its square
//   i              imaginary unit
//   r2, r3, r6     sqrt(2), sqrt(3), sqrt(6)
//   t              tau = e^{-pi i/9}
//   z^k            zeta_72^k
//   + - * / ( )    the usual; '/' only by a parenthesized or literal factor
// Examples: "-1/2", "r2/2", "(1+r3*i)/6", "t*w2".
Cyc parse_scalar(const std::string& s);

// Matrix literal: rows separated by ';', entries by ','; every entry is a
// scalar expression. An optional prefactor multiplies all entries.
Mat parse_matrix(const std::string& rows, const std::string& prefactor = "1");

}  // namespace anyonkit
