#pragma once

// Text formats for algebras and modules.
//
// Algebra files, one declaration per line, '#' starts a comment:
//
//   field GF(2)                 # or: field QQ
//   vertices 1 2
//   arrow a : 1 -> 2
//   arrow b : 2 -> 1
//   relation a*b*a              # apply a, then b, then a
//   relation b*a + 2 c*d        # coefficients default to 1
//
// Paths compose like functions: `b*a` applies `a` first, so it requires
// target(a) == source(b).
//
// Module files:
//
//   algebra s24.alg             # optional; resolved relative to the module file
//   side left                   # or: side right
//   space 1 = 2
//   map a = [[1,0],[0,1]]       # row-major over the algebra's field
//
// A left-module arrow a : u -> v is a dim(v) x dim(u) matrix M_u -> M_v. A
// right-module arrow a : u -> v acts M_v -> M_u and is dim(u) x dim(v).
// Omitted spaces are zero and omitted maps are zero.

#include "relag/quiveralg.hpp"

#include <stdexcept>
#include <string>

namespace relag {

class Module;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

AlgebraPresentation parse_algebra_file(const std::string& text);
std::string format_algebra_file(const AlgebraPresentation& p);

/// Path named by an `algebra` line, or empty.
std::string module_algebra_reference(const std::string& text);
Module parse_module_file(const std::string& text, const Algebra& algebra);
std::string format_module_file(const Module& m);

}  // namespace relag
