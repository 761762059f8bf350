#ifndef INTEGRABILIS_PARSE_HPP
#define INTEGRABILIS_PARSE_HPP

#include <string>

#include "integrabilis/cyclicext.hpp"

namespace integrabilis {

// Expression grammar shared by all three contexts, with standard precedence
// (^ above unary -, then * /, then + -), left-associative, integer exponents
// (negative allowed), 1-based error columns.
//
// Symbols: x, y always; z = zeta_N (order > 1 only); l = the extension
// generator (L-context only). Out-of-context symbols raise ContextError.

// K-context: a rational function in x, y over Q(zeta_N).
RatFn parse_ratfn(const std::string& src, unsigned order);

// Constants-context: an element of Q(zeta_N); variables raise ContextError.
Cyclo parse_cyclo(const std::string& src, unsigned order);

// L-context: an element of K(l).
ExtElem parse_ext(const std::string& src, const ExtDescriptor& desc);

} // namespace integrabilis

#endif
