#pragma once

// Integer-coefficient polynomial helpers shared by the gcd and Sturm code.
// Working with primitive integer polynomials keeps remainder sequences
// small compared to rational arithmetic.

#include <vector>

#include "dsop/poly.hpp"

namespace dsop::detail {

using ZPoly = std::vector<Integer>;  // ascending, no trailing zeros

void trim(ZPoly& p);

/// Positive multiple of p with coprime integer coefficients.
ZPoly primitive_part(const QPoly& p);
void make_primitive(ZPoly& p);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b);

ZPoly derivative(const ZPoly& p);

/// Sign of p(x) for rational x.
int sign_at(const ZPoly& p, const Rational& x);

/// Sign of p at +inf (+1) or -inf (-1).
int sign_at_infinity(const ZPoly& p, int direction);

QPoly to_qpoly(const ZPoly& p);

}  // namespace dsop::detail

namespace dsop::detail {

/// True when a and b are certainly coprime over Q: their gcd modulo some
/// prime not dividing either leading coefficient is a constant. A false
/// result proves nothing.
bool coprime_modular(const ZPoly& a, const ZPoly& b);

}  // namespace dsop::detail
