#pragma once

#include <string>

#include "ritt/diffpoly.hpp"
#include "ritt/varid.hpp"

namespace ritt {

/// Interchange text format. Terms are joined by " + " / " - " in descending
/// monomial order; a monomial prints as `T_3^2*U_0`; `^1` and a coefficient
/// of 1 are elided; coefficients print as `num/den` with `/1` elided; the
/// zero polynomial prints as `0`. parse_poly inverts to_string exactly.
std::string to_string(const DiffPoly& p, const Ring& ring);
std::string to_string(const Monomial& m, const Ring& ring);

DiffPoly parse_poly(const std::string& text, const Ring& ring);

} // namespace ritt
