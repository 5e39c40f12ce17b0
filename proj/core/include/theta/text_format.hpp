#pragma once

#include <string>
#include <string_view>

#include "theta/diff_operator.hpp"

namespace theta {

// Canonical text forms used by the CLI payloads and the kernel cache.
//
//   rational    "p" or "p/q"
//   polynomial  "0" or  c*x[l,j]^e*x[l',j'] + c'*... - ...   (descending grlex,
//               coefficient always written, exponent 1 omitted)
//   operator    same, each term followed by derivative factors d[l,j]^e
//
// Parsing accepts any term order, repeated terms, optional spaces and
// explicit ^1 exponents; formatting always emits the canonical form.

std::string format_polynomial(const Polynomial& p);
std::string format_operator(const DiffOperator& d);

Polynomial parse_polynomial(Shape shape, std::string_view text);
DiffOperator parse_operator(Shape shape, std::string_view text);

}  // namespace theta
