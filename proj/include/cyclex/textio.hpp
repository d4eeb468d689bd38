#ifndef CYCLEX_TEXTIO_HPP
#define CYCLEX_TEXTIO_HPP

#include <string>
#include <string_view>

#include "cyclex/poly.hpp"

namespace cyclex {

/// Parses "1+x^2", "2x+2x^2+2", "x", "0", ... or the comma form "1,0,1"
/// (ascending coefficients). Omitted coefficient = 1; repeated exponents are
/// summed; coefficients are field-element encodings 0..q-1.
Poly parse_poly(const Field& F, std::string_view text);

/// Sorted symbolic form, ascending exponents: "0", "1+x", "2+2x+2x^2", "x^3".
std::string format_poly(const Poly& f);

/// Field designation: "q=p^m", "p^m", or a plain prime power like "9".
Field parse_field(std::string_view text,
                  std::uint64_t size_limit = kDefaultFieldSizeLimit);

} // namespace cyclex

#endif
