#pragma once

#include <string_view>
#include <vector>

#include "lsb/monomial_ideal.hpp"
#include "lsb/polynomial.hpp"

namespace lsb {

/// Grammar: sums and differences of products of factors; a factor is a
/// rational literal (`3`, `-3/2`), a variable of `ring`, or a parenthesized
/// expression, optionally raised to a non-negative integer power with `^`.
/// Multiplication must be written with `*`. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// Comma-separated generator list.
std::vector<Polynomial> parse_ideal(std::string_view text, const Ring& ring);

/// Comma-separated list of monomials (coefficients are ignored).
MonomialIdeal parse_monomial_ideal(std::string_view text, const Ring& ring);

}  // namespace lsb
