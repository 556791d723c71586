#pragma once

#include <string>
#include <string_view>

#include "qcongr/rat_func.hpp"

namespace qcongr {

// Coefficient lists are written in ascending powers of q, comma-separated,
// e.g. "1,-1,1" for q^2 - q + 1. The zero polynomial is "0". Rational
// coefficients use "a/b". A rational function is "NUM / DEN", or just NUM
// when the denominator is 1.

std::string to_coeff_list(const IntPoly& p);
std::string to_coeff_list(const RatPoly& p);
std::string to_coeff_list(const RatFunc& f);

/// Throws std::invalid_argument on malformed input or non-integer entries.
IntPoly parse_int_poly(std::string_view text);
RatPoly parse_rat_poly(std::string_view text);
RatFunc parse_rat_func(std::string_view text);

std::string to_string(const Rational& r);

}  // namespace qcongr
