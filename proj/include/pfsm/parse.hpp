#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pfsm/scalar.hpp"

namespace pfsm {

/// How decimal literals are read. Auto: a decimal makes the value a Float.
/// Exact: decimals must be dyadic and stay exact. Float: everything demoted.
enum class NumberMode { Auto, Exact, Float };

/// Scalar expressions: integers, p/q, decimals, + - * /, parentheses,
/// sqrt(rational) and root(poly; [lo,hi]).
Scalar parse_scalar(std::string_view text, NumberMode mode = NumberMode::Auto);

/// Polynomial with rational coefficients in a single variable, e.g. "2*x^2-1".
QPoly parse_qpoly(std::string_view text);

/// Splits on commas that are not nested inside parentheses or brackets.
std::vector<std::string> split_top_level(std::string_view text);

/// 0/1 word such as "1,1,0,1,0".
std::vector<int> parse_word(std::string_view text);

}  // namespace pfsm
