#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rap/cyclo.hpp"

namespace rap {

/**
 * Coefficient literals of the form `1/3*z^2 - z + 2`, where `z` stands for
 * zeta_N and N is supplied separately.  Accepted terms are `RAT`,
 * `RAT*z^K`, `RAT*z`, `z^K` and `z`, joined by `+` or `-`.  Whitespace is
 * ignored.  Errors are reported as ParseError with a column.
 */
Cyclo parse_cyclo(std::string_view text, int root_order);

/// Comma-separated list; columns in errors refer to the whole string.
std::vector<Cyclo> parse_cyclo_list(std::string_view text, int root_order);

/// Inverse of parse_cyclo.  Terms in descending powers of z, e.g.
/// "1/3*z^2 + 1/3".  The element is embedded into root_order first.
std::string format_cyclo(const Cyclo& x, int root_order);

} // namespace rap
