#pragma once

#include <string>

namespace picksim {

/// Shortest decimal text that round-trips to the same double.
std::string format_real(double value);

/// Fixed-point text with `digits` decimals ("-0.00" is normalised to "0.00").
std::string format_fixed(double value, int digits);

}  // namespace picksim
