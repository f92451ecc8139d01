#pragma once

#include <string>

namespace gsss {

/// Shortest decimal form with 17 significant digits; round-trips exactly
/// through strtod.
std::string format_double17(double x);

}  // namespace gsss
