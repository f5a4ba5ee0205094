#pragma once

#include <string>

namespace gsu {

// 17 significant digits; round-trips through strtod.
std::string format_double(double x);

// Compact form for labels ("%g").
std::string format_short(double x);

}  // namespace gsu
