#pragma once

#include <string>

namespace fusionbench {

// 12 significant digits; the one numeric text format used everywhere.
std::string format_number(double v);

// Rounds to 12 significant digits so canonical output is a fixed point.
double round12(double v);

}  // namespace fusionbench
