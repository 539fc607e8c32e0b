#include "fusionbench/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace fusionbench {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double round12(double v) {
    double r = std::strtod(format_number(v).c_str(), nullptr);
    return r == 0.0 ? 0.0 : r;  // drop negative zero
}

}  // namespace fusionbench
