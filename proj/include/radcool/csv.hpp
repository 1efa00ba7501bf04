#ifndef RADCOOL_CSV_HPP
#define RADCOOL_CSV_HPP

#include <cstdio>
#include <string>

namespace radcool {

// CSV contract: 9 significant digits for floating point.
inline std::string csv_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

} // namespace radcool

#endif // RADCOOL_CSV_HPP
