#pragma once

#include <string>

namespace bfaelm {

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace bfaelm
