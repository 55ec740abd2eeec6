#pragma once

#include <string>

namespace swarmsim {

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_double(double v);

}  // namespace swarmsim
