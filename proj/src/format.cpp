#include "swarmsim/format.hpp"

#include <array>
#include <charconv>

namespace swarmsim {

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

}  // namespace swarmsim
