#pragma once

#include <string>
#include <string_view>

namespace lmarkov {

/// Shortest-form "%.17g" rendering; round-trips every finite double.
std::string format_real(double value);

/// Quotes a CSV field when it contains a comma, quote, or newline.
std::string csv_field(std::string_view text);

}  // namespace lmarkov
