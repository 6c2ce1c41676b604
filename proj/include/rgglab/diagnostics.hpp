#pragma once

#include <functional>
#include <string_view>

namespace rgglab {

using WarningHandler = std::function<void(std::string_view)>;

/// Replaces the process-wide warning sink (default: one line on stderr).
/// Returns the previous handler. Pass an empty handler to silence warnings.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(std::string_view message);

}  // namespace rgglab
