#include "rgglab/diagnostics.hpp"

#include <iostream>
#include <mutex>

namespace rgglab {

namespace {

std::mutex& handler_mutex() {
    static std::mutex m;
    return m;
}

WarningHandler& handler() {
    static WarningHandler h = [](std::string_view msg) { std::cerr << "rgglab: warning: " << msg << '\n'; };
    return h;
}

}  // namespace

WarningHandler set_warning_handler(WarningHandler h) {
    std::lock_guard lock(handler_mutex());
    std::swap(handler(), h);
    return h;
}

void warn(std::string_view message) {
    std::lock_guard lock(handler_mutex());
    if (handler()) handler()(message);
}

}  // namespace rgglab
