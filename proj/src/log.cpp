#include "zera/log.hpp"

#include <cstdio>
#include <mutex>

namespace zera::log {

namespace {
std::mutex g_mutex;
Sink g_sink;
}  // namespace

void warn(const std::string& message) {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (g_sink) {
        g_sink(message);
    } else {
        std::fprintf(stderr, "warning: %s\n", message.c_str());
    }
}

void set_warning_sink(Sink sink) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_sink = std::move(sink);
}

Sink warning_sink() {
    std::lock_guard<std::mutex> lock(g_mutex);
    return g_sink;
}

}  // namespace zera::log
