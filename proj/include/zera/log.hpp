#pragma once

#include <functional>
#include <string>

namespace zera::log {

using Sink = std::function<void(const std::string&)>;

// Warnings go to stderr by default. Tests install a capturing sink.
void warn(const std::string& message);
void set_warning_sink(Sink sink);   // empty sink restores the default
Sink warning_sink();

}  // namespace zera::log
