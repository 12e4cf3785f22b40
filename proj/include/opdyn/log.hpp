#pragma once

#include <string>

namespace opdyn::log {

enum class Level { off = 0, info = 1, debug = 2 };

// Verbosity is read once from the OPINION_SIM_LOG environment variable
// ("off", "info" or "debug"; unset means off). Messages go to stderr so
// they never mix with data written to stdout or output files.
Level level();
void info(const std::string& msg);
void debug(const std::string& msg);

}  // namespace opdyn::log
