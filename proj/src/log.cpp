#include <opdyn/log.hpp>

#include <cstdlib>
#include <iostream>

namespace opdyn::log {

Level level() {
  static const Level lvl = [] {
    const char* env = std::getenv("OPINION_SIM_LOG");
    if (env == nullptr) return Level::off;
    const std::string v(env);
    if (v == "debug") return Level::debug;
    if (v == "info") return Level::info;
    return Level::off;
  }();
  return lvl;
}

void info(const std::string& msg) {
  if (level() >= Level::info) std::cerr << "[opdyn] " << msg << '\n';
}

void debug(const std::string& msg) {
  if (level() >= Level::debug) std::cerr << "[opdyn:debug] " << msg << '\n';
}

}  // namespace opdyn::log
