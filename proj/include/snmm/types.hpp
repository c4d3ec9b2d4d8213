#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace snmm {

// Error taxonomy; the CLI maps these to exit codes (see README).
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct integrity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Minimal stderr logger. Warnings are part of several contracts (Gamma
// repair, zero-norm atoms, dictionary count mismatches), so keep a hook that
// tests can silence.
enum class LogLevel { quiet = 0, warn = 1, info = 2 };

inline LogLevel& log_level() {
  static LogLevel lvl = LogLevel::warn;
  return lvl;
}
inline void set_log_level(LogLevel lvl) { log_level() = lvl; }
inline void log_warn(const std::string& msg) {
  if (log_level() >= LogLevel::warn) std::fprintf(stderr, "[warn] %s\n", msg.c_str());
}
inline void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::info) std::fprintf(stderr, "[info] %s\n", msg.c_str());
}

}  // namespace snmm
