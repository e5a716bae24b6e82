#pragma once

#include <chrono>
#include <iostream>
#include <mutex>
#include <string>

#include <json.hpp>

namespace l3e {

// Structured JSON-lines logging to stderr; stdout stays data-only.
inline void log_event(const std::string& level, const std::string& stage,
                      const std::string& msg,
                      double elapsed_s = -1.0) {
  static std::mutex mu;
  nlohmann::json j;
  j["level"] = level;
  j["stage"] = stage;
  j["msg"] = msg;
  if (elapsed_s >= 0.0) j["elapsed_s"] = elapsed_s;
  std::lock_guard<std::mutex> lock(mu);
  std::cerr << j.dump() << "\n";
}

class StageTimer {
 public:
  explicit StageTimer(std::string stage) : stage_(std::move(stage)) {
    start_ = std::chrono::steady_clock::now();
  }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }
  void done(const std::string& msg) { log_event("info", stage_, msg, seconds()); }

 private:
  std::string stage_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace l3e
