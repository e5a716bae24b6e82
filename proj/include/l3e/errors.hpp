#pragma once

#include <stdexcept>
#include <string>

namespace l3e {

// Exit-code families used by the CLI: config -> 2, environment -> 3, data -> 4.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EnvironmentError : std::runtime_error {
  explicit EnvironmentError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by ICP when every candidate pair fails the distance gate.
struct NoCorrespondencesError : std::runtime_error {
  explicit NoCorrespondencesError(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace l3e
