#pragma once

#include <stdexcept>
#include <string>

namespace fusebench {

// Exit-code bearing error categories used by the command layer.
// Precondition violations inside library functions throw std::invalid_argument.

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingArtifactError : public std::runtime_error {
 public:
  explicit MissingArtifactError(const std::string& path, const std::string& hint = {})
      : std::runtime_error("missing artifact: " + path + (hint.empty() ? "" : " (" + hint + ")")),
        path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fusebench
