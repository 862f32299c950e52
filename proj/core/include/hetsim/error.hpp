#pragma once

#include <stdexcept>
#include <string>

namespace hetsim {

/// Invalid scenario parameter. `key()` names the offending setting when known.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg, std::string key = {}, int line = 0)
      : std::runtime_error(msg), key_(std::move(key)), line_(line) {}

  const std::string& key() const noexcept { return key_; }
  int line() const noexcept { return line_; }

 private:
  std::string key_;
  int line_;
};

/// A caller broke an operation's precondition (e.g. debiting a dead node).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hetsim
