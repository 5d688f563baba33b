#pragma once

#include <stdexcept>
#include <string>

namespace hullselect {

// Two masks or vectors that must share a dimension n do not.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Invalid experiment/CLI configuration. `field` names the offending key path
// (e.g. "signal.generator.s") or is empty when the error is positional.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace hullselect
