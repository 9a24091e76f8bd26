#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zsp {

enum class ErrorKind {
  rank_too_small,
  rank_too_large,
  modulus_not_power_of_two,
  modulus_too_small,
  invalid_core_spec,
  enumeration_too_large,
  inconsistent_presentation,
  table_too_large,
  coset_limit_exceeded,
  incomplete_table,
  precondition_violated,
  parse_error,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; `kind()` is what
// callers dispatch on (the CLI maps it onto exit codes).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zsp
