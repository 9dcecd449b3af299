#pragma once

#include <stdexcept>
#include <string>

namespace leech {

enum class Errc {
  dimension_mismatch,
  composition_not_zero,
  not_composable,
  x_must_be_positive,
  action_violates_congruence,
  wrong_side,
  not_ordinary,
  not_symmetric,
  spot_out_of_range,
  invalid_argument,
  parse_error,
};

/// Library exception; carries a machine-checkable error code.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace leech
