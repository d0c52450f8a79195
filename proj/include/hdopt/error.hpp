// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace hdopt {

enum class Errc {
  invalid_argument = 1,
  dimension_mismatch,
  not_spd,
  no_convergence,
  bad_schedule,
  parse_error,
  diverged,
  io_error,
};

/// Library-wide exception type. Carries a machine-readable code and, for
/// iterative failures, the last numeric estimate before giving up.
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(Errc code, std::string message, double last_estimate)
      : std::runtime_error(std::move(message)), code_(code),
        last_estimate_(last_estimate) {}

  Errc code() const noexcept { return code_; }
  std::optional<double> last_estimate() const noexcept { return last_estimate_; }

private:
  Errc code_;
  std::optional<double> last_estimate_;
};

} // namespace hdopt
