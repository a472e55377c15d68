#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bubbleton {

enum class Errc {
  not_in_su2,
  singular_input,
  zero_argument,
  zero_lambda,
  invalid_lobe_number,
  duplicate_lobe,
  pole_at_lambda,
  unimodular_alpha,
  extrapolation_diverged,
  planarity_violated,
  irregular_curve,
  invalid_argument,
  io_failure,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bubbleton
