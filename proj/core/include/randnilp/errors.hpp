#pragma once

#include <stdexcept>
#include <string>

namespace randnilp {

enum class Errc {
  invalid_dimension,
  index_out_of_range,
  dimension_mismatch,
  invalid_arguments,
  conditions_not_met,
  unsupported_size,
  parse_error,
  io_error,
  internal_inconsistency,
};

const char* to_string(Errc code) noexcept;

// All library failures are reported through this type; code() lets callers
// (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace randnilp
