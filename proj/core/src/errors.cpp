#include "randnilp/errors.hpp"

namespace randnilp {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_dimension: return "invalid-dimension";
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::invalid_arguments: return "invalid-arguments";
    case Errc::conditions_not_met: return "conditions-not-met";
    case Errc::unsupported_size: return "unsupported-size";
    case Errc::parse_error: return "parse-error";
    case Errc::io_error: return "io-error";
    case Errc::internal_inconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace randnilp
