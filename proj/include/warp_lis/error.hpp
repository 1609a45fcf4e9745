#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace warp_lis {

enum class Errc {
  malformed_number,
  empty_series,
  matrix_dimension_mismatch,
  out_of_range,
  unsupported_pair,
  unsupported_query,
  oracle_inconsistency,
  series_too_short,
  invalid_argument,
  io_error,
  invariant_violation,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::malformed_number: return "malformed-number";
    case Errc::empty_series: return "empty-series";
    case Errc::matrix_dimension_mismatch: return "matrix-dimension-mismatch";
    case Errc::out_of_range: return "out-of-range";
    case Errc::unsupported_pair: return "unsupported-pair";
    case Errc::unsupported_query: return "unsupported-query";
    case Errc::oracle_inconsistency: return "oracle-inconsistency";
    case Errc::series_too_short: return "series-too-short";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::io_error: return "io-error";
    case Errc::invariant_violation: return "invariant-violation";
  }
  return "unknown";
}

/// Library-wide exception; `code()` is stable and machine-readable.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace warp_lis
