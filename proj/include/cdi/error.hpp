#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdi {

enum class Errc {
  invalid_rank,
  rank_mismatch,
  inadmissible_partition,
  unsupported_type,
  invalid_argument,
  parse_error,
  resource_limit,
  empty_sum,
  no_leading_term,
  unknown_table,
  fixture_error,
  arithmetic_overflow,
};

std::string_view to_string(Errc code);

/// Every failure the library reports carries one of the codes above; callers
/// that care (the CLI maps resource_limit to a skipped row) switch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cdi
