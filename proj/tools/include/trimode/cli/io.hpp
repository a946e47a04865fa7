#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "trimode/errors.hpp"
#include "trimode/model.hpp"

namespace trimode::cli {

/// Malformed or incomplete input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Reference values a fixture may carry for the verify command.
struct ExpectedPurity {
  int kept = 1;
  std::optional<double> L;
  std::optional<double> w;
  std::optional<double> purity;
};

struct SystemInput {
  OscillatorSystem system;
  std::optional<ExpectedPurity> expected;
};

/// {"masses": [..3], "frequencies": [..3], "couplings": {"d12", "d13", "d23"},
///  "hbar": optional, "expected": optional}. Missing couplings are zero.
/// Validates the physical domain as well, so the result is ready for use.
SystemInput parse_system(std::string_view text);

SystemInput read_system_file(const std::string& path);

}  // namespace trimode::cli
