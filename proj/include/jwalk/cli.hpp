#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "jwalk/johnson.hpp"

namespace jwalk::cli {

enum class Command { Simulate, SweepGamma, CriticalGamma, Spectrum, Verify, AnalyzePt };
enum class Format { Csv, Svg };

struct RunConfig {
  Command command = Command::Simulate;
  int n = 0;
  int k = 0;
  std::optional<double> gamma;
  std::optional<double> t_max;
  std::optional<std::size_t> steps;
  std::optional<double> gamma_min;
  std::optional<double> gamma_max;
  std::size_t points = 101;
  std::string output;  // empty: stdout
  Format format = Format::Csv;
  std::size_t cap = kDefaultVertexCap;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Deviation above which `verify` reports failure.
inline constexpr double kVerifyThreshold = 1e-8;

// Throws UsageError for anything that would violate a lower-level precondition.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
void validate(const RunConfig& config);

// Runs one validated command, writing results to `out` (or config.output).
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full entry point: parse, validate, dispatch. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jwalk::cli
