#pragma once

#include "qss/certifier.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <variant>
#include <string>
#include <vector>

namespace qss::cli {

enum class Command { Certify, Lines, Charpoly, Sweep, Oracle };
enum class Format { Text, Json, Csv };

struct RunConfig {
  Command command = Command::Certify;
  int n = 0;
  std::vector<int> degrees;
  std::optional<int> j;
  int nMax = 20;
  int degMax = 5;
  int rMax = 3;
  int samples = 20;
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::Text;
  bool showMatrix = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitInternal = 2;

/// Parses argv into a config. On failure or --help, writes to `err`/`out`
/// and returns the exit code to use instead.
std::variant<RunConfig, int> parseArgs(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes one command; returns 0 (report produced), 1 (invalid input) or
/// 2 (internal inconsistency).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Admissible sweep cases in lexicographic (n, degrees) order: 3 <= n <= nMax,
/// nondecreasing degrees in [2, degMax], 1 <= r <= rMax, Fano.
std::vector<CompleteIntersection> sweepCases(int nMax, int degMax, int rMax);

}  // namespace qss::cli
