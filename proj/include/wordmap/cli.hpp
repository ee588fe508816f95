#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "wordmap/certify.hpp"

namespace wordmap {

enum class Command { Polys, Verify, Certify, Witness, Oracle };

enum ExitCode : int { kExitOk = 0, kExitInconclusive = 1, kExitTrivial = 2, kExitInput = 3 };

struct GridRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct RunConfig {
  Command command = Command::Polys;
  std::optional<std::string> word_text;
  std::optional<DCParams> dc;
  std::optional<std::array<GridRange, 4>> grid;  // certify only
  std::optional<Rat> lambda;
  std::optional<Rat> mu;
  std::uint64_t seed = 0;
  int precision_digits = 64;
  int max_attempts = 5;
  int samples = 20;  // oracle
  int threads = 0;   // grid workers; 0 picks the hardware concurrency
  bool json = false;
  bool verbose = false;
};

/// "k,l,m,n" -> DCParams. Throws Error(Syntax).
DCParams parse_dc(const std::string& text);
/// "a:b,c:d,e:f,g:h" (a single "a" means a:a). Throws Error(Syntax).
std::array<GridRange, 4> parse_grid(const std::string& text);

/// Per-tuple seed for grid sweeps, independent of scheduling.
std::uint64_t grid_seed(std::uint64_t seed, const DCParams& p);

/// Executes a validated configuration; returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (with CLI11) and runs; usage errors exit with kExitInput.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace wordmap
