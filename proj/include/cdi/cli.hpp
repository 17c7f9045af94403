#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cdi/lmap.hpp"
#include "cdi/rootsys.hpp"

namespace cdi::cli {

enum class Command { orbits, lmap, table, verify };
enum class Format { text, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitSkipped = 2;
inline constexpr int kExitUsage = 3;

struct RunConfig {
  Command command = Command::table;
  CartanType type;
  std::optional<std::string> orbit;    // partition, optional _1/_2
  std::optional<std::string> diagram;  // digits or comma list
  std::optional<Strategy> strategy;
  std::optional<std::size_t> cap;  // term cap; ORBIT_LMAP_CAP when unset
  unsigned threads = 1;
  Format format = Format::text;
  std::optional<std::string> out;
  bool timing = false;  // real milliseconds in the "ms" field; 0 otherwise
};

/// Throws Error(invalid_argument) on a bad combination.
void validate(const RunConfig& config);

/// Executes the command and writes the rendered output to `out` (or the
/// --out file). Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. `--help` prints usage and returns 0.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Orbits of a table run: fixture rows first (when a fixture exists), then
/// any remaining enumerated orbits.
std::vector<Orbit> table_orbits(CartanType type);

}  // namespace cdi::cli
