#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace srg::cli {

enum class Command { spectrum, eigenbasis, trees, permutohedra, mahonian, induced, quotient, independence, scan };
enum class Format { json, csv, text };

/// Exit statuses.
constexpr int kPass = 0;
constexpr int kDiscrepancy = 1;
constexpr int kUsage = 2;

struct RunConfig {
  Command command = Command::spectrum;
  std::optional<int> d;
  std::optional<std::pair<int, int>> d_range;
  std::optional<std::pair<int, int>> n_range;  // a single --n is stored as n..n
  std::optional<std::string> pi;                // induced: one permutation
  Format format = Format::json;
  std::size_t vertex_cap = 0;  // 0: default (environment or built-in)
  bool exact_only = false;
  int jobs = 0;  // 0: OpenMP default
};

std::optional<Command> parse_command(const std::string& s);
std::string command_name(Command c);
/// "a..b" or "a"; nullopt when malformed or empty.
std::optional<std::pair<int, int>> parse_range(const std::string& s);

/// Runs one command, writing the report to out and diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace srg::cli
