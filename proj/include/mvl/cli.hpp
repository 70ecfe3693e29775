#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mvl/formula.hpp"

namespace mvl::cli {

enum class Format { Human, Records, Dot };

struct RunConfig {
  std::string command;
  std::string logic;                 // --logic
  std::string standard_class;        // --class
  std::optional<int> godel;          // --godel N
  std::optional<int> luk;            // --luk N
  std::optional<int> n;              // --n
  std::optional<int> i;              // --i
  std::vector<int> primes;           // --primes, classify on the Łukasiewicz side
  int max_components = 3;
  std::uint64_t budget = 100'000'000;
  unsigned workers = 1;
  Format format = Format::Human;
  std::string file;                  // --file
  std::vector<std::string> inputs;   // positional arguments
  bool check = false;                // translate: round-trip check
};

// Exit statuses.
inline constexpr int kAllHold = 0;
inline constexpr int kSomeFail = 1;
inline constexpr int kError = 2;

struct Query {
  std::string text;
  FormulaSet gamma;
  Formula phi = bot();
  std::string logic;  // empty when the line names none
};

// `GAMMA |- PHI` optionally followed by `@ LOGIC`. Throws InputError.
Query parse_query(std::string_view line);

// Non-blank lines of a query file with `#` comments removed.
std::vector<std::string> query_lines(std::istream& in);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses the command line and runs it. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvl::cli
