#pragma once

// Command dispatch behind the slidecam executable. Kept in the library so the
// commands can be driven from tests without spawning processes.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace slidecam {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitInfeasible = 2,  // also: solution leaves crosses uncovered, bound violated
  kExitLimit = 3,
};

struct RunConfig {
  std::string command;        // validate | pixelate | solve | generate | verify | bounds | export
  std::string input = "-";    // polygon file, "-" for stdin
  std::string mode = "msc";   // msc | mhsc | mvsc | custom
  std::string custom;         // JSON file with "crosses", "orientations", "guards"
  std::string algo = "exact"; // exact | dp | bg | greedy | path
  std::uint64_t seed = 0;
  std::size_t cap = 64;
  std::size_t width_max = 20;
  double net_constant = 4.0;
  double round_constant = 4.0;
  std::string out;            // main artifact; stdout when empty
  std::string render;         // SVG path
  std::string solution;       // verify: solution JSON file
  std::string shape = "comb"; // generate / bounds sweep
  std::size_t k = 3;
  std::size_t count = 0;      // bounds: sweep size; 0 checks the input polygon
  std::size_t threads = 1;
  std::string format = "instance";  // export: instance | td | td-lifted
};

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace slidecam
