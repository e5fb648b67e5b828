#ifndef KINBOUND_CLI_HPP
#define KINBOUND_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "kinbound/oracle.hpp"

namespace kinbound::cli {

struct StateSpec {
  int n = 0;
  int l = 0;
};

// One run, fully described: defaults, overlaid by a config file, overlaid by
// command-line flags. Model specs are either "name:param,param" against the
// catalog or an expression in p (kinetic) / r (potential).
struct RunConfig {
  std::string command;
  std::string kinetic;
  std::string kinetic2;  // second particle, orbit only
  std::string potential;
  double lambda = 2.0;
  std::vector<StateSpec> states{{0, 0}};
  std::string backend = "auto";  // auto | momentum-grid | oscillator-basis
  oracle::OracleConfig oracle;
  double k_min = 0.05;
  double k_max = 4.0;
  int points = 40;
  std::string out;  // CSV path, empty for none
  std::string root = "unique";
};

// Minimal TOML reader for flat `key = value` files: quoted strings, numbers,
// # comments, section headers skipped.
RunConfig load_config(std::istream& in, RunConfig base);

// "0,0;1,0;0,1" -> three states.
std::vector<StateSpec> parse_states(const std::string& text);

// Entry point used by the binary: parses flags, dispatches the subcommand,
// maps exceptions to exit codes (0 ok, 1 config, 2 solver/oracle,
// 3 invariant failure).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kinbound::cli

#endif
