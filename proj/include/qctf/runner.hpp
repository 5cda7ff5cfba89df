#pragma once

// Experiment runner behind the qctf command-line tool.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qctf/laplace.hpp"
#include "qctf/oracle.hpp"

namespace qctf {

enum ExitCode : int {
  kExitOk = 0,
  kExitToleranceBreach = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

/// Configuration problem; the message starts with the offending flag.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string model = "heisenberg";  // heisenberg | xxz | ising | random | file
  int sites = 2;
  double j = 1.0;
  double delta = 1.0;
  double h = 0.0;
  bool periodic = false;
  std::size_t dim = 0;       // random model: total dimension
  std::size_t n = 2;         // random model: dimension of M
  std::string system_file;   // file model
  std::string initial;       // empty: model default
  std::vector<int> subsystem{0};
  std::string mbasis = "computational";  // computational | hadamard | random[(seed=S)]
  TimeGrid grid{0.0, 10.0, 199};
  std::vector<std::string> methods;  // empty: every method valid for the subsystem
  std::string out;                   // empty: table on stdout
  std::string format = "csv";        // csv | json
  std::uint64_t seed = 1;
  double merge_tol = 1e-9;
  double prune_tol = 1e-14;
  double check_tol = 1e-8;
  std::string spectrum_out;  // prefix for <prefix>.<method>.txt
};

struct RunReport {
  int exit_code = kExitOk;
  double max_deviation = 0.0;
  std::vector<std::string> methods;
  std::size_t samples = 0;
};

/// Builds the system, evaluates every selected method on the grid and writes
/// the artifacts. Table output goes to `out` when no path is configured; the
/// summary goes to `log`. Throws ConfigError or IoError.
RunReport run(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Same, mapping exceptions to exit codes and printing them to `log`.
int run_main(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Spectrum text: "# omega re im" header, one "omega re im" line per pole in
/// ascending frequency, then "total re im".
std::string spectrum_text(const PoleResidueFunction& f);
void spectrum_report(const PoleResidueFunction& f, const std::string& path);

/// M basis from a descriptor; columns are the basis kets.
ComplexMatrix make_mbasis(const std::string& descriptor, std::size_t n, std::uint64_t default_seed);

}  // namespace qctf
