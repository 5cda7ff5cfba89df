// qctf: entanglement dynamics of a closed quantum system along the eigenmode,
// Laurent-residue and direct-evolution paths.

#include <iostream>

#include <CLI11.hpp>

#include "qctf/runner.hpp"

int main(int argc, char** argv) {
  qctf::RunConfig cfg;
  CLI::App app{"Entanglement dynamics from the quantum correlation transfer function"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_config("--config", "", "Read options from a TOML/INI file (keys mirror the long flags)");
  app.option_defaults()->always_capture_default();

  app.add_option("--model", cfg.model, "heisenberg | xxz | ising | random | file");
  app.add_option("--sites", cfg.sites, "Chain length");
  app.add_option("--J", cfg.j, "Coupling");
  app.add_option("--delta", cfg.delta, "XXZ anisotropy");
  app.add_option("--h", cfg.h, "Transverse field (ising)");
  app.add_flag("--periodic", cfg.periodic, "Close the chain into a ring");
  app.add_option("--dim", cfg.dim, "Total dimension (random model)");
  app.add_option("--n", cfg.n, "Dimension of subsystem M (random model)");
  app.add_option("--system-file", cfg.system_file, "System JSON file (file model)");
  app.add_option("--initial", cfg.initial, "Initial state descriptor");
  app.add_option("--subsystem", cfg.subsystem, "Chain sites forming M")->delimiter(',');
  app.add_option("--mbasis", cfg.mbasis, "computational | hadamard | random(seed=N)");
  app.add_option("--t0", cfg.grid.t0, "First time point");
  app.add_option("--t1", cfg.grid.t1, "Last time point");
  app.add_option("--steps", cfg.grid.steps, "Number of intervals (steps + 1 samples)");
  app.add_option("--methods", cfg.methods, "Subset of eigenmode,laurent,oracle")->delimiter(',');
  app.add_option("--out", cfg.out, "Table output path (default: stdout)");
  app.add_option("--format", cfg.format, "csv | json");
  app.add_option("--seed", cfg.seed, "Seed for random models, states and bases");
  app.add_option("--merge-tol", cfg.merge_tol, "Relative pole merge tolerance");
  app.add_option("--prune-tol", cfg.prune_tol, "Amplitude-product prune threshold");
  app.add_option("--check-tol", cfg.check_tol, "Cross-method deviation tolerance");
  app.add_option("--spectrum-out", cfg.spectrum_out, "Prefix for <prefix>.<method>.txt pole spectra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qctf::kExitUsage;
  }
  // Summary goes to stderr when the table itself is on stdout.
  return qctf::run_main(cfg, std::cout, cfg.out.empty() ? std::cerr : std::cout);
}
