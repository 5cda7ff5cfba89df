#include "qctf/runner.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <filesystem>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <regex>
#include <set>

#include "qctf/entanglement.hpp"
#include "qctf/models.hpp"
#include "qctf/random.hpp"
#include "qctf/system_io.hpp"
#include "qctf/zdomain.hpp"

namespace qctf {

namespace {

const std::vector<std::string> kMethodOrder = {"eigenmode", "laurent", "oracle"};

[[noreturn]] void config_fail(const std::string& flag, const std::string& why) { throw ConfigError(flag + ": " + why); }

struct System {
  ComplexMatrix hamiltonian;
  StateVector initial;
  Bipartition part;
};

System build_system(const RunConfig& cfg) {
  System sys;
  const std::string& m = cfg.model;
  try {
    if (m == "heisenberg" || m == "xxz" || m == "ising") {
      if (cfg.sites < kMinSites || cfg.sites > kMaxSites) {
        config_fail("--sites", "must be in [" + std::to_string(kMinSites) + ", " + std::to_string(kMaxSites) + "]");
      }
      for (int s : cfg.subsystem)
        if (s < 0 || s >= cfg.sites) config_fail("--subsystem", "site " + std::to_string(s) + " outside the chain");
      if (cfg.subsystem.empty() || static_cast<int>(cfg.subsystem.size()) >= cfg.sites) {
        config_fail("--subsystem", "must name at least one and fewer than all sites");
      }
      const auto h = m == "ising" ? build_transverse_ising(cfg.sites, cfg.j, cfg.h, cfg.periodic)
                                  : build_heisenberg_xxz(cfg.sites, cfg.j, cfg.delta, cfg.periodic);
      sys.part = chain_bipartition(cfg.sites, cfg.subsystem);
      sys.hamiltonian = permute_basis(h, m_major_permutation(cfg.sites, cfg.subsystem));
      sys.initial = make_initial_state(cfg.initial.empty() ? "neel" : cfg.initial, sys.part);
    } else if (m == "random") {
      if (cfg.dim < 2) config_fail("--dim", "random model needs a dimension of at least 2");
      if (cfg.n < 2 || cfg.dim % cfg.n != 0) config_fail("--n", "must be at least 2 and divide --dim");
      sys.part = Bipartition{cfg.n, cfg.dim / cfg.n, {}};
      sys.hamiltonian = build_random_hermitian(cfg.dim, cfg.seed);
      sys.initial = make_initial_state(
          cfg.initial.empty() ? "random(seed=" + std::to_string(cfg.seed + 1) + ")" : cfg.initial, sys.part);
    } else if (m == "file") {
      if (cfg.system_file.empty()) config_fail("--system-file", "required for --model file");
      if (!std::filesystem::exists(cfg.system_file)) throw IoError(cfg.system_file + ": cannot open file");
      auto loaded = load_system(cfg.system_file);
      sys.hamiltonian = std::move(loaded.hamiltonian);
      sys.part = loaded.part;
      sys.initial = cfg.initial.empty() ? std::move(loaded.initial) : make_initial_state(cfg.initial, sys.part);
    } else {
      config_fail("--model", "unknown model '" + m + "' (heisenberg, xxz, ising, random, file)");
    }
  } catch (const SystemFileError& e) {
    config_fail("--system-file", e.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    config_fail(m == "file" ? "--initial" : "--model", e.what());
  }
  return sys;
}

std::optional<std::uint64_t> parse_seed_arg(const std::string& s) {
  static const std::regex re(R"(\s*(?:seed\s*=\s*)?(\d+)\s*)");
  std::smatch mt;
  if (!std::regex_match(s, mt, re)) return std::nullopt;
  return std::stoull(mt[1].str());
}

std::vector<std::string> resolve_methods(const RunConfig& cfg, std::size_t n) {
  if (cfg.methods.empty()) {
    if (n == 2) return kMethodOrder;
    return {"laurent", "oracle"};
  }
  std::set<std::string> chosen;
  for (const auto& m : cfg.methods) {
    if (std::find(kMethodOrder.begin(), kMethodOrder.end(), m) == kMethodOrder.end()) {
      config_fail("--methods", "unknown method '" + m + "' (eigenmode, laurent, oracle)");
    }
    chosen.insert(m);
  }
  if (chosen.count("eigenmode") && n != 2) config_fail("--methods", "eigenmode requires a two-level subsystem");
  std::vector<std::string> out;
  for (const auto& m : kMethodOrder)
    if (chosen.count(m)) out.push_back(m);
  return out;
}

void validate_config(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json") config_fail("--format", "must be csv or json");
  if (!std::isfinite(cfg.grid.t0) || !std::isfinite(cfg.grid.t1)) config_fail("--t0/--t1", "must be finite");
  if (cfg.grid.t0 > cfg.grid.t1) config_fail("--t1", "must not be smaller than --t0");
  if (cfg.grid.steps < 1) config_fail("--steps", "must be at least 1");
  if (!(cfg.merge_tol >= 0.0)) config_fail("--merge-tol", "must be non-negative");
  if (!(cfg.prune_tol >= 0.0)) config_fail("--prune-tol", "must be non-negative");
  if (!(cfg.check_tol >= 0.0)) config_fail("--check-tol", "must be non-negative");
}

std::string fmt(double v) { return format_double(v); }

void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  try {
    write_file_atomic(path, text);
  } catch (const std::exception& e) {
    throw IoError(e.what());
  }
}

}  // namespace

ComplexMatrix make_mbasis(const std::string& descriptor, std::size_t n, std::uint64_t default_seed) {
  if (descriptor == "computational") return ComplexMatrix::identity(n);
  if (descriptor == "hadamard") {
    ComplexMatrix b(n, n);
    if ((n & (n - 1)) == 0) {
      // Sylvester construction: entry sign is (-1)^popcount(i & j).
      const double norm = 1.0 / std::sqrt(static_cast<double>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = (std::popcount(i & j) % 2 ? -norm : norm);
    } else {
      const double norm = 1.0 / std::sqrt(static_cast<double>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          b(i, j) = std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>((i * j) % n) / static_cast<double>(n));
    }
    return b;
  }
  if (descriptor == "random") return random_unitary(n, default_seed);
  static const std::regex re(R"(random\((.*)\))");
  std::smatch mt;
  if (std::regex_match(descriptor, mt, re)) {
    const auto seed = parse_seed_arg(mt[1].str());
    if (!seed) config_fail("--mbasis", "expected random(seed=N), got '" + descriptor + "'");
    return random_unitary(n, *seed);
  }
  config_fail("--mbasis", "unknown basis '" + descriptor + "' (computational, hadamard, random(seed=N))");
}

std::string spectrum_text(const PoleResidueFunction& f) {
  std::string out = "# omega re im\n";
  for (const auto& t : f.terms()) out += fmt(t.omega) + " " + fmt(t.residue.real()) + " " + fmt(t.residue.imag()) + "\n";
  const cplx total = f.total();
  out += "total " + fmt(total.real()) + " " + fmt(total.imag()) + "\n";
  return out;
}

void spectrum_report(const PoleResidueFunction& f, const std::string& path) {
  try {
    write_file_atomic(path, spectrum_text(f));
  } catch (const std::exception& e) {
    throw IoError(e.what());
  }
}

RunReport run(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  validate_config(cfg);
  const System sys = build_system(cfg);
  const auto methods = resolve_methods(cfg, sys.part.n);
  const ComplexMatrix mbasis = make_mbasis(cfg.mbasis, sys.part.n, cfg.seed);
  const auto ts = cfg.grid.samples();

  QctfOptions opt;
  opt.policy.merge_rel = cfg.merge_tol;
  opt.prune = cfg.prune_tol;
  const bool use_eigen = std::count(methods.begin(), methods.end(), "eigenmode") > 0;
  const bool use_laurent = std::count(methods.begin(), methods.end(), "laurent") > 0;
  const bool use_oracle = std::count(methods.begin(), methods.end(), "oracle") > 0;

  const auto eig = hermitian_eigendecompose(sys.hamiltonian);

  std::map<std::string, PoleResidueFunction> spectra;
  if (use_eigen) spectra["eigenmode"] = qctf_measure_eigenmode(eig, sys.initial, sys.part, mbasis, opt);
  if (use_laurent) {
    if (sys.part.n == 2) {
      spectra["laurent"] = residue_entanglement(qctf_offdiag(eig, sys.initial, sys.part, mbasis, opt), opt.policy);
    } else {
      const auto labeling = PairLabeling::lexicographic(sys.part.n);
      spectra["laurent"] =
          residue_entanglement_multi(qctf_paired(eig, sys.initial, sys.part, mbasis, labeling, opt), opt.policy);
    }
  }
  std::vector<OracleSample> oracle;
  if (use_oracle) oracle = oracle_measure(eig, sys.initial, sys.part, cfg.grid);

  // Per-sample values of each enabled method.
  std::map<std::string, std::vector<cplx>> values;
  for (const auto& [name, f] : spectra) values[name] = eval_time(f, ts);
  if (use_oracle) {
    auto& v = values["oracle"];
    for (const auto& s : oracle) v.push_back(s.q);
  }

  std::map<std::string, double> pair_dev;
  std::vector<double> dev_row(ts.size(), 0.0);
  for (std::size_t a = 0; a < methods.size(); ++a)
    for (std::size_t b = a + 1; b < methods.size(); ++b) {
      const auto& va = values[methods[a]];
      const auto& vb = values[methods[b]];
      double worst = 0.0;
      for (std::size_t i = 0; i < ts.size(); ++i) {
        const double dv = std::abs(va[i] - vb[i]);
        worst = std::max(worst, dv);
        dev_row[i] = std::max(dev_row[i], dv);
      }
      pair_dev[methods[a] + "-" + methods[b]] = worst;
    }
  const bool has_pairs = methods.size() > 1;

  // Cell text per column; empty when the method is disabled.
  auto row_cells = [&](std::size_t i) {
    std::array<std::string, 6> cells;
    cells[0] = fmt(ts[i]);
    const char* names[] = {"eigenmode", "laurent", "oracle"};
    for (int c = 0; c < 3; ++c)
      if (auto it = values.find(names[c]); it != values.end()) cells[c + 1] = fmt(it->second[i].real());
    if (use_oracle) cells[4] = fmt(oracle[i].renyi2);
    if (has_pairs) cells[5] = fmt(dev_row[i]);
    return cells;
  };

  std::string table;
  if (cfg.format == "csv") {
    table = "t,q_eigenmode,q_laurent,q_oracle,s2_oracle,dev_max\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto cells = row_cells(i);
      for (std::size_t c = 0; c < cells.size(); ++c) table += (c ? "," : "") + cells[c];
      table += '\n';
    }
  } else {
    table = "{\n  \"columns\": [\"t\", \"q_eigenmode\", \"q_laurent\", \"q_oracle\", \"s2_oracle\", \"dev_max\"],\n";
    table += "  \"rows\": [\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto cells = row_cells(i);
      table += "    [";
      for (std::size_t c = 0; c < cells.size(); ++c) table += (c ? ", " : "") + (cells[c].empty() ? "null" : cells[c]);
      table += i + 1 < ts.size() ? "],\n" : "]\n";
    }
    table += "  ]\n}\n";
  }
  emit(cfg.out, table, out);

  if (!cfg.spectrum_out.empty())
    for (const auto& [name, f] : spectra) spectrum_report(f, cfg.spectrum_out + "." + name + ".txt");

  RunReport report;
  report.methods = methods;
  report.samples = ts.size();
  for (const auto& [k, v] : pair_dev) report.max_deviation = std::max(report.max_deviation, v);
  report.exit_code = has_pairs && report.max_deviation > cfg.check_tol ? kExitToleranceBreach : kExitOk;

  std::string summary;
  summary += "dimension " + std::to_string(sys.part.total()) + " (n=" + std::to_string(sys.part.n) +
             ", d=" + std::to_string(sys.part.d) + ")\n";
  summary += "samples " + std::to_string(ts.size()) + "\n";
  summary += "methods";
  for (const auto& m : methods) summary += " " + m;
  summary += "\n";
  for (const auto& [name, f] : spectra) summary += "poles " + name + " " + std::to_string(f.size()) + "\n";
  for (const auto& [k, v] : pair_dev) summary += "max_dev " + k + " " + fmt(v) + "\n";
  if (has_pairs) {
    summary += "max_dev " + fmt(report.max_deviation) + " (tolerance " + fmt(cfg.check_tol) + ")\n";
    summary += report.exit_code == kExitOk ? "status ok\n" : "status tolerance-breach\n";
  } else {
    summary += "status ok (single method, no cross-check)\n";
  }
  log << summary;
  if (!cfg.out.empty()) emit(cfg.out + ".summary.txt", summary, out);
  return report;
}

int run_main(const RunConfig& config, std::ostream& out, std::ostream& log) {
  try {
    return run(config, out, log).exit_code;
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    log << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qctf
