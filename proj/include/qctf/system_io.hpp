#pragma once

// System files: a JSON document
//
//   {
//     "dimension": D,
//     "n": n,
//     "d": d,
//     "hamiltonian": [[[re, im], ...], ...],   // D rows of D pairs, M-major
//     "initial_state": [[re, im], ...]         // D pairs
//   }
//
// Numbers are written as shortest round-trip decimals, so save/load is
// bit-exact.

#include <stdexcept>
#include <string>

#include "qctf/linalg.hpp"

namespace qctf {

struct QuantumSystem {
  ComplexMatrix hamiltonian;
  StateVector initial;
  Bipartition part;
};

class SystemFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

QuantumSystem parse_system(const std::string& text, const std::string& origin = "<memory>");
QuantumSystem load_system(const std::string& path);
std::string serialize_system(const QuantumSystem& sys);
/// Writes via a temporary file and rename.
void save_system(const std::string& path, const QuantumSystem& sys);

/// Writes `contents` to `path` atomically (temp file in the same directory,
/// then rename). Throws std::runtime_error on I/O failure.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace qctf
