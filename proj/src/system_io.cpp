#include "qctf/system_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qctf {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
  throw SystemFileError(origin + ": " + msg);
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::size_t read_count(const json& doc, const char* field, const std::string& origin) {
  if (!doc.contains(field)) fail(origin, std::string("missing field '") + field + "'");
  const json& v = doc.at(field);
  if (!v.is_number_unsigned()) fail(origin, std::string("field '") + field + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

cplx read_pair(const json& v, const std::string& origin, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    fail(origin, where + ": expected [re, im]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

void append_pair(std::string& out, cplx v) {
  out += '[';
  out += format_double(v.real());
  out += ", ";
  out += format_double(v.imag());
  out += ']';
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) return std::signbit(v) ? "-0" : "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, end);
}

QuantumSystem parse_system(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, "parse error at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) fail(origin, "top level must be an object");

  const std::size_t dim = read_count(doc, "dimension", origin);
  QuantumSystem sys;
  sys.part.n = read_count(doc, "n", origin);
  sys.part.d = read_count(doc, "d", origin);
  if (dim == 0) fail(origin, "field 'dimension' must be positive");
  try {
    validate_bipartition(sys.part, dim);
  } catch (const std::invalid_argument& e) {
    fail(origin, e.what());
  }

  if (!doc.contains("hamiltonian")) fail(origin, "missing field 'hamiltonian'");
  const json& h = doc.at("hamiltonian");
  if (!h.is_array() || h.size() != dim) fail(origin, "field 'hamiltonian' must have " + std::to_string(dim) + " rows");
  sys.hamiltonian = ComplexMatrix(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const json& row = h[i];
    if (!row.is_array() || row.size() != dim) {
      fail(origin, "field 'hamiltonian' row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      sys.hamiltonian(i, j) =
          read_pair(row[j], origin, "field 'hamiltonian' row " + std::to_string(i) + " entry " + std::to_string(j));
    }
  }

  if (!doc.contains("initial_state")) fail(origin, "missing field 'initial_state'");
  const json& s = doc.at("initial_state");
  if (!s.is_array() || s.size() != dim) fail(origin, "field 'initial_state' must have " + std::to_string(dim) + " entries");
  std::vector<cplx> amp(dim);
  for (std::size_t i = 0; i < dim; ++i) amp[i] = read_pair(s[i], origin, "field 'initial_state' entry " + std::to_string(i));
  sys.initial = StateVector(std::move(amp));

  try {
    require_hermitian(sys.hamiltonian, 1e-12, "field 'hamiltonian'");
  } catch (const std::invalid_argument& e) {
    fail(origin, e.what());
  }
  const double norm = sys.initial.norm();
  if (!(std::abs(norm * norm - 1.0) <= 1e-12)) {
    std::ostringstream os;
    os.precision(17);
    os << "field 'initial_state' is not normalized: measured norm " << norm;
    fail(origin, os.str());
  }
  return sys;
}

QuantumSystem load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SystemFileError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str(), path);
}

std::string serialize_system(const QuantumSystem& sys) {
  const std::size_t dim = sys.hamiltonian.rows();
  std::string out = "{\n";
  out += "  \"dimension\": " + std::to_string(dim) + ",\n";
  out += "  \"n\": " + std::to_string(sys.part.n) + ",\n";
  out += "  \"d\": " + std::to_string(sys.part.d) + ",\n";
  out += "  \"hamiltonian\": [\n";
  for (std::size_t i = 0; i < dim; ++i) {
    out += "    [";
    for (std::size_t j = 0; j < dim; ++j) {
      if (j) out += ", ";
      append_pair(out, sys.hamiltonian(i, j));
    }
    out += i + 1 < dim ? "],\n" : "]\n";
  }
  out += "  ],\n  \"initial_state\": [";
  for (std::size_t i = 0; i < sys.initial.size(); ++i) {
    if (i) out += ", ";
    append_pair(out, sys.initial[i]);
  }
  out += "]\n}\n";
  return out;
}

void save_system(const std::string& path, const QuantumSystem& sys) { write_file_atomic(path, serialize_system(sys)); }

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move temporary file onto '" + path + "'");
  }
}

}  // namespace qctf
