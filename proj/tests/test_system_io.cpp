#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "qctf/models.hpp"
#include "qctf/random.hpp"
#include "qctf/system_io.hpp"

using namespace qctf;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_system(text, "sys.json");
  } catch (const SystemFileError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("system_io") {

TEST_CASE("shortest round-trip formatting") {
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.0) == "-0");
  CHECK(format_double(1e-300) == "1e-300");
  const double odd = 0.1 + 0.2;
  CHECK(std::stod(format_double(odd)) == odd);
}

TEST_CASE("minimal file round-trips bit-exactly") {
  const std::string text = R"({"dimension": 2, "n": 2, "d": 1,
    "hamiltonian": [[[0.5, 0], [0.1, -0.3]], [[0.1, 0.3], [-0.5, 0]]],
    "initial_state": [[1, 0], [0, 0]]})";
  const auto sys = parse_system(text);
  CHECK(sys.hamiltonian(0, 1) == cplx(0.1, -0.3));
  const auto again = parse_system(serialize_system(sys));
  CHECK(again.hamiltonian == sys.hamiltonian);
  CHECK(again.initial == sys.initial);
  CHECK(serialize_system(again) == serialize_system(sys));
}

TEST_CASE("random system survives save and load unchanged") {
  QuantumSystem sys;
  sys.hamiltonian = build_random_hermitian(6, 12);
  sys.initial = random_state(6, 13);
  sys.part = Bipartition{2, 3, {}};
  const auto path = (std::filesystem::temp_directory_path() / "qctf_roundtrip.json").string();
  save_system(path, sys);
  const auto back = load_system(path);
  CHECK(back.hamiltonian == sys.hamiltonian);
  CHECK(back.initial == sys.initial);
  CHECK(back.part.n == 2);
  CHECK(back.part.d == 3);
  CHECK(!std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove(path);
}

TEST_CASE("non-Hermitian Hamiltonian names the worst pair") {
  const auto msg = error_of(R"({"dimension": 2, "n": 2, "d": 1,
    "hamiltonian": [[[0, 0], [1, 0]], [[2, 0], [0, 0]]],
    "initial_state": [[1, 0], [0, 0]]})");
  CHECK(msg.find("sys.json") != std::string::npos);
  CHECK(msg.find("a[0][1]") != std::string::npos);
}

TEST_CASE("unnormalized state reports the measured norm") {
  const auto msg = error_of(R"({"dimension": 2, "n": 2, "d": 1,
    "hamiltonian": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
    "initial_state": [[0.5, 0], [0, 0]]})");
  CHECK(msg.find("measured norm 0.5") != std::string::npos);
}

TEST_CASE("structural errors carry context") {
  CHECK(error_of("{\"dimension\": 2,\n \"n\": }").find("line 2") != std::string::npos);
  CHECK(error_of(R"({"n": 2, "d": 1})").find("'dimension'") != std::string::npos);
  CHECK(error_of(R"({"dimension": 4, "n": 3, "d": 1, "hamiltonian": [], "initial_state": []})").find("n*d") !=
        std::string::npos);
  CHECK(error_of(R"({"dimension": 2, "n": 2, "d": 1, "hamiltonian": [[[0,0],[0,0]],[[0,0]]], "initial_state": [[1,0],[0,0]]})")
            .find("row 1") != std::string::npos);
  CHECK(error_of(R"({"dimension": 2, "n": 2, "d": 1, "hamiltonian": [[[0,0],[0,0]],[[0,0],[0,0]]], "initial_state": [[1,0],[0]]})")
            .find("entry 1") != std::string::npos);
}

TEST_CASE("missing file is reported") { CHECK_THROWS_AS(load_system("/nonexistent/dir/sys.json"), SystemFileError); }

}  // TEST_SUITE
