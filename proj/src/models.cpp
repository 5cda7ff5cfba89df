#include "qctf/models.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qctf/random.hpp"

namespace qctf {

namespace {

void check_sites(int sites) {
  if (sites < kMinSites || sites > kMaxSites) {
    std::ostringstream os;
    os << "sites = " << sites << " is outside [" << kMinSites << ", " << kMaxSites << "]";
    throw std::invalid_argument(os.str());
  }
}

std::vector<std::pair<int, int>> bonds(int sites, bool periodic) {
  std::vector<std::pair<int, int>> b;
  for (int i = 0; i + 1 < sites; ++i) b.emplace_back(i, i + 1);
  if (periodic && sites > 2) b.emplace_back(sites - 1, 0);
  return b;
}

inline std::size_t bit_of(int sites, int site) { return std::size_t{1} << (sites - 1 - site); }
// S^z eigenvalue of `site` in chain state c.
inline double sz(std::size_t c, int sites, int site) { return (c & bit_of(sites, site)) ? -0.5 : 0.5; }

std::string trim(std::string s) {
  auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

[[noreturn]] void bad_descriptor(const std::string& desc, const std::string& why) {
  throw std::invalid_argument("initial state '" + desc + "': " + why);
}

long long parse_integer(const std::string& desc, const std::string& text) {
  std::string t = trim(text);
  if (auto eq = t.find('='); eq != std::string::npos) {
    if (trim(t.substr(0, eq)) != "seed") bad_descriptor(desc, "unknown argument '" + t + "'");
    t = trim(t.substr(eq + 1));
  }
  try {
    std::size_t used = 0;
    const long long v = std::stoll(t, &used);
    if (used != t.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    bad_descriptor(desc, "expected an integer, got '" + t + "'");
  }
}

// Name and argument list of "name(arg, ...)"; args empty if no parentheses.
std::pair<std::string, std::vector<std::string>> parse_call(const std::string& desc) {
  const auto open = desc.find('(');
  if (open == std::string::npos) return {desc, {}};
  if (desc.back() != ')') bad_descriptor(desc, "missing ')'");
  return {trim(desc.substr(0, open)), split(desc.substr(open + 1, desc.size() - open - 2), ',')};
}

std::array<cplx, 2> site_ket(const std::string& desc, const std::string& token) {
  const double r = 1.0 / std::numbers::sqrt2;
  if (token == "up" || token == "0") return {1.0, 0.0};
  if (token == "down" || token == "1") return {0.0, 1.0};
  if (token == "+") return {r, r};
  if (token == "-") return {r, -r};
  bad_descriptor(desc, "unknown site ket '" + token + "'");
}

// Chain-order product state from per-site kets.
std::vector<cplx> product_state(const std::vector<std::array<cplx, 2>>& kets) {
  std::vector<cplx> amp{1.0};
  for (const auto& k : kets) {
    std::vector<cplx> next(amp.size() * 2);
    for (std::size_t i = 0; i < amp.size(); ++i) {
      next[2 * i] = amp[i] * k[0];
      next[2 * i + 1] = amp[i] * k[1];
    }
    amp = std::move(next);
  }
  return amp;
}

}  // namespace

ComplexMatrix build_heisenberg_xxz(int sites, double j, double delta, bool periodic) {
  check_sites(sites);
  const std::size_t dim = std::size_t{1} << sites;
  ComplexMatrix h(dim, dim);
  for (const auto& [a, b] : bonds(sites, periodic)) {
    const std::size_t flip = bit_of(sites, a) | bit_of(sites, b);
    for (std::size_t c = 0; c < dim; ++c) {
      const double za = sz(c, sites, a), zb = sz(c, sites, b);
      h(c, c) += j * delta * za * zb;
      // (S+S- + S-S+)/2 connects antiparallel pairs with amplitude 1/2.
      if (za != zb) h(c ^ flip, c) += 0.5 * j;
    }
  }
  return h;
}

ComplexMatrix build_transverse_ising(int sites, double j, double h, bool periodic) {
  check_sites(sites);
  const std::size_t dim = std::size_t{1} << sites;
  ComplexMatrix m(dim, dim);
  for (const auto& [a, b] : bonds(sites, periodic))
    for (std::size_t c = 0; c < dim; ++c) m(c, c) += -j * sz(c, sites, a) * sz(c, sites, b);
  for (int s = 0; s < sites; ++s)
    for (std::size_t c = 0; c < dim; ++c) m(c ^ bit_of(sites, s), c) += -0.5 * h;
  return m;
}

ComplexMatrix build_random_hermitian(std::size_t dim, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("build_random_hermitian: dim must be >= 2");
  SplitMix64 rng(seed);
  ComplexMatrix a(dim, dim);
  for (auto& v : a.entries()) {
    const double re = rng.uniform(-1.0, 1.0);
    v = {re, rng.uniform(-1.0, 1.0)};
  }
  ComplexMatrix h(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) h(i, k) = 0.5 * (a(i, k) + std::conj(a(k, i)));
  return h;
}

Bipartition chain_bipartition(int sites, std::vector<int> m_sites) {
  check_sites(sites);
  if (m_sites.empty()) throw std::invalid_argument("subsystem M must contain at least one site");
  if (m_sites.size() >= static_cast<std::size_t>(sites) + 1) throw std::invalid_argument("subsystem M has too many sites");
  std::vector<int> seen = m_sites;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw std::invalid_argument("subsystem M lists a site twice");
  for (int s : m_sites) {
    if (s < 0 || s >= sites) {
      std::ostringstream os;
      os << "subsystem site " << s << " is outside [0, " << sites - 1 << "]";
      throw std::invalid_argument(os.str());
    }
  }
  Bipartition p;
  p.n = std::size_t{1} << m_sites.size();
  p.d = std::size_t{1} << (sites - static_cast<int>(m_sites.size()));
  p.m_sites = std::move(m_sites);
  return p;
}

int chain_sites(const Bipartition& part) {
  int sites = 0;
  while ((std::size_t{1} << sites) < part.total()) ++sites;
  if ((std::size_t{1} << sites) != part.total() || part.m_sites.empty()) {
    throw std::invalid_argument("bipartition does not describe a spin chain");
  }
  return sites;
}

std::vector<std::size_t> m_major_permutation(int sites, const std::vector<int>& m_sites) {
  std::vector<int> r_sites;
  for (int s = 0; s < sites; ++s)
    if (std::find(m_sites.begin(), m_sites.end(), s) == m_sites.end()) r_sites.push_back(s);
  const std::size_t dim = std::size_t{1} << sites;
  const std::size_t d = std::size_t{1} << r_sites.size();
  std::vector<std::size_t> perm(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t im = 0, ir = 0;
    for (int s : m_sites) im = (im << 1) | ((c & bit_of(sites, s)) ? 1 : 0);
    for (int s : r_sites) ir = (ir << 1) | ((c & bit_of(sites, s)) ? 1 : 0);
    perm[c] = im * d + ir;
  }
  return perm;
}

ComplexMatrix permute_basis(const ComplexMatrix& a, const std::vector<std::size_t>& perm) {
  if (a.rows() != perm.size() || !a.is_square()) throw std::invalid_argument("permute_basis: size mismatch");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(perm[i], perm[j]) = a(i, j);
  return out;
}

StateVector permute_basis(const StateVector& psi, const std::vector<std::size_t>& perm) {
  if (psi.size() != perm.size()) throw std::invalid_argument("permute_basis: size mismatch");
  std::vector<cplx> out(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) out[perm[i]] = psi[i];
  return StateVector(std::move(out));
}

StateVector make_initial_state(const std::string& descriptor, const Bipartition& part) {
  const std::string desc = trim(descriptor);
  if (desc.empty()) bad_descriptor(desc, "empty descriptor");
  validate_bipartition(part, part.total());
  const std::size_t dim = part.total();
  const bool chain = !part.m_sites.empty();
  const auto [name, args] = parse_call(desc);

  auto require_chain = [&]() {
    if (!chain) bad_descriptor(desc, "per-site descriptors need a spin-chain bipartition");
    return chain_sites(part);
  };
  auto from_chain = [&](std::vector<cplx> amp) {
    const int sites = chain_sites(part);
    StateVector v = permute_basis(StateVector(std::move(amp)), m_major_permutation(sites, part.m_sites));
    return StateVector::normalized({v.amplitudes().begin(), v.amplitudes().end()});
  };
  auto seed_arg = [&]() -> std::uint64_t {
    if (args.size() != 1) bad_descriptor(desc, "expected exactly one seed argument");
    return static_cast<std::uint64_t>(parse_integer(desc, args[0]));
  };

  if (name == "random") return random_state(dim, seed_arg());

  if (name == "random_product") {
    SplitMix64 rng(seed_arg());
    if (chain) {
      const int sites = require_chain();
      std::vector<std::array<cplx, 2>> kets(sites);
      for (auto& k : kets) {
        k[0] = rng.complex_normal();
        k[1] = rng.complex_normal();
      }
      return from_chain(product_state(kets));
    }
    std::vector<cplx> a(part.n), b(part.d), amp(dim);
    for (auto& v : a) v = rng.complex_normal();
    for (auto& v : b) v = rng.complex_normal();
    for (std::size_t i = 0; i < part.n; ++i)
      for (std::size_t j = 0; j < part.d; ++j) amp[part.index(i, j)] = a[i] * b[j];
    return StateVector::normalized(std::move(amp));
  }

  if (name == "basis") {
    if (args.size() != 1) bad_descriptor(desc, "expected basis(k)");
    const long long k = parse_integer(desc, args[0]);
    if (k < 0 || static_cast<std::size_t>(k) >= dim) bad_descriptor(desc, "basis index out of range");
    std::vector<cplx> amp(dim);
    amp[static_cast<std::size_t>(k)] = 1.0;
    return StateVector(std::move(amp));
  }

  if (name == "neel" && args.empty()) {
    const int sites = require_chain();
    std::vector<std::array<cplx, 2>> kets;
    for (int s = 0; s < sites; ++s) kets.push_back(s % 2 == 0 ? std::array<cplx, 2>{1.0, 0.0} : std::array<cplx, 2>{0.0, 1.0});
    return from_chain(product_state(kets));
  }

  if (name == "ghz" && args.empty()) {
    const int sites = require_chain();
    std::vector<cplx> amp(dim);
    amp.front() = 1.0;
    amp.back() = 1.0;
    (void)sites;
    return from_chain(std::move(amp));
  }

  if (name == "bell") {
    const int sites = require_chain();
    if (args.size() != 2) bad_descriptor(desc, "expected bell(i,j)");
    const long long a = parse_integer(desc, args[0]), b = parse_integer(desc, args[1]);
    if (a < 0 || b < 0 || a >= sites || b >= sites || a == b) bad_descriptor(desc, "bell sites must be two distinct chain sites");
    std::vector<cplx> amp(dim);
    amp[0] = 1.0;
    amp[bit_of(sites, static_cast<int>(a)) | bit_of(sites, static_cast<int>(b))] = 1.0;
    return from_chain(std::move(amp));
  }

  // Comma-separated per-site kets.
  if (desc.find('(') != std::string::npos) bad_descriptor(desc, "unknown descriptor '" + name + "'");
  const int sites = require_chain();
  const auto tokens = split(desc, ',');
  if (static_cast<int>(tokens.size()) != sites) {
    std::ostringstream os;
    os << "expected " << sites << " site kets, got " << tokens.size();
    bad_descriptor(desc, os.str());
  }
  std::vector<std::array<cplx, 2>> kets;
  for (const auto& t : tokens) kets.push_back(site_ket(desc, t));
  return from_chain(product_state(kets));
}

}  // namespace qctf
