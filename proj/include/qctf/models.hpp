#pragma once

// Hamiltonian builders and initial-state descriptors.
//
// Spin operators follow the spin-1/2 convention S = sigma/2 with hbar = 1, so
// every frequency reported elsewhere is in units of the couplings below.
// In a chain basis index, site 0 is the most significant bit and bit value 0
// is "up" (S^z = +1/2).

#include <cstdint>
#include <string>
#include <vector>

#include "qctf/linalg.hpp"

namespace qctf {

constexpr int kMinSites = 2;
constexpr int kMaxSites = 10;

/// sum over bonds of J (SxSx + SySy + delta SzSz). A periodic chain closes the
/// ring with the bond (sites-1, 0); for two sites that bond already exists and
/// is not doubled.
ComplexMatrix build_heisenberg_xxz(int sites, double j, double delta, bool periodic);

/// -J sum_bonds SzSz - h sum_i Sx.
ComplexMatrix build_transverse_ising(int sites, double j, double h, bool periodic);

/// (A + A^H)/2 with Re, Im of A uniform in [-1, 1) from SplitMix64(seed),
/// filled row-major, real part first.
ComplexMatrix build_random_hermitian(std::size_t dim, std::uint64_t seed);

/// Bipartition of a chain with M formed by `m_sites` (listed order = M-major
/// significance) and R by the remaining sites in increasing order.
Bipartition chain_bipartition(int sites, std::vector<int> m_sites);

/// perm[chain_index] = M-major index for the given chain bipartition.
std::vector<std::size_t> m_major_permutation(int sites, const std::vector<int>& m_sites);

/// Relabels basis states: out(perm[i], perm[j]) = a(i, j).
ComplexMatrix permute_basis(const ComplexMatrix& a, const std::vector<std::size_t>& perm);
StateVector permute_basis(const StateVector& psi, const std::vector<std::size_t>& perm);

/// Builds a normalized initial state in M-major order.
///
/// Descriptors:
///   up,down,...        one ket per chain site (also 0/1, +/-)
///   neel               up,down,up,...
///   ghz                (|0...0> + |1...1>)/sqrt2 over the chain
///   bell(i,j)          Bell pair (|00>+|11>)/sqrt2 on sites i,j; other sites up
///   random(seed=S)     Haar-random over the full space
///   random_product(seed=S)
///                      chains: independent random qubit per site;
///                      otherwise a random n-vector (x) random d-vector
///   basis(k)           M-major basis vector k
///
/// Per-site descriptors need a chain bipartition (non-empty m_sites).
StateVector make_initial_state(const std::string& descriptor, const Bipartition& part);

/// Number of chain sites implied by a chain bipartition.
int chain_sites(const Bipartition& part);

}  // namespace qctf
