#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "symprod/rational.hpp"

namespace symprod::sections {

/// Multihomogeneous polynomial in m blocks of N + 1 homogeneous coordinates.
/// Exponent vectors have length m * (N + 1); block i occupies the slots
/// [i * (N + 1), (i + 1) * (N + 1)).
struct MultiPoly {
  int m = 0;
  int N = 0;
  std::map<std::vector<int>, Rat> terms;

  static MultiPoly zero(int m, int N);
  static MultiPoly constant(int m, int N, const Rat& value);
  /// Linear form in the coordinates of one block (0-based block index).
  static MultiPoly linear_form(int m, int N, int block,
                               const std::vector<Rat>& coeffs);

  bool is_zero() const { return terms.empty(); }
  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;

  /// Max total degree in the variables of one block, over all terms.
  int block_degree(int block) const;
  /// True when every term has the same degree within every block.
  bool is_multihomogeneous() const;
  /// Swaps the variable blocks a and b in every term.
  MultiPoly swap_blocks(int a, int b) const;
  Rat evaluate(const std::vector<Rat>& point) const;
};

/// The product over i < j of (X_i Y_j - X_j Y_i)^2, where X_i, Y_i are linear
/// forms on the i-th factor given by their coefficient vectors (length N+1).
/// Result has degree 2(m - 1) in each block.
MultiPoly build_invariant_section(int m, int N,
                                  const std::vector<std::vector<Rat>>& X,
                                  const std::vector<std::vector<Rat>>& Y);

/// True iff every adjacent block transposition fixes the term map.
bool check_sm_invariance(const MultiPoly& s);

struct DiagonalOrderReport {
  long long order = 0;
  int direction_samples = 0;
  bool infinite = false;  // zero polynomial sentinel
};

/// Vanishing order along the pairwise-diagonal locus, probed with `trials`
/// random rational curves per block pair; the reported order is the minimum
/// observed over all pairs and probes.
DiagonalOrderReport diagonal_vanishing_order(const MultiPoly& s, int trials,
                                             std::uint64_t seed);

/// Lower bound r / mult on the vanishing order of a descended section along
/// an exceptional divisor of orbifold multiplicity mult.
Rat descend_order(long long r, long long mult);

struct BaseLocusReport {
  Rat coefficient;       // 1 / (2(m-1))
  int section_degree;    // 2(m-1)
  int diagonal_order;    // 2
  Rat descended_order;   // 2 / 2 = 1
};

/// Delta-coefficient for the stable-base-locus containment certified by the
/// invariant sections, with the bookkeeping that backs it.
BaseLocusReport base_locus_coefficient(int m);

/// Random nonzero small-integer coefficient vector of length N + 1.
std::vector<Rat> random_form(int N, std::mt19937_64& rng);

}  // namespace symprod::sections
