#pragma once

#include <gmpxx.h>

#include <vector>

#include "arglab/graph.hpp"
#include "arglab/verifiers.hpp"

namespace arglab {

// Monic minimal polynomial of the adjacency matrix over Q, computed exactly
// by eliminating vectorized powers I, A, A^2, ... with big-integer rationals.
// Returned little-endian: coeffs[i] multiplies x^i, leading coefficient 1.
std::vector<mpz_class> minimal_polynomial(const Graph& g);

// Degree of the minimal polynomial; for the symmetric adjacency matrix this
// is the number of distinct eigenvalues.
int distinct_eigenvalue_count(const Graph& g);

// The nontrivial eigenvalue pair of an SRG, kept exact as
// theta = (s +- sqrt(disc)) / 2 with s = lambda - mu, disc = s^2 + 4(k - mu).
struct SrgEigenvalues {
  long long s = 0;
  long long disc = 0;
  bool integral = false;     // disc a perfect square with matching parity
  long long theta1 = 0;      // set when integral, theta1 >= theta2
  long long theta2 = 0;
};

// InfeasibleParameters when the tuple violates the basic SRG constraints.
SrgEigenvalues srg_eigenvalues(const ArParams& p);

}  // namespace arglab
