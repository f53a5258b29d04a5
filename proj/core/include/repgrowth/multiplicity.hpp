#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "repgrowth/bigint.hpp"
#include "repgrowth/root_system.hpp"
#include "repgrowth/weyl_dim.hpp"

namespace repgrowth {

// Weight in the fundamental-weight basis: entry j is the value of the j-th
// simple coroot on the weight. The highest weight of the irreducible with
// shifted coordinates c is m_j = c_j - 1; a weight is dominant iff all
// entries are >= 0.
using WeightCoords = std::vector<int>;

struct WeightDiagram {
  RootSystemId id;
  WeightCoords highest;
  std::map<WeightCoords, long long> mults;
  BigInt dim;  // sum of all multiplicities
};

// Complete weight diagram: dominant multiplicities by the standard
// recursion descending level by level from the highest weight, everything
// else copied across Weyl orbits. Throws ResourceError when the degree
// exceeds weight_cap.
WeightDiagram weight_diagram(RootSystemId id, const CVector& c,
                             std::size_t weight_cap = 1000000);

// Largest weight-space dimension against the bound 1 + dim/h, h the
// Coxeter number. pass is decided exactly: h * (max_mult - 1) <= dim.
struct SeitzReport {
  long long max_mult = 0;
  double bound = 0.0;
  bool pass = false;
  BigInt dim;
  int coxeter_number = 0;
};
SeitzReport seitz_check(RootSystemId id, const CVector& c,
                        std::size_t weight_cap = 1000000);

// Finite-order torus element given by a cocharacter mod order: the
// eigenvalue exponent of weight m on it is sum_j m_j t_j mod order.
struct TorusElement {
  long long order = 0;
  std::vector<long long> cochar;
};

// Regular iff every positive root pairs to a nonzero residue mod order.
bool is_regular(const RootSystemData& data, const TorusElement& g);

// First regular cocharacter in lexicographic order over [0, p)^r, rightmost
// coordinate fastest. Exists whenever p >= Coxeter number; throws
// NoRegularElementError when the search exhausts. Any p >= 2 is accepted.
TorusElement find_regular_cocharacter(RootSystemId id, long long p);

struct EigenProfile {
  long long order = 0;
  std::vector<long long> counts;  // eigenspace dimension per residue
  long long w_max = 0;            // the largest eigenspace
};
EigenProfile eigen_profile(RootSystemId id, const CVector& c,
                           const TorusElement& g,
                           std::size_t weight_cap = 1000000);

// Sandwich for the largest eigenspace of a regular element of prime order:
// dim/p <= w_max <= dim/p + (p-1)K/p, K = |W| / (2 sin(pi/p))^{num_positive}.
// The lower comparison is exact, the upper one in doubles.
struct EigenBounds {
  long long w_max = 0;
  BigRat lower;            // dim / p
  double upper = 0.0;
  double weyl_term = 0.0;  // K
  bool pass = false;
};
EigenBounds eigenspace_bounds(RootSystemId id, const CVector& c,
                              const TorusElement& g,
                              std::size_t weight_cap = 1000000);

}  // namespace repgrowth
