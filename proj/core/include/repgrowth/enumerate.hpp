#pragma once

#include <vector>

#include "repgrowth/bigint.hpp"
#include "repgrowth/root_system.hpp"
#include "repgrowth/weyl_dim.hpp"

namespace repgrowth {

struct IrrepRecord {
  CVector c;
  BigInt dim;
};

// Every irreducible degree at most max_dim, trivial representation included,
// sorted by (degree, lexicographic c). The search walks the monotone lattice
// of shifted weights, incrementing only coordinates at or beyond the last
// incremented one, and prunes a subtree as soon as its degree exceeds
// max_dim (degrees are coordinatewise monotone in c). With threads > 1 the
// top-level subtrees are distributed over workers; output is identical for
// any thread count.
std::vector<IrrepRecord> irreps_up_to(RootSystemId id, long long max_dim,
                                      int threads = 1);

// Number of irreducible representations of degree <= n.
long long r_n(RootSystemId id, long long n, int threads = 1);

// Partial sum of degree^{-s} over all irreducibles of degree <= max_dim,
// accumulated from the largest degree down.
struct WittenPartial {
  double s = 0.0;
  long long max_dim = 0;
  double partial_sum = 0.0;
  long long count = 0;
};
WittenPartial witten_partial(RootSystemId id, double s, long long max_dim,
                             int threads = 1);

// Checks that the k-th smallest degree is >= k for every k, equivalently
// that R_n <= n for every n <= max_n. equalities lists the n with R_n = n.
// On failure, witness_n is an n with R_n > n and witness_rn that count.
struct Thm1Report {
  bool pass = false;
  long long count = 0;
  std::vector<long long> equalities;
  long long witness_n = 0;
  long long witness_rn = 0;
};
Thm1Report verify_thm1(RootSystemId id, long long max_n, int threads = 1);

}  // namespace repgrowth
