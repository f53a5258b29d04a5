#pragma once

#include <map>
#include <vector>

#include "repgrowth/root_system.hpp"
#include "repgrowth/weyl_dim.hpp"

namespace repgrowth {

// Simple factor of a pair (compact group, irreducible): a census-canonical
// id (B_2 is excluded in favor of C_2, which carries the same group) and
// the lexicographically least representative of the shifted weight's
// diagram-symmetry orbit. The trivial weight never appears.
struct SimplePair {
  RootSystemId id;
  CVector c_orbit;
  long long dim = 0;
  friend auto operator<=>(const SimplePair&, const SimplePair&) = default;
};

// Lexicographically least element of the diagram-symmetry orbit of c.
CVector canonical_weight(RootSystemId id, const CVector& c);

// Every SimplePair of degree <= max_dim, bucketed by degree. Rank cutoffs
// come from the minimal nontrivial degrees (A_r: r+1, B_r: 2r+1, C_r and
// D_r: 2r, plus the fixed exceptional degrees). Built once, read-only.
class SimplePairTable {
 public:
  explicit SimplePairTable(long long max_dim);
  long long max_dim() const { return max_dim_; }
  // Pairs of degree exactly n, sorted by (family, rank, c_orbit).
  const std::vector<SimplePair>& pairs(long long n) const;
  // Everything, sorted by (degree, family, rank, c_orbit).
  std::vector<SimplePair> all() const;

 private:
  long long max_dim_;
  std::map<long long, std::vector<SimplePair>> by_dim_;
};

// Pairs of degree exactly n (n >= 2); builds a fresh table per call.
std::vector<SimplePair> simple_pairs(long long n);

// One isomorphism class of (semisimple compact group, faithful irreducible
// of degree n): a multiset of simple factors whose degrees multiply to n.
struct CensusRecord {
  long long n = 0;
  std::vector<SimplePair> factors;  // ascending (degree, family, rank, c)
};

// Number of such classes; census_count(1) = 0. The recursion runs over
// ordered factorizations d_1 <= ... <= d_k of n into parts >= 2, choosing
// a multiset of pairs per part (combinations with repetition).
long long census_count(long long n);
long long census_count(long long n, const SimplePairTable& table);

std::vector<CensusRecord> census_list(long long n);
std::vector<CensusRecord> census_list(long long n,
                                      const SimplePairTable& table);

}  // namespace repgrowth
