#pragma once

#include <vector>

#include "repgrowth/bigint.hpp"
#include "repgrowth/root_system.hpp"

namespace repgrowth {

// Shifted highest-weight coordinates: c_j = (value of the j-th simple coroot
// on the highest weight) + 1. Every entry is >= 1; the trivial representation
// is the all-ones vector.
using CVector = std::vector<long long>;

// Rows are the positive roots of the dual system carried back to the primal
// node numbering: row t lists, for the t-th positive coroot, its coefficients
// on the simple coroots. The degree of the irreducible representation with
// shifted weight c is  prod_t <row_t, c> / prod_t <row_t, 1>.
struct DualCoefficientMatrix {
  RootSystemId id;
  std::vector<Root> rows;          // sorted by (height, lex), as in build()
  std::vector<int> row_sums;       // heights: <row_t, 1>
  std::vector<double> exponents;   // v_j = sum_t row[t][j] / height_t
  BigInt denominator;              // prod_t row_sums[t]
};

// Cached per id; cheap to call repeatedly, safe from concurrent threads.
const DualCoefficientMatrix& dual_coefficients(RootSystemId id);

// Exact degree of the irreducible representation with shifted weight c.
// Throws std::invalid_argument if c has the wrong length or an entry < 1.
BigInt dimension(RootSystemId id, const CVector& c);
BigInt dimension(const DualCoefficientMatrix& dcm, const CVector& c);

// prod_j c_j^{v_j}. By the weighted AM-GM inequality this never exceeds
// dimension(id, c); equality holds at rank 1.
double dimension_lower_bound(RootSystemId id, const CVector& c);

}  // namespace repgrowth
