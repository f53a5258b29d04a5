#pragma once

#include <vector>

#include "repgrowth/bigint.hpp"
#include "repgrowth/root_system.hpp"

namespace repgrowth {

// Exponent profile of a root system: v_j = sum over positive coroots of
// coeff_j / height, computed exactly. The degree-zeta function
// Z(s) = sum over irreducibles of degree^{-s} is bounded above by
// prod_j zeta(v_j * s), which is what z_bound evaluates.
struct ExponentProfile {
  RootSystemId id;
  std::vector<BigRat> v;
};

// Exact profile entries for any list of roots (used for coroot rows and in
// tests for primal-root profiles alike).
std::vector<BigRat> exponent_profile(const std::vector<Root>& roots, int rank);

ExponentProfile v_profile(RootSystemId id);

// Type A profile entry in closed form: for 1-based j in [1, r],
// v_j(A_r) = sum_{i=1}^{j} (H_{r-i+1} - H_{j-i}) with H_k the k-th harmonic
// number. Agrees with v_profile(A_r) entry j-1.
BigRat v_closed_form_A(int r, int j);

// Riemann zeta for real s > 1: truncated Dirichlet sum plus an
// Euler-Maclaurin tail with four Bernoulli corrections; the truncation
// point doubles until the first omitted term is below abs_tol. Throws
// DivergenceError for s <= 1.
double riemann_zeta(double s, double abs_tol = 1e-10);

// prod_j zeta(v_j * s). Throws DivergenceError if any v_j * s <= 1.
double z_bound(const ExponentProfile& profile, double s);
double z_bound(RootSystemId id, double s);

struct TableEntry {
  RootSystemId id;
  double value;
};

// Reference tables of the bound: table1() is Z(1) over A_9..A_20, D_5..D_10
// and E_6..E_8; table2() is Z(3/4)^4 over A_2..A_8 and D_4.
std::vector<TableEntry> table1();
std::vector<TableEntry> table2();

}  // namespace repgrowth
