#include "repgrowth/zeta_bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "repgrowth/weyl_dim.hpp"

namespace repgrowth {

std::vector<BigRat> exponent_profile(const std::vector<Root>& roots,
                                     int rank) {
  int hmax = 1;
  for (const Root& root : roots) hmax = std::max(hmax, root.height());
  // group integer contributions by height, then put everything over the
  // single denominator lcm(1..hmax)
  std::vector<std::vector<long long>> by_height(
      rank, std::vector<long long>(hmax + 1, 0));
  for (const Root& root : roots) {
    int h = root.height();
    for (int j = 0; j < rank; ++j)
      if (root.coeffs[j]) by_height[j][h] += root.coeffs[j];
  }
  BigInt lcm = 1;
  for (int h = 2; h <= hmax; ++h)
    lcm = lcm / boost::multiprecision::gcd(lcm, BigInt(h)) * h;
  std::vector<BigInt> lcm_over(hmax + 1);
  for (int h = 1; h <= hmax; ++h) lcm_over[h] = lcm / h;

  std::vector<BigRat> v(rank);
  for (int j = 0; j < rank; ++j) {
    BigInt num = 0;
    for (int h = 1; h <= hmax; ++h)
      if (by_height[j][h]) num += lcm_over[h] * by_height[j][h];
    BigInt g = boost::multiprecision::gcd(num, lcm);
    v[j] = BigRat(num / g, lcm / g);
  }
  return v;
}

ExponentProfile v_profile(RootSystemId id) {
  const auto& dcm = dual_coefficients(id);
  return ExponentProfile{id, exponent_profile(dcm.rows, id.rank)};
}

BigRat v_closed_form_A(int r, int j) {
  if (r < 1) throw std::invalid_argument("rank must be >= 1");
  if (j < 1 || j > r)
    throw std::invalid_argument("index must lie in [1, rank]");
  // harmonic numbers H_0..H_r
  std::vector<BigRat> harmonic(r + 1);
  harmonic[0] = 0;
  for (int k = 1; k <= r; ++k)
    harmonic[k] = harmonic[k - 1] + BigRat(1, k);
  BigRat sum = 0;
  for (int i = 1; i <= j; ++i)
    sum += harmonic[r - i + 1] - harmonic[j - i];
  return sum;
}

double riemann_zeta(double s, double abs_tol) {
  if (!(s > 1.0))
    throw DivergenceError("zeta diverges for s <= 1 (s = " +
                          std::to_string(s) + ")");
  if (s > 64.0) return 1.0 + std::pow(2.0, -s) + std::pow(3.0, -s);

  // B_{2k} / (2k)! for k = 1..4, then |B_10|/10! for the error bound
  static constexpr double kBern[4] = {1.0 / 12, -1.0 / 720, 1.0 / 30240,
                                      -1.0 / 1209600};
  static constexpr double kBernNext = 5.0 / 66 / 3628800.0;
  for (long m = 25;; m *= 2) {
    double sum = 0.0;
    for (long n = m - 1; n >= 1; --n) sum += std::pow(n, -s);
    double ms = std::pow(m, -s);
    sum += ms * m / (s - 1.0) + 0.5 * ms;
    double poch = s;            // s (s+1) ... (s + 2k - 2)
    double mpow = ms / m;       // m^{-s - 2k + 1}
    for (int k = 0; k < 4; ++k) {
      sum += kBern[k] * poch * mpow;
      poch *= (s + 2 * k + 1) * (s + 2 * k + 2);
      mpow /= static_cast<double>(m) * m;
    }
    double omitted = kBernNext * poch * mpow;
    if (omitted <= abs_tol) return sum;
    if (m > (1L << 22))
      throw std::runtime_error("zeta tail failed to reach tolerance");
  }
}

double z_bound(const ExponentProfile& profile, double s) {
  double product = 1.0;
  for (std::size_t j = 0; j < profile.v.size(); ++j) {
    double arg = profile.v[j].convert_to<double>() * s;
    if (arg <= 1.0)
      throw DivergenceError("bound diverges: exponent " + std::to_string(arg) +
                            " at position " + std::to_string(j + 1) +
                            " is <= 1");
    product *= riemann_zeta(arg, 1e-11);
  }
  return product;
}

double z_bound(RootSystemId id, double s) {
  return z_bound(v_profile(id), s);
}

std::vector<TableEntry> table1() {
  std::vector<TableEntry> out;
  auto add = [&](Family f, int r) {
    RootSystemId id{f, r};
    out.push_back({id, z_bound(id, 1.0)});
  };
  for (int r = 9; r <= 20; ++r) add(Family::A, r);
  for (int r = 5; r <= 10; ++r) add(Family::D, r);
  for (int r = 6; r <= 8; ++r) add(Family::E, r);
  return out;
}

std::vector<TableEntry> table2() {
  std::vector<TableEntry> out;
  auto add = [&](Family f, int r) {
    RootSystemId id{f, r};
    double z = z_bound(id, 0.75);
    out.push_back({id, z * z * z * z});
  };
  for (int r = 2; r <= 8; ++r) add(Family::A, r);
  add(Family::D, 4);
  return out;
}

}  // namespace repgrowth
