#include "repgrowth/weyl_dim.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace repgrowth {

namespace {

DualCoefficientMatrix make_dual_coefficients(RootSystemId id) {
  validate_id(id);
  DualCoefficientMatrix dcm;
  dcm.id = id;
  // Coroots of id = roots of the transposed Cartan system, with node
  // labels preserved. For B and C the transpose is exactly the Cartan
  // matrix of the dual family label-for-label, so the classical fast path
  // in build() applies; A and D are self-dual. E is symmetric; F and G get
  // the generic closure on the transposed matrix (their duals relabel
  // nodes, which must not happen here).
  const int r = id.rank;
  switch (id.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D:
      dcm.rows = build(dual(id)).positive_roots;
      break;
    default: {
      auto cartan = cartan_matrix(id);
      auto transposed = cartan;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) transposed[i][j] = cartan[j][i];
      dcm.rows = generate_positive_roots(transposed);
      break;
    }
  }
  dcm.denominator = 1;
  dcm.exponents.assign(r, 0.0);
  std::vector<double> acc(r, 0.0);
  for (const Root& row : dcm.rows) {
    int h = row.height();
    dcm.row_sums.push_back(h);
    dcm.denominator *= h;
    for (int j = 0; j < r; ++j)
      if (row.coeffs[j]) acc[j] += static_cast<double>(row.coeffs[j]) / h;
  }
  dcm.exponents = acc;
  return dcm;
}

void check_c(const DualCoefficientMatrix& dcm, const CVector& c) {
  if (c.size() != static_cast<std::size_t>(dcm.id.rank))
    throw std::invalid_argument("weight vector has length " +
                                std::to_string(c.size()) + ", expected " +
                                std::to_string(dcm.id.rank) + " for " +
                                to_string(dcm.id));
  for (long long v : c)
    if (v < 1)
      throw std::invalid_argument(
          "shifted weight coordinates must be >= 1, got " + std::to_string(v));
}

}  // namespace

const DualCoefficientMatrix& dual_coefficients(RootSystemId id) {
  validate_id(id);
  static std::mutex mu;
  static std::map<RootSystemId, std::unique_ptr<DualCoefficientMatrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[id];
  if (!slot)
    slot = std::make_unique<DualCoefficientMatrix>(make_dual_coefficients(id));
  return *slot;
}

BigInt dimension(const DualCoefficientMatrix& dcm, const CVector& c) {
  check_c(dcm, c);
  BigInt num = 1;
  for (const Root& row : dcm.rows) {
    // |coeff| <= 8 and rank <= 10^6 keep the dot product well inside 128 bits
    __int128 dot = 0;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (row.coeffs[j]) dot += static_cast<__int128>(row.coeffs[j]) * c[j];
    num *= to_bigint(dot);
  }
  BigInt q, rem;
  boost::multiprecision::divide_qr(num, dcm.denominator, q, rem);
  if (rem != 0)
    throw std::logic_error("degree product not divisible by its denominator");
  return q;
}

BigInt dimension(RootSystemId id, const CVector& c) {
  return dimension(dual_coefficients(id), c);
}

double dimension_lower_bound(RootSystemId id, const CVector& c) {
  const auto& dcm = dual_coefficients(id);
  check_c(dcm, c);
  double out = 1.0;
  for (std::size_t j = 0; j < c.size(); ++j)
    out *= std::pow(static_cast<double>(c[j]), dcm.exponents[j]);
  return out;
}

}  // namespace repgrowth
