#include "repgrowth/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace repgrowth {

namespace {

struct Node {
  CVector c;
  BigInt dim;
  int t0;  // position in the allowed-direction list
};

bool record_less(const IrrepRecord& x, const IrrepRecord& y) {
  if (x.dim != y.dim) return x.dim < y.dim;
  return x.c < y.c;
}

void dfs_collect(const DualCoefficientMatrix& dcm,
                 const std::vector<int>& dirs, long long max_dim, Node start,
                 std::vector<IrrepRecord>& out) {
  std::vector<Node> stack;
  stack.push_back(std::move(start));
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    for (int t = node.t0; t < static_cast<int>(dirs.size()); ++t) {
      CVector next = node.c;
      next[dirs[t]] += 1;
      BigInt d = dimension(dcm, next);
      if (d <= max_dim) stack.push_back({std::move(next), std::move(d), t});
    }
    out.push_back({std::move(node.c), std::move(node.dim)});
  }
}

// Directions worth incrementing at all: once c_j >= 2 the degree is at
// least 2^{v_j} (the exponent lower bound with all other coordinates 1),
// so a direction with 2^{v_j} > max_dim can never appear in a record.
std::vector<int> allowed_directions(const DualCoefficientMatrix& dcm,
                                    long long max_dim) {
  std::vector<int> dirs;
  double cutoff = static_cast<double>(max_dim) * (1.0 + 1e-9);
  for (int j = 0; j < dcm.id.rank; ++j)
    if (std::pow(2.0, dcm.exponents[j]) <= cutoff) dirs.push_back(j);
  return dirs;
}

}  // namespace

std::vector<IrrepRecord> irreps_up_to(RootSystemId id, long long max_dim,
                                      int threads) {
  const auto& dcm = dual_coefficients(id);
  if (max_dim < 1) throw std::invalid_argument("max_dim must be >= 1");
  const int rank = id.rank;
  CVector ones(rank, 1);
  std::vector<int> dirs = allowed_directions(dcm, max_dim);

  std::vector<IrrepRecord> records;
  if (threads <= 1) {
    dfs_collect(dcm, dirs, max_dim, Node{ones, 1, 0}, records);
  } else {
    records.push_back({ones, 1});
    std::vector<Node> seeds;
    for (int t = 0; t < static_cast<int>(dirs.size()); ++t) {
      CVector c = ones;
      c[dirs[t]] += 1;
      BigInt d = dimension(dcm, c);
      if (d <= max_dim) seeds.push_back({std::move(c), std::move(d), t});
    }
    int workers = std::min<int>(threads, static_cast<int>(seeds.size()));
    std::vector<std::vector<IrrepRecord>> parts(std::max(workers, 1));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < seeds.size();
             k += static_cast<std::size_t>(workers))
          dfs_collect(dcm, dirs, max_dim, seeds[k], parts[w]);
      });
    for (auto& t : pool) t.join();
    for (auto& part : parts)
      records.insert(records.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
  }
  std::sort(records.begin(), records.end(), record_less);
  return records;
}

long long r_n(RootSystemId id, long long n, int threads) {
  return static_cast<long long>(irreps_up_to(id, n, threads).size());
}

WittenPartial witten_partial(RootSystemId id, double s, long long max_dim,
                             int threads) {
  if (!(s > 0.0)) throw std::invalid_argument("s must be positive");
  auto records = irreps_up_to(id, max_dim, threads);
  WittenPartial out;
  out.s = s;
  out.max_dim = max_dim;
  out.count = static_cast<long long>(records.size());
  double sum = 0.0;
  for (auto it = records.rbegin(); it != records.rend(); ++it)
    sum += std::pow(it->dim.convert_to<double>(), -s);
  out.partial_sum = sum;
  return out;
}

Thm1Report verify_thm1(RootSystemId id, long long max_n, int threads) {
  auto records = irreps_up_to(id, max_n, threads);
  Thm1Report report;
  report.count = static_cast<long long>(records.size());
  report.pass = true;
  for (long long k = 1; k <= report.count; ++k) {
    const BigInt& d = records[static_cast<std::size_t>(k - 1)].dim;
    if (d < k) {
      report.pass = false;
      report.witness_n = d.convert_to<long long>();
      // R_n at the witness: count every degree <= d
      long long rn = k;
      while (rn < report.count &&
             records[static_cast<std::size_t>(rn)].dim == d)
        ++rn;
      report.witness_rn = rn;
      report.equalities.clear();
      break;
    }
    if (d == k) report.equalities.push_back(k);
  }
  return report;
}

}  // namespace repgrowth
