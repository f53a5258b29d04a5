#include "repgrowth/multiplicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "vec_index.hpp"

namespace repgrowth {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Smallest positive integers with d_i * cartan[i][j] == d_j * cartan[j][i];
// proportional to the squared root lengths.
std::vector<long long> symmetrizer(
    const std::vector<std::vector<int>>& cartan) {
  const int r = static_cast<int>(cartan.size());
  std::vector<BigRat> x(r, BigRat(0));
  std::vector<int> stack;
  for (int seed = 0; seed < r; ++seed) {
    if (x[seed] != 0) continue;
    x[seed] = 1;
    stack.push_back(seed);
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < r; ++j)
        if (j != i && cartan[i][j] != 0 && x[j] == 0) {
          x[j] = x[i] * cartan[i][j] / cartan[j][i];
          stack.push_back(j);
        }
    }
  }
  BigInt lcm = 1;
  for (const auto& q : x) {
    BigInt den = denominator(q);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<BigInt> scaled(r);
  BigInt g = 0;
  for (int i = 0; i < r; ++i) {
    scaled[i] = numerator(x[i]) * (lcm / denominator(x[i]));
    g = boost::multiprecision::gcd(g, scaled[i]);
  }
  std::vector<long long> d(r);
  for (int i = 0; i < r; ++i) d[i] = BigInt(scaled[i] / g).convert_to<long long>();
  return d;
}

// Exact solve of cartan * K = lam, floored entrywise (K bounds the box of
// candidate dominant weights lam - cartan*k, k >= 0).
std::vector<long long> box_limits(const std::vector<std::vector<int>>& cartan,
                                  const std::vector<int>& lam) {
  const int r = static_cast<int>(cartan.size());
  std::vector<std::vector<BigRat>> a(r, std::vector<BigRat>(r + 1));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) a[i][j] = cartan[i][j];
    a[i][r] = lam[i];
  }
  for (int col = 0; col < r; ++col) {
    int piv = -1;
    for (int row = col; row < r; ++row)
      if (a[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) throw std::logic_error("singular Cartan matrix");
    std::swap(a[col], a[piv]);
    for (int row = 0; row < r; ++row) {
      if (row == col || a[row][col] == 0) continue;
      BigRat f = a[row][col] / a[col][col];
      for (int k = col; k <= r; ++k) a[row][k] -= f * a[col][k];
    }
  }
  std::vector<long long> limits(r);
  for (int i = 0; i < r; ++i) {
    BigRat v = a[i][r] / a[i][i];
    BigInt num = numerator(v), den = denominator(v);
    BigInt q = num / den;
    if (num < 0 && q * den != num) q -= 1;
    long long f = q.convert_to<long long>();
    limits[i] = f < 0 ? 0 : f;
  }
  return limits;
}

struct Dominant {
  std::vector<int> k;   // lam - mu on the simple roots
  std::vector<int> mu;  // fundamental coords
  int level = 0;
};

// All dominant weights below lam: every dominant mu with lam - mu a
// non-negative root combination is a weight of the irreducible.
std::vector<Dominant> dominant_weights(
    const std::vector<std::vector<int>>& cartan, const std::vector<int>& lam,
    double cell_cap) {
  const int r = static_cast<int>(cartan.size());
  auto limits = box_limits(cartan, lam);
  double cells = 1;
  for (long long k : limits) {
    cells *= static_cast<double>(k + 1);
    if (cells > cell_cap)
      throw ResourceError("dominant weight box exceeds the configured cap");
  }
  std::vector<std::vector<std::pair<int, int>>> col(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (cartan[j][i] != 0) col[i].push_back({j, cartan[j][i]});

  std::vector<long long> k(r, 0);
  std::vector<long long> mu(lam.begin(), lam.end());
  std::vector<Dominant> out;
  for (;;) {
    bool dominant = true;
    for (int j = 0; j < r; ++j)
      if (mu[j] < 0) {
        dominant = false;
        break;
      }
    if (dominant) {
      Dominant d;
      d.k.assign(k.begin(), k.end());
      d.mu.assign(mu.begin(), mu.end());
      d.level =
          static_cast<int>(std::accumulate(k.begin(), k.end(), 0LL));
      out.push_back(std::move(d));
    }
    int i = 0;
    while (i < r && k[i] == limits[i]) {
      for (auto [j, cj] : col[i]) mu[j] += cj * k[i];
      k[i] = 0;
      ++i;
    }
    if (i == r) break;
    k[i] += 1;
    for (auto [j, cj] : col[i]) mu[j] -= cj;
  }
  std::sort(out.begin(), out.end(), [](const Dominant& x, const Dominant& y) {
    if (x.level != y.level) return x.level < y.level;
    return x.mu < y.mu;
  });
  return out;
}

}  // namespace

WeightDiagram weight_diagram(RootSystemId id, const CVector& c,
                             std::size_t weight_cap) {
  BigInt dim = dimension(id, c);  // validates id and c
  if (dim > weight_cap)
    throw ResourceError("degree " + dim.str() + " exceeds the weight cap " +
                        std::to_string(weight_cap));
  RootSystemData data = build(id);
  const int r = id.rank;
  const int u = data.num_positive;

  std::vector<int> lam(r);
  for (int j = 0; j < r; ++j) {
    if (c[j] - 1 > std::numeric_limits<int>::max() / 4)
      throw ResourceError("weight coordinate too large");
    lam[j] = static_cast<int>(c[j] - 1);
  }
  auto d = symmetrizer(data.cartan);
  auto dominants = dominant_weights(data.cartan, lam,
                                    64.0 * static_cast<double>(weight_cap) +
                                        4096.0);

  // per-root tables: fundamental coords, height, and the sparse terms of
  // the pairing (x, root) = sum_j x_j * a_j * d_j
  struct RootTab {
    std::vector<int> b;
    int ht = 0;
    std::vector<std::pair<int, long long>> pair_terms;
  };
  std::vector<RootTab> roots(u);
  int ht_max = 1;
  for (int t = 0; t < u; ++t) {
    const auto& a = data.positive_roots[t].coeffs;
    RootTab& rt = roots[t];
    rt.b.assign(r, 0);
    for (int j = 0; j < r; ++j) {
      int s = 0;
      for (int i = 0; i < r; ++i) s += data.cartan[j][i] * a[i];
      rt.b[j] = s;
      if (a[j]) rt.pair_terms.push_back({j, static_cast<long long>(a[j]) * d[j]});
      rt.ht += a[j];
    }
    ht_max = std::max(ht_max, rt.ht);
  }

  // expand Weyl orbits of the dominant weights
  detail::VecIndex windex(r);
  std::vector<int> level_of;
  std::vector<std::uint32_t> dom_rep, dom_slot;
  std::vector<char> is_dom;
  auto push_weight = [&](std::uint64_t h, std::vector<int> w, int lvl,
                         std::uint32_t rep, bool dom_flag,
                         std::uint32_t slot) {
    std::uint32_t g = windex.insert(h, std::move(w));
    level_of.push_back(lvl);
    dom_rep.push_back(rep);
    dom_slot.push_back(slot);
    is_dom.push_back(dom_flag);
    if (windex.size() > weight_cap)
      throw ResourceError("weight count exceeds the cap " +
                          std::to_string(weight_cap));
    return g;
  };

  std::vector<std::uint32_t> queue;
  std::vector<int> w2(r);
  for (std::uint32_t ds = 0; ds < dominants.size(); ++ds) {
    const auto& dw = dominants[ds];
    std::uint32_t g0 = static_cast<std::uint32_t>(windex.size());
    push_weight(windex.hash_of(dw.mu), dw.mu, dw.level, g0, true, ds);
    queue.assign(1, g0);
    while (!queue.empty()) {
      std::uint32_t g = queue.back();
      queue.pop_back();
      const int lvl = level_of[g];
      const std::vector<int> w = windex.row(g);  // copy: rows reallocate
      for (int j = 0; j < r; ++j) {
        int wj = w[j];
        if (wj <= 0) continue;
        for (int i = 0; i < r; ++i) w2[i] = w[i] - wj * data.cartan[i][j];
        std::uint64_t h2 = windex.hash_of(w2);
        if (windex.find(h2, w2) >= 0) continue;
        queue.push_back(push_weight(h2, w2, lvl + wj, g0, false, 0));
      }
    }
  }

  const std::size_t total = windex.size();
  int max_level = 0;
  for (int lvl : level_of) max_level = std::max(max_level, lvl);
  std::vector<std::vector<std::uint32_t>> levels(max_level + 1);
  std::vector<std::uint32_t> offset(total);
  for (std::size_t g = 0; g < total; ++g) {
    offset[g] = static_cast<std::uint32_t>(levels[level_of[g]].size());
    levels[level_of[g]].push_back(static_cast<std::uint32_t>(g));
  }

  // level-by-level recursion; string sums telescope, so only the last
  // ht_max levels of S values are kept (ring buffer)
  std::vector<long long> mult(total, 0);
  const int window = ht_max + 1;
  std::vector<std::vector<__int128>> ring(window);
  std::vector<int> shifted(r);
  for (int l = 0; l <= max_level; ++l) {
    auto& slot = ring[l % window];
    slot.assign(levels[l].size() * static_cast<std::size_t>(u), 0);
    for (std::size_t oi = 0; oi < levels[l].size(); ++oi) {
      const std::uint32_t g = levels[l][oi];
      const std::vector<int>& w = windex.row(g);
      __int128 ssum = 0;
      for (int t = 0; t < u; ++t) {
        const RootTab& rt = roots[t];
        __int128 s = 0;
        const int lp = l - rt.ht;
        if (lp >= 0) {
          for (int i = 0; i < r; ++i) shifted[i] = w[i] + rt.b[i];
          long gp = windex.find(windex.hash_of(shifted), shifted);
          if (gp >= 0) {
            long long pairing = 0;
            for (auto [j, ad] : rt.pair_terms)
              pairing += static_cast<long long>(shifted[j]) * ad;
            s = static_cast<__int128>(mult[gp]) * pairing +
                ring[lp % window][offset[gp] * static_cast<std::size_t>(u) + t];
          }
        }
        slot[oi * static_cast<std::size_t>(u) + t] = s;
        ssum += s;
      }
      if (l == 0) {
        mult[g] = 1;  // the highest weight
      } else if (is_dom[g]) {
        const auto& dw = dominants[dom_slot[g]];
        long long denom = 0;
        for (int i = 0; i < r; ++i)
          denom += static_cast<long long>(dw.k[i]) * d[i] *
                   (static_cast<long long>(lam[i]) + w[i] + 2);
        __int128 num = 2 * ssum;
        if (denom <= 0 || num <= 0 || num % denom != 0)
          throw std::logic_error("multiplicity recursion left a remainder");
        mult[g] = static_cast<long long>(num / denom);
      } else {
        mult[g] = mult[dom_rep[g]];
      }
    }
  }

  WeightDiagram out;
  out.id = id;
  out.highest = lam;
  BigInt total_mult = 0;
  for (std::size_t g = 0; g < total; ++g) {
    out.mults.emplace(windex.row(g), mult[g]);
    total_mult += mult[g];
  }
  if (total_mult != dim)
    throw std::logic_error("diagram total " + total_mult.str() +
                           " does not match the degree " + dim.str());
  out.dim = std::move(dim);
  return out;
}

SeitzReport seitz_check(RootSystemId id, const CVector& c,
                        std::size_t weight_cap) {
  WeightDiagram diagram = weight_diagram(id, c, weight_cap);
  RootSystemData data = build(id);
  SeitzReport report;
  for (const auto& [w, m] : diagram.mults)
    report.max_mult = std::max(report.max_mult, m);
  report.dim = diagram.dim;
  report.coxeter_number = data.coxeter_number;
  report.bound =
      1.0 + diagram.dim.convert_to<double>() / data.coxeter_number;
  report.pass =
      BigInt(report.max_mult - 1) * data.coxeter_number <= diagram.dim;
  return report;
}

bool is_regular(const RootSystemData& data, const TorusElement& g) {
  const int r = data.id.rank;
  if (g.order < 2) throw std::invalid_argument("order must be >= 2");
  if (g.cochar.size() != static_cast<std::size_t>(r))
    throw std::invalid_argument("cocharacter has wrong length for " +
                                to_string(data.id));
  for (const Root& root : data.positive_roots) {
    long long s = 0;
    for (int j = 0; j < r; ++j) {
      long long bj = 0;
      for (int i = 0; i < r; ++i) bj += data.cartan[j][i] * root.coeffs[i];
      s += bj * (g.cochar[j] % g.order);
    }
    if (((s % g.order) + g.order) % g.order == 0) return false;
  }
  return true;
}

TorusElement find_regular_cocharacter(RootSystemId id, long long p) {
  RootSystemData data = build(id);
  if (p < 2) throw std::invalid_argument("order must be >= 2");
  const int r = id.rank;
  if (static_cast<double>(r) * std::log(static_cast<double>(p)) > 19.0)
    throw ResourceError("cocharacter search space too large");
  TorusElement g;
  g.order = p;
  g.cochar.assign(r, 0);
  for (;;) {
    if (is_regular(data, g)) return g;
    int i = r - 1;
    while (i >= 0 && g.cochar[i] == p - 1) g.cochar[i--] = 0;
    if (i < 0) break;
    g.cochar[i] += 1;
  }
  throw NoRegularElementError("no regular cocharacter of order " +
                              std::to_string(p) + " exists for " +
                              to_string(id));
}

EigenProfile eigen_profile(RootSystemId id, const CVector& c,
                           const TorusElement& g, std::size_t weight_cap) {
  RootSystemData data = build(id);
  if (!is_regular(data, g))
    throw std::domain_error("cocharacter is not regular for " + to_string(id));
  if (g.order > 10000000)
    throw ResourceError("order too large for a residue profile");
  WeightDiagram diagram = weight_diagram(id, c, weight_cap);
  EigenProfile profile;
  profile.order = g.order;
  profile.counts.assign(static_cast<std::size_t>(g.order), 0);
  for (const auto& [w, m] : diagram.mults) {
    long long e = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
      e += w[j] * (g.cochar[j] % g.order);
    e = ((e % g.order) + g.order) % g.order;
    profile.counts[static_cast<std::size_t>(e)] += m;
  }
  profile.w_max =
      *std::max_element(profile.counts.begin(), profile.counts.end());
  return profile;
}

EigenBounds eigenspace_bounds(RootSystemId id, const CVector& c,
                              const TorusElement& g, std::size_t weight_cap) {
  const long long p = g.order;
  if (p < 2) throw std::invalid_argument("order must be >= 2");
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0)
      throw std::invalid_argument(
          "order must be prime for the eigenspace sandwich");
  EigenProfile profile = eigen_profile(id, c, g, weight_cap);
  RootSystemData data = build(id);
  BigInt dim = dimension(id, c);

  EigenBounds out;
  out.w_max = profile.w_max;
  out.lower = BigRat(dim, BigInt(p));
  out.weyl_term =
      data.weyl_order.convert_to<double>() /
      std::pow(2.0 * std::sin(std::numbers::pi / static_cast<double>(p)),
               static_cast<double>(data.num_positive));
  out.upper = out.lower.convert_to<double>() +
              static_cast<double>(p - 1) * out.weyl_term / static_cast<double>(p);
  bool lower_ok = dim <= BigInt(out.w_max) * p;  // dim/p <= w_max, exactly
  bool upper_ok = static_cast<double>(out.w_max) <= out.upper;
  out.pass = lower_ok && upper_ok;
  return out;
}

}  // namespace repgrowth
