#include "repgrowth/census.hpp"

#include <algorithm>
#include <stdexcept>

#include "repgrowth/enumerate.hpp"
#include "repgrowth/errors.hpp"

namespace repgrowth {

namespace {

bool pair_less(const SimplePair& a, const SimplePair& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.id != b.id) return a.id < b.id;
  return a.c_orbit < b.c_orbit;
}

std::vector<RootSystemId> table_ids(long long max_dim) {
  std::vector<RootSystemId> ids;
  for (long long r = 1; r + 1 <= max_dim; ++r)
    ids.push_back({Family::A, static_cast<int>(r)});
  for (long long r = 3; 2 * r + 1 <= max_dim; ++r)
    ids.push_back({Family::B, static_cast<int>(r)});
  for (long long r = 2; 2 * r <= max_dim; ++r)
    ids.push_back({Family::C, static_cast<int>(r)});
  for (long long r = 4; 2 * r <= max_dim; ++r)
    ids.push_back({Family::D, static_cast<int>(r)});
  if (max_dim >= 27) ids.push_back({Family::E, 6});
  if (max_dim >= 56) ids.push_back({Family::E, 7});
  if (max_dim >= 248) ids.push_back({Family::E, 8});
  if (max_dim >= 26) ids.push_back({Family::F, 4});
  if (max_dim >= 7) ids.push_back({Family::G, 2});
  return ids;
}

// combinations with repetition: C(options - 1 + e, e)
long long multiset_count(long long options, long long e) {
  __int128 res = 1;
  for (long long i = 1; i <= e; ++i) {
    res = res * (options - 1 + i);
    res /= i;  // exact: res is a binomial prefix
  }
  return static_cast<long long>(res);
}

long long count_rec(long long m, long long min_d, const SimplePairTable& t) {
  if (m == 1) return 1;
  long long total = 0;
  for (long long v = min_d; v <= m; ++v) {
    if (m % v != 0) continue;
    long long options = static_cast<long long>(t.pairs(v).size());
    if (options == 0) continue;
    long long rest = m;
    for (long long e = 1; rest % v == 0; ++e) {
      rest /= v;
      total += multiset_count(options, e) * count_rec(rest, v + 1, t);
    }
  }
  return total;
}

void list_rec(long long m, long long min_d, const SimplePairTable& t,
              long long n, std::vector<SimplePair>& acc,
              std::vector<CensusRecord>& out);

// choose `left` more factors of degree v from pool[from..], then move on
void pick_rec(const std::vector<SimplePair>& pool, std::size_t from,
              long long left, long long next_m, long long next_min,
              const SimplePairTable& t, long long n,
              std::vector<SimplePair>& acc, std::vector<CensusRecord>& out) {
  if (left == 0) {
    list_rec(next_m, next_min, t, n, acc, out);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    acc.push_back(pool[i]);
    pick_rec(pool, i, left - 1, next_m, next_min, t, n, acc, out);
    acc.pop_back();
  }
}

void list_rec(long long m, long long min_d, const SimplePairTable& t,
              long long n, std::vector<SimplePair>& acc,
              std::vector<CensusRecord>& out) {
  if (m == 1) {
    out.push_back({n, acc});
    return;
  }
  for (long long v = min_d; v <= m; ++v) {
    if (m % v != 0) continue;
    const auto& pool = t.pairs(v);
    if (pool.empty()) continue;
    long long rest = m;
    for (long long e = 1; rest % v == 0; ++e) {
      rest /= v;
      pick_rec(pool, 0, e, rest, v + 1, t, n, acc, out);
    }
  }
}

}  // namespace

CVector canonical_weight(RootSystemId id, const CVector& c) {
  if (c.size() != static_cast<std::size_t>(id.rank))
    throw std::invalid_argument("weight vector has wrong length for " +
                                to_string(id));
  auto perms = diagram_symmetries(id);
  CVector best = c;
  CVector tmp(c.size());
  for (const auto& p : perms) {
    for (std::size_t j = 0; j < c.size(); ++j)
      tmp[static_cast<std::size_t>(p[j])] = c[j];
    if (tmp < best) best = tmp;
  }
  return best;
}

SimplePairTable::SimplePairTable(long long max_dim) : max_dim_(max_dim) {
  if (max_dim < 1) throw std::invalid_argument("max_dim must be >= 1");
  if (max_dim > 20000)
    throw ResourceError("pair table beyond degree 20000 not supported");
  for (RootSystemId id : table_ids(max_dim)) {
    if (!is_census_canonical(id)) continue;  // keeps C_2 over B_2
    CVector ones(id.rank, 1);
    for (const auto& rec : irreps_up_to(id, max_dim)) {
      if (rec.c == ones) continue;
      // each orbit is kept exactly once, at its lex-least member
      if (canonical_weight(id, rec.c) != rec.c) continue;
      long long dim = rec.dim.convert_to<long long>();
      by_dim_[dim].push_back({id, rec.c, dim});
    }
  }
  for (auto& [dim, bucket] : by_dim_)
    std::sort(bucket.begin(), bucket.end(), [](const SimplePair& a,
                                               const SimplePair& b) {
      if (a.id != b.id) return a.id < b.id;
      return a.c_orbit < b.c_orbit;
    });
}

const std::vector<SimplePair>& SimplePairTable::pairs(long long n) const {
  static const std::vector<SimplePair> empty;
  auto it = by_dim_.find(n);
  return it == by_dim_.end() ? empty : it->second;
}

std::vector<SimplePair> SimplePairTable::all() const {
  std::vector<SimplePair> out;
  for (const auto& [dim, bucket] : by_dim_)
    out.insert(out.end(), bucket.begin(), bucket.end());
  return out;  // map order is degree order; buckets are sorted
}

std::vector<SimplePair> simple_pairs(long long n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  return SimplePairTable(n).pairs(n);
}

long long census_count(long long n, const SimplePairTable& table) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n == 1) return 0;
  if (table.max_dim() < n)
    throw std::invalid_argument("table is too small for n");
  return count_rec(n, 2, table);
}

long long census_count(long long n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n == 1) return 0;
  return census_count(n, SimplePairTable(n));
}

std::vector<CensusRecord> census_list(long long n,
                                      const SimplePairTable& table) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<CensusRecord> out;
  if (n == 1) return out;
  if (table.max_dim() < n)
    throw std::invalid_argument("table is too small for n");
  std::vector<SimplePair> acc;
  list_rec(n, 2, table, n, acc, out);
  std::sort(out.begin(), out.end(),
            [](const CensusRecord& a, const CensusRecord& b) {
              return std::lexicographical_compare(
                  a.factors.begin(), a.factors.end(), b.factors.begin(),
                  b.factors.end(), pair_less);
            });
  return out;
}

std::vector<CensusRecord> census_list(long long n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n == 1) return {};
  return census_list(n, SimplePairTable(n));
}

}  // namespace repgrowth
