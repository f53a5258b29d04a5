#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "repgrowth/enumerate.hpp"
#include "repgrowth/root_system.hpp"
#include "repgrowth/weyl_dim.hpp"
#include "repgrowth/zeta_bounds.hpp"

using namespace repgrowth;

namespace {

// ---- oracle ----------------------------------------------------------------
// Plain nested-loop sweep. Every factor (sum a c)/(sum a) of the degree
// product is >= 1 and the r singleton rows contribute c_j exactly, so the
// degree is at least prod_j c_j; bounding that product by N is enough for
// completeness and keeps the sweep polylogarithmic per coordinate.
std::vector<IrrepRecord> oracle_irreps(RootSystemId id, long long N) {
  std::vector<IrrepRecord> out;
  CVector c(id.rank, 1);
  auto rec = [&](auto&& self, int j, long long prod) -> void {
    if (j == id.rank) {
      BigInt d = dimension(id, c);
      if (d <= N) out.push_back({c, d});
      return;
    }
    for (c[j] = 1; prod * c[j] <= N; ++c[j]) self(self, j + 1, prod * c[j]);
    c[j] = 1;
  };
  rec(rec, 0, 1);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.dim != y.dim ? x.dim < y.dim : x.c < y.c;
  });
  return out;
}

bool same_records(const std::vector<IrrepRecord>& a,
                  const std::vector<IrrepRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].c != b[i].c || a[i].dim != b[i].dim) return false;
  return true;
}

RootSystemId ID(Family f, int r) { return {f, r}; }

}  // namespace

TEST_CASE("search equals the rectangle sweep") {
  std::vector<std::pair<RootSystemId, long long>> cases{
      {ID(Family::A, 1), 2000}, {ID(Family::A, 2), 2000},
      {ID(Family::B, 2), 2000}, {ID(Family::C, 2), 2000},
      {ID(Family::G, 2), 2000}, {ID(Family::A, 3), 5000},
      {ID(Family::B, 3), 5000}, {ID(Family::C, 3), 5000}};
  for (auto [id, N] : cases) {
    CAPTURE(to_string(id));
    CHECK(same_records(irreps_up_to(id, N), oracle_irreps(id, N)));
  }
}

TEST_CASE("pinned small enumerations") {
  auto a1 = irreps_up_to(ID(Family::A, 1), 5);
  REQUIRE(a1.size() == 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(a1[k].c == CVector{k + 1});
    CHECK(a1[k].dim == k + 1);
  }

  auto a2 = irreps_up_to(ID(Family::A, 2), 3);
  REQUIRE(a2.size() == 3);
  CHECK(a2[0].c == CVector{1, 1});
  CHECK(a2[0].dim == 1);
  CHECK(a2[1].c == CVector{1, 2});  // lex order inside equal degree
  CHECK(a2[1].dim == 3);
  CHECK(a2[2].c == CVector{2, 1});
  CHECK(a2[2].dim == 3);

  auto a9 = irreps_up_to(ID(Family::A, 9), 6);
  REQUIRE(a9.size() == 1);
  CHECK(a9[0].c == CVector(9, 1));
}

TEST_CASE("records are sorted, unique, and self-consistent") {
  auto records = irreps_up_to(ID(Family::A, 2), 100);
  std::set<CVector> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].dim == dimension(ID(Family::A, 2), records[i].c));
    CHECK(seen.insert(records[i].c).second);
    if (i > 0) {
      bool ordered = records[i - 1].dim < records[i].dim ||
                     (records[i - 1].dim == records[i].dim &&
                      records[i - 1].c < records[i].c);
      CHECK(ordered);
    }
  }
}

TEST_CASE("thread splitting is invisible in the output") {
  for (auto [id, N] : std::vector<std::pair<RootSystemId, long long>>{
           {ID(Family::A, 2), 3000}, {ID(Family::B, 3), 4000}}) {
    auto seq = irreps_up_to(id, N, 1);
    for (int threads : {2, 3, 8})
      CHECK(same_records(seq, irreps_up_to(id, N, threads)));
  }
}

TEST_CASE("counting function") {
  CHECK(r_n(ID(Family::A, 1), 4) == 4);
  CHECK(r_n(ID(Family::A, 2), 3) == 3);
  CHECK(r_n(ID(Family::A, 2), 2) == 1);
  for (auto id : {ID(Family::A, 3), ID(Family::C, 2), ID(Family::E, 6)})
    CHECK(r_n(id, 1) == 1);
  long long prev = 0;
  for (long long n : {1, 2, 3, 5, 8, 13, 30, 80, 200}) {
    long long cur = r_n(ID(Family::A, 2), n);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("partial zeta sums") {
  auto w1 = witten_partial(ID(Family::C, 2), 0.9, 1);
  CHECK(w1.partial_sum == 1.0);
  CHECK(w1.count == 1);

  auto w2 = witten_partial(ID(Family::A, 1), 2.0, 10000);
  const double pi = 3.14159265358979323846;
  CHECK(std::fabs(w2.partial_sum - pi * pi / 6) < 1e-4);
  CHECK(w2.count == 10000);

  // bounded by the zeta product of the dual system, monotone in the cutoff
  double prev = 0.0;
  for (long long N : {10, 100, 1000, 10000}) {
    auto w = witten_partial(ID(Family::A, 2), 1.0, N);
    CHECK(w.partial_sum >= prev);
    prev = w.partial_sum;
  }
  CHECK(prev <= z_bound(dual(ID(Family::A, 2)), 1.0));

  auto wg = witten_partial(ID(Family::G, 2), 1.0, 5000);
  CHECK(wg.partial_sum <= z_bound(dual(ID(Family::G, 2)), 1.0));

  CHECK_THROWS_AS(witten_partial(ID(Family::A, 1), 0.0, 10),
                  std::invalid_argument);
}

TEST_CASE("degree floor verification") {
  auto a1 = verify_thm1(ID(Family::A, 1), 1000);
  CHECK(a1.pass);
  CHECK(a1.count == 1000);
  REQUIRE(a1.equalities.size() == 1000);
  CHECK(a1.equalities.front() == 1);
  CHECK(a1.equalities.back() == 1000);

  auto a2 = verify_thm1(ID(Family::A, 2), 10000);
  CHECK(a2.pass);
  CHECK(a2.equalities == std::vector<long long>{1, 3});

  auto d4 = verify_thm1(ID(Family::D, 4), 994);
  CHECK(d4.pass);
  CHECK(d4.equalities == std::vector<long long>{1});

  auto g2 = verify_thm1(ID(Family::G, 2), 2000, 4);
  CHECK(g2.pass);
  CHECK(g2.equalities == std::vector<long long>{1});
}

TEST_CASE("path-numbered families dominate the A chain record by record") {
  for (auto [id, N] : std::vector<std::pair<RootSystemId, long long>>{
           {ID(Family::C, 3), 2000}, {ID(Family::G, 2), 2000},
           {ID(Family::B, 4), 2000}, {ID(Family::F, 4), 5000}}) {
    CAPTURE(to_string(id));
    for (const auto& rec : irreps_up_to(id, N))
      CHECK(rec.dim >= dimension(ID(Family::A, id.rank), rec.c));
  }
}
