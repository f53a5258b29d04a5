#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "repgrowth/bigint.hpp"
#include "repgrowth/errors.hpp"
#include "repgrowth/root_system.hpp"

using namespace repgrowth;

namespace {

// ---- oracles -------------------------------------------------------------

using Coeffs = std::vector<int>;

std::set<Coeffs> root_set(const RootSystemData& data) {
  std::set<Coeffs> out;
  for (const auto& root : data.positive_roots) out.insert(root.coeffs);
  return out;
}

// Symmetrizer d_i > 0 with d_i * cartan[i][j] = d_j * cartan[j][i], i.e.
// (alpha_i, alpha_i)/2 up to a global scale. Independent of the library's
// internal version: plain rational BFS over the Dynkin graph.
std::vector<BigRat> oracle_symmetrizer(const std::vector<std::vector<int>>& m) {
  const int r = static_cast<int>(m.size());
  std::vector<BigRat> d(r, 0);
  for (int start = 0; start < r; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < r; ++j) {
        if (m[i][j] == 0 || d[j] != 0) continue;
        d[j] = d[i] * m[i][j] / m[j][i];
        stack.push_back(j);
      }
    }
  }
  return d;
}

// Coroot of a positive root a = sum a_i alpha_i, written in the basis of the
// simple coroots: coefficient of alpha_i^vee is a_i d_i / d_a where
// d_a = (a,a)/2 = (1/2) sum_{i,j} a_i a_j d_i cartan[i][j]. The set of these
// vectors is the positive system of the dual root system, label for label.
std::set<Coeffs> oracle_coroot_set(const RootSystemData& data) {
  auto d = oracle_symmetrizer(data.cartan);
  const int r = data.id.rank;
  std::set<Coeffs> out;
  for (const auto& root : data.positive_roots) {
    BigRat norm = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        norm += BigRat(root.coeffs[i]) * root.coeffs[j] * d[i] *
                data.cartan[i][j];
    norm /= 2;
    Coeffs cv(r);
    for (int i = 0; i < r; ++i) {
      BigRat x = BigRat(root.coeffs[i]) * d[i] / norm;
      REQUIRE(boost::multiprecision::denominator(x) == 1);
      cv[i] = static_cast<int>(boost::multiprecision::numerator(x));
    }
    out.insert(cv);
  }
  return out;
}

// Weyl group order by breadth-first closure over the faithful action on root
// coefficient vectors: an element is stored as the images of the simple
// basis vectors; s_i subtracts (row i of the Cartan matrix applied to a)
// from coordinate i.
long long oracle_weyl_order(const RootSystemData& data) {
  const int r = data.id.rank;
  auto reflect = [&](int i, Coeffs a) {
    int b = 0;
    for (int k = 0; k < r; ++k) b += data.cartan[i][k] * a[k];
    a[i] -= b;
    return a;
  };
  using Matrix = std::vector<Coeffs>;  // columns: images of alpha_j
  Matrix identity(r, Coeffs(r, 0));
  for (int j = 0; j < r; ++j) identity[j][j] = 1;
  std::set<Matrix> seen{identity};
  std::vector<Matrix> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& w : frontier)
      for (int i = 0; i < r; ++i) {
        Matrix sw(r);
        for (int j = 0; j < r; ++j) sw[j] = reflect(i, w[j]);
        if (seen.insert(sw).second) next.push_back(sw);
      }
    frontier = std::move(next);
  }
  return static_cast<long long>(seen.size());
}

Coeffs interval(int r, int lo, int hi) {  // ones on [lo, hi], 0-indexed
  Coeffs v(r, 0);
  for (int k = lo; k <= hi; ++k) v[k] = 1;
  return v;
}

}  // namespace

TEST_CASE("id parsing and validation") {
  CHECK(parse_root_system_id("A2") == RootSystemId{Family::A, 2});
  CHECK(parse_root_system_id("d10") == RootSystemId{Family::D, 10});
  CHECK(parse_root_system_id("e8") == RootSystemId{Family::E, 8});
  CHECK(to_string(RootSystemId{Family::G, 2}) == "G2");
  CHECK_THROWS_AS(parse_root_system_id(""), InvalidIdError);
  CHECK_THROWS_AS(parse_root_system_id("H4"), InvalidIdError);
  CHECK_THROWS_AS(parse_root_system_id("A"), InvalidIdError);
  CHECK_THROWS_AS(parse_root_system_id("A0"), InvalidIdError);
  CHECK_THROWS_AS(parse_root_system_id("A2x"), InvalidIdError);
  CHECK_THROWS_AS(parse_root_system_id("2A"), InvalidIdError);

  CHECK_THROWS_AS(build({Family::B, 1}), InvalidIdError);
  CHECK_THROWS_AS(build({Family::D, 2}), InvalidIdError);
  CHECK_THROWS_AS(build({Family::E, 9}), InvalidIdError);
  CHECK_THROWS_AS(build({Family::F, 3}), InvalidIdError);
  CHECK_THROWS_AS(build({Family::G, 3}), InvalidIdError);
  // alias errors name the canonical id
  try {
    build({Family::D, 3});
    FAIL("D3 must be rejected");
  } catch (const InvalidIdError& e) {
    CHECK(std::string(e.what()).find("A3") != std::string::npos);
  }
  try {
    build({Family::C, 1});
    FAIL("C1 must be rejected");
  } catch (const InvalidIdError& e) {
    CHECK(std::string(e.what()).find("A1") != std::string::npos);
  }
}

TEST_CASE("A2 positive roots match the hand closure") {
  auto data = build({Family::A, 2});
  CHECK(data.num_positive == 3);
  CHECK(data.coxeter_number == 3);
  CHECK(data.weyl_order == 6);
  std::set<Coeffs> expected{{1, 0}, {0, 1}, {1, 1}};
  CHECK(root_set(data) == expected);
}

TEST_CASE("A1 and E8 summary data") {
  auto a1 = build({Family::A, 1});
  CHECK(a1.num_positive == 1);
  CHECK(a1.coxeter_number == 2);
  CHECK(a1.weyl_order == 2);

  auto e8 = build({Family::E, 8});
  CHECK(e8.num_positive == 120);
  CHECK(e8.coxeter_number == 30);
  CHECK(e8.weyl_order == 696729600);
}

TEST_CASE("positive root counts, Coxeter identity, ordering") {
  std::vector<RootSystemId> ids;
  for (int r = 1; r <= 12; ++r) ids.push_back({Family::A, r});
  for (int r = 2; r <= 10; ++r) ids.push_back({Family::B, r});
  for (int r = 2; r <= 10; ++r) ids.push_back({Family::C, r});
  for (int r = 4; r <= 10; ++r) ids.push_back({Family::D, r});
  ids.push_back({Family::E, 6});
  ids.push_back({Family::E, 7});
  ids.push_back({Family::E, 8});
  ids.push_back({Family::F, 4});
  ids.push_back({Family::G, 2});

  for (auto id : ids) {
    CAPTURE(to_string(id));
    auto data = build(id);
    const int r = id.rank;
    long long expected = 0;
    switch (id.family) {
      case Family::A: expected = 1LL * r * (r + 1) / 2; break;
      case Family::B:
      case Family::C: expected = 1LL * r * r; break;
      case Family::D: expected = 1LL * r * (r - 1); break;
      case Family::E: expected = r == 6 ? 36 : r == 7 ? 63 : 120; break;
      case Family::F: expected = 24; break;
      case Family::G: expected = 6; break;
    }
    CHECK(data.num_positive == expected);
    CHECK(static_cast<long long>(data.positive_roots.size()) == expected);
    CHECK(2LL * data.num_positive == 1LL * data.coxeter_number * r);

    // sorted by (height, lex), first r entries are the simple roots
    for (std::size_t i = 0; i + 1 < data.positive_roots.size(); ++i) {
      const auto& x = data.positive_roots[i];
      const auto& y = data.positive_roots[i + 1];
      bool ordered = x.height() < y.height() ||
                     (x.height() == y.height() && x.coeffs < y.coeffs);
      CHECK(ordered);
    }
    // height-1 block is the simple roots; lex order puts e_{r-1} first
    for (int i = 0; i < r; ++i) {
      CHECK(data.positive_roots[i].height() == 1);
      CHECK(data.positive_roots[i].coeffs[r - 1 - i] == 1);
    }

    // Cartan matrix shape
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (i == j) {
          CHECK(data.cartan[i][j] == 2);
        } else {
          CHECK(data.cartan[i][j] <= 0);
          CHECK(data.cartan[i][j] >= -3);
        }
      }
  }
}

TEST_CASE("classical families agree with the generic string closure") {
  std::vector<RootSystemId> ids;
  for (int r = 1; r <= 9; ++r) ids.push_back({Family::A, r});
  for (int r = 2; r <= 9; ++r) ids.push_back({Family::B, r});
  for (int r = 2; r <= 9; ++r) ids.push_back({Family::C, r});
  for (int r = 4; r <= 9; ++r) ids.push_back({Family::D, r});
  for (auto id : ids) {
    CAPTURE(to_string(id));
    auto data = build(id);
    auto generic = generate_positive_roots(cartan_matrix(id));
    std::set<Coeffs> a = root_set(data), b;
    for (const auto& root : generic) b.insert(root.coeffs);
    CHECK(a == b);
  }
}

TEST_CASE("A_r roots are exactly the consecutive interval sums") {
  for (int r = 1; r <= 30; ++r) {
    auto data = build({Family::A, r});
    auto roots = root_set(data);
    std::set<Coeffs> expected;
    for (int i = 0; i < r; ++i)
      for (int k = i; k < r; ++k) expected.insert(interval(r, i, k));
    CHECK(roots == expected);
  }
}

TEST_CASE("B_r contains the tail-interval roots") {
  // for 1 <= p < q <= r the sum over [p, q-1] plus the sum over [q, r]
  // has coefficient one on [p, r]; it must be a positive root
  for (int r = 2; r <= 20; ++r) {
    auto roots = root_set(build({Family::B, r}));
    for (int p = 1; p < r; ++p)
      for (int q = p + 1; q <= r; ++q)
        CHECK(roots.count(interval(r, p - 1, r - 1)) == 1);
  }
}

TEST_CASE("C_r contains the long tail roots") {
  // sum over [p, r-1] plus the last simple root, for 1 <= p <= r-1
  for (int r = 2; r <= 20; ++r) {
    auto roots = root_set(build({Family::C, r}));
    for (int p = 1; p < r; ++p) {
      Coeffs v = interval(r, p - 1, r - 2);
      v[r - 1] += 1;
      CHECK(roots.count(v) == 1);
    }
  }
}

TEST_CASE("D_r contains the doubled-interior roots") {
  for (int r = 4; r <= 20; ++r) {
    auto roots = root_set(build({Family::D, r}));
    // ones on [p, q-1], twos on [q, r-2], ones on the two fork nodes
    for (int p = 1; p < r; ++p)
      for (int q = p + 1; q <= r - 1; ++q) {
        Coeffs v(r, 0);
        for (int k = p - 1; k <= r - 1; ++k) v[k] = 1;
        for (int k = q - 1; k <= r - 3; ++k) v[k] += 1;
        CHECK(roots.count(v) == 1);
      }
    // ones on [p, r-2] plus either fork node
    for (int p = 1; p <= r - 1; ++p) {
      Coeffs a = interval(r, p - 1, r - 3);
      Coeffs b = a;
      a[r - 2] += 1;
      b[r - 1] += 1;
      CHECK(roots.count(a) == 1);
      CHECK(roots.count(b) == 1);
    }
  }
}

TEST_CASE("dual ids and dual invariants") {
  CHECK(dual({Family::A, 5}) == RootSystemId{Family::A, 5});
  CHECK(dual({Family::B, 3}) == RootSystemId{Family::C, 3});
  CHECK(dual({Family::C, 7}) == RootSystemId{Family::B, 7});
  CHECK(dual({Family::G, 2}) == RootSystemId{Family::G, 2});
  CHECK(dual({Family::F, 4}) == RootSystemId{Family::F, 4});

  std::vector<RootSystemId> ids{{Family::A, 4}, {Family::B, 5}, {Family::C, 5},
                                {Family::D, 6}, {Family::E, 7}, {Family::F, 4},
                                {Family::G, 2}};
  for (auto id : ids) {
    auto a = build(id);
    auto b = build(dual(id));
    CHECK(a.num_positive == b.num_positive);
    CHECK(a.coxeter_number == b.coxeter_number);
  }
}

TEST_CASE("coroot construction recovers the dual positive system") {
  // simply laced and B/C: label for label
  for (auto id : std::vector<RootSystemId>{{Family::A, 3},
                                           {Family::B, 3},
                                           {Family::C, 3},
                                           {Family::B, 5},
                                           {Family::D, 5},
                                           {Family::E, 6}}) {
    CAPTURE(to_string(id));
    auto coroots = oracle_coroot_set(build(id));
    CHECK(coroots == root_set(build(dual(id))));
  }

  // G2: self-dual via the label swap
  {
    auto coroots = oracle_coroot_set(build({Family::G, 2}));
    std::set<Coeffs> swapped;
    for (const auto& root : build({Family::G, 2}).positive_roots)
      swapped.insert({root.coeffs[1], root.coeffs[0]});
    CHECK(coroots == swapped);
  }

  // F4: self-dual via label reversal
  {
    auto coroots = oracle_coroot_set(build({Family::F, 4}));
    std::set<Coeffs> reversed;
    for (const auto& root : build({Family::F, 4}).positive_roots) {
      Coeffs v(root.coeffs.rbegin(), root.coeffs.rend());
      reversed.insert(v);
    }
    CHECK(coroots == reversed);
  }
}

TEST_CASE("Weyl order formulas validated by small-rank brute force") {
  for (auto id : std::vector<RootSystemId>{{Family::A, 1},
                                           {Family::A, 2},
                                           {Family::A, 3},
                                           {Family::B, 2},
                                           {Family::B, 3},
                                           {Family::C, 3},
                                           {Family::G, 2}}) {
    CAPTURE(to_string(id));
    auto data = build(id);
    CHECK(data.weyl_order == oracle_weyl_order(data));
  }
  CHECK(build({Family::D, 4}).weyl_order == 192);
  CHECK(build({Family::F, 4}).weyl_order == 1152);
  CHECK(build({Family::E, 6}).weyl_order == 51840);
  CHECK(build({Family::E, 7}).weyl_order == 2903040);
}

TEST_CASE("fundamental coordinates") {
  auto a2 = build({Family::A, 2});
  CHECK(fundamental_coords(a2, Root{{1, 0}}) == std::vector<int>{2, -1});
  CHECK(fundamental_coords(a2, Root{{1, 1}}) == std::vector<int>{1, 1});
  CHECK(fundamental_coords(a2, Root{{-1, -1}}) == std::vector<int>{-1, -1});
  auto a3 = build({Family::A, 3});
  CHECK(fundamental_coords(a3, Root{{1, 1, 1}}) == std::vector<int>{1, 0, 1});
  CHECK_THROWS_AS(fundamental_coords(a3, Root{{2, 0, 0}}), std::domain_error);
  CHECK_THROWS_AS(fundamental_coords(a3, Root{{1, 0}}), std::domain_error);
  // highest root of G2 pairs to (0, 1): the adjoint node
  auto g2 = build({Family::G, 2});
  CHECK(fundamental_coords(g2, Root{{3, 2}}) == std::vector<int>{0, 1});
}

TEST_CASE("diagram symmetries") {
  auto perms_of = [](RootSystemId id) { return diagram_symmetries(id); };
  CHECK(perms_of({Family::A, 1}).size() == 1);
  CHECK(perms_of({Family::A, 2}).size() == 2);
  CHECK(perms_of({Family::A, 7}).size() == 2);
  CHECK(perms_of({Family::B, 3}).size() == 1);
  CHECK(perms_of({Family::C, 5}).size() == 1);
  CHECK(perms_of({Family::D, 4}).size() == 6);
  CHECK(perms_of({Family::D, 5}).size() == 2);
  CHECK(perms_of({Family::E, 6}).size() == 2);
  CHECK(perms_of({Family::E, 7}).size() == 1);
  CHECK(perms_of({Family::F, 4}).size() == 1);
  CHECK(perms_of({Family::G, 2}).size() == 1);

  // every listed permutation preserves the Cartan matrix
  for (auto id : std::vector<RootSystemId>{{Family::A, 5},
                                           {Family::D, 4},
                                           {Family::D, 6},
                                           {Family::E, 6}}) {
    auto cartan = cartan_matrix(id);
    auto perms = perms_of(id);
    for (const auto& p : perms) {
      for (int i = 0; i < id.rank; ++i)
        for (int j = 0; j < id.rank; ++j)
          CHECK(cartan[p[i]][p[j]] == cartan[i][j]);
    }
    // identity is present
    std::vector<int> ident(id.rank);
    std::iota(ident.begin(), ident.end(), 0);
    CHECK(std::count(perms.begin(), perms.end(), ident) == 1);
  }
}

TEST_CASE("census canonicalization of ids") {
  CHECK(is_census_canonical({Family::C, 2}));
  CHECK_FALSE(is_census_canonical({Family::B, 2}));
  CHECK(is_census_canonical({Family::B, 3}));
  CHECK(is_census_canonical({Family::A, 1}));
}
