#include "repgrowth/root_system.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "vec_index.hpp"

namespace repgrowth {

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Positive-root counts, used as a consistency check after closure.
int expected_num_positive(RootSystemId id) {
  int r = id.rank;
  switch (id.family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

void sort_roots(std::vector<Root>& roots) {
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
    int hx = x.height(), hy = y.height();
    if (hx != hy) return hx < hy;
    return x.coeffs < y.coeffs;
  });
}

// Direct constructions for the classical families (much cheaper than the
// closure at high rank). Node numbering matches cartan_matrix.
std::vector<Root> classical_positive_roots(RootSystemId id) {
  const int r = id.rank;
  std::vector<Root> roots;
  auto make = [&]() -> std::vector<int>& {
    roots.push_back(Root{std::vector<int>(r, 0)});
    return roots.back().coeffs;
  };
  auto fill = [](std::vector<int>& v, int lo, int hi, int val) {
    for (int k = lo; k <= hi; ++k) v[k] = val;
  };
  switch (id.family) {
    case Family::A:
      for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) fill(make(), i, j, 1);
      break;
    case Family::B:
      // e_i - e_j, e_i, e_i + e_j with e_i = a_i + ... + a_{r-1}
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) fill(make(), i, j - 1, 1);
      for (int i = 0; i < r; ++i) fill(make(), i, r - 1, 1);
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          auto& v = make();
          fill(v, i, j - 1, 1);
          fill(v, j, r - 1, 2);
        }
      break;
    case Family::C:
      // e_i - e_j, 2 e_i, e_i + e_j with 2 e_i = 2 a_i + ... + a_{r-1}
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) fill(make(), i, j - 1, 1);
      for (int i = 0; i < r; ++i) {
        auto& v = make();
        fill(v, i, r - 2, 2);
        v[r - 1] = 1;
      }
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          auto& v = make();
          fill(v, i, j - 1, 1);
          fill(v, j, r - 2, 2);
          v[r - 1] = 1;
        }
      break;
    case Family::D:
      // e_i - e_j, and e_i + e_j built on the fork a_{r-2}, a_{r-1}
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) fill(make(), i, j - 1, 1);
      for (int i = 0; i < r - 1; ++i) {
        auto& v = make();
        fill(v, i, r - 3, 1);
        v[r - 1] = 1;  // e_i + e_{r-1}
      }
      for (int i = 0; i < r - 2; ++i)
        for (int j = i + 1; j < r - 1; ++j) {
          auto& v = make();
          fill(v, i, j - 1, 1);
          fill(v, j, r - 3, 2);
          v[r - 2] = 1;
          v[r - 1] = 1;  // e_i + e_j, j <= r-2
        }
      break;
    default:
      throw std::logic_error("classical_positive_roots: not a classical id");
  }
  sort_roots(roots);
  return roots;
}

std::string bad_rank_message(RootSystemId id) {
  std::string name = to_string(id);
  switch (id.family) {
    case Family::B:
    case Family::C:
      if (id.rank == 1) return name + " denotes the same system as A1; use A1";
      break;
    case Family::D:
      if (id.rank == 1) return name + " denotes the same system as A1; use A1";
      if (id.rank == 2) return name + " is not simple (it is A1 x A1)";
      if (id.rank == 3) return name + " denotes the same system as A3; use A3";
      break;
    case Family::E:
      if (id.rank == 4) return name + " denotes the same system as A4; use A4";
      if (id.rank == 5) return name + " denotes the same system as D5; use D5";
      break;
    default:
      break;
  }
  return "invalid root system id " + name + ": rank out of range";
}

}  // namespace

std::string to_string(RootSystemId id) {
  return std::string(1, static_cast<char>(id.family)) + std::to_string(id.rank);
}

RootSystemId parse_root_system_id(std::string_view text) {
  if (text.size() < 2)
    throw InvalidIdError("cannot parse root system id '" + std::string(text) +
                         "': expected a family letter followed by a rank");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (f < 'A' || f > 'G')
    throw InvalidIdError("cannot parse root system id '" + std::string(text) +
                         "': family must be one of A..G");
  long rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InvalidIdError("cannot parse root system id '" + std::string(text) +
                           "': rank must be a decimal number");
    rank = rank * 10 + (text[i] - '0');
    if (rank > 1000000)
      throw InvalidIdError("cannot parse root system id '" + std::string(text) +
                           "': rank out of range");
  }
  RootSystemId id{static_cast<Family>(f), static_cast<int>(rank)};
  validate_id(id);
  return id;
}

void validate_id(RootSystemId id) {
  int r = id.rank;
  bool ok = false;
  switch (id.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B:
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 4; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
    default: break;
  }
  if (!ok) throw InvalidIdError(bad_rank_message(id));
}

bool is_census_canonical(RootSystemId id) {
  validate_id(id);
  return !(id.family == Family::B && id.rank == 2);
}

int Root::height() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0);
}

std::vector<std::vector<int>> cartan_matrix(RootSystemId id) {
  validate_id(id);
  int r = id.rank;
  std::vector<std::vector<int>> m(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) m[i][i] = 2;
  auto link = [&](int i, int j) { m[i][j] = -1; m[j][i] = -1; };
  switch (id.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      m[r - 1][r - 2] = -2;  // last node short
      break;
    case Family::C:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      m[r - 2][r - 1] = -2;  // last node long
      break;
    case Family::D:
      for (int i = 0; i + 1 < r - 1; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case Family::E:
      // chain 0-2-3-4-5(-6-7), node 1 attached to node 3
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
      link(0, 2);
      link(1, 3);
      break;
    case Family::F:
      link(0, 1);
      link(2, 3);
      m[1][2] = -1;
      m[2][1] = -2;  // nodes 2,3 short
      break;
    case Family::G:
      m[0][1] = -3;
      m[1][0] = -1;  // node 0 short
      break;
  }
  return m;
}

std::vector<Root> generate_positive_roots(
    const std::vector<std::vector<int>>& cartan) {
  const int r = static_cast<int>(cartan.size());
  // nonzero entries of each coroot row, diagonal included
  std::vector<std::vector<std::pair<int, int>>> row(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (cartan[i][j] != 0) row[i].push_back({j, cartan[i][j]});

  detail::VecIndex index(r);
  std::vector<std::uint64_t> hashes;
  for (int j = 0; j < r; ++j) {
    std::vector<int> e(r, 0);
    e[j] = 1;
    std::uint64_t h = index.key(j);
    index.insert(h, std::move(e));
    hashes.push_back(h);
  }

  std::vector<int> scratch(r);
  std::size_t level_begin = 0;
  while (level_begin < index.size()) {
    std::size_t level_end = index.size();
    for (std::size_t idx = level_begin; idx < level_end; ++idx) {
      const std::vector<int> b = index.row(idx);  // copy: rows may reallocate
      const std::uint64_t hb = hashes[idx];
      for (int i = 0; i < r; ++i) {
        int c = 0;
        for (auto [j, a] : row[i]) c += a * b[j];
        bool extend = c < 0;
        if (!extend && b[i] >= 1) {
          // b + e_i is a root iff the string below b in direction i has
          // length at least c + 1; probe at most c + 1 predecessors.
          scratch = b;
          std::uint64_t h = hb;
          int p = 0;
          while (p <= c) {
            scratch[i] -= 1;
            h -= index.key(i);
            if (scratch[i] < 0 || index.find(h, scratch) < 0) break;
            ++p;
          }
          extend = p > c;
        }
        if (extend) {
          std::vector<int> up = b;
          up[i] += 1;
          std::uint64_t hu = hb + index.key(i);
          if (index.find(hu, up) < 0) {
            index.insert(hu, std::move(up));
            hashes.push_back(hu);
          }
        }
      }
    }
    level_begin = level_end;
  }

  std::vector<Root> roots;
  roots.reserve(index.size());
  for (const auto& v : index.rows()) roots.push_back(Root{v});
  sort_roots(roots);
  return roots;
}

RootSystemData build(RootSystemId id) {
  validate_id(id);
  RootSystemData data;
  data.id = id;
  data.cartan = cartan_matrix(id);
  bool classical = id.family == Family::A || id.family == Family::B ||
                   id.family == Family::C || id.family == Family::D;
  data.positive_roots = classical ? classical_positive_roots(id)
                                  : generate_positive_roots(data.cartan);
  data.num_positive = static_cast<int>(data.positive_roots.size());
  if (data.num_positive != expected_num_positive(id))
    throw std::logic_error("root closure produced " +
                           std::to_string(data.num_positive) + " roots for " +
                           to_string(id));
  data.coxeter_number = 2 * data.num_positive / id.rank;
  data.weyl_order = weyl_group_order(id);
  return data;
}

RootSystemId dual(RootSystemId id) {
  validate_id(id);
  if (id.family == Family::B) return {Family::C, id.rank};
  if (id.family == Family::C) return {Family::B, id.rank};
  return id;
}

std::vector<int> fundamental_coords(const RootSystemData& data,
                                    const Root& root) {
  const int r = data.id.rank;
  if (static_cast<int>(root.coeffs.size()) != r)
    throw std::domain_error("root has wrong length for " + to_string(data.id));
  bool nonneg = true, nonpos = true;
  for (int a : root.coeffs) {
    nonneg = nonneg && a >= 0;
    nonpos = nonpos && a <= 0;
  }
  Root abs = root;
  if (!nonneg && nonpos)
    for (int& a : abs.coeffs) a = -a;
  if ((!nonneg && !nonpos) ||
      std::find(data.positive_roots.begin(), data.positive_roots.end(), abs) ==
          data.positive_roots.end())
    throw std::domain_error("not a root of " + to_string(data.id));
  std::vector<int> out(r, 0);
  for (int j = 0; j < r; ++j) {
    int s = 0;
    for (int i = 0; i < r; ++i) s += data.cartan[j][i] * root.coeffs[i];
    out[j] = s;
  }
  return out;
}

std::vector<std::vector<int>> diagram_symmetries(RootSystemId id) {
  validate_id(id);
  const int r = id.rank;
  std::vector<int> identity(r);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> perms{identity};

  auto add = [&](std::vector<int> p) { perms.push_back(std::move(p)); };
  switch (id.family) {
    case Family::A:
      if (r >= 2) {
        std::vector<int> p(identity.rbegin(), identity.rend());
        add(std::move(p));
      }
      break;
    case Family::D:
      if (r == 4) {
        // full permutation group of the three outer nodes 0, 2, 3
        std::array<int, 3> outer{0, 2, 3};
        std::array<int, 3> img = outer;
        std::sort(img.begin(), img.end());
        do {
          std::vector<int> p = identity;
          for (int k = 0; k < 3; ++k) p[outer[k]] = img[k];
          if (p != identity) add(std::move(p));
        } while (std::next_permutation(img.begin(), img.end()));
      } else {
        std::vector<int> p = identity;
        std::swap(p[r - 2], p[r - 1]);
        add(std::move(p));
      }
      break;
    case Family::E:
      if (r == 6) add({5, 1, 4, 3, 2, 0});
      break;
    default:
      break;
  }
  std::sort(perms.begin(), perms.end());
  return perms;
}

BigInt weyl_group_order(RootSystemId id) {
  validate_id(id);
  int r = id.rank;
  switch (id.family) {
    case Family::A: return factorial(r + 1);
    case Family::B:
    case Family::C: return factorial(r) << r;
    case Family::D: return factorial(r) << (r - 1);
    case Family::E:
      return r == 6 ? BigInt(51840)
                    : r == 7 ? BigInt(2903040) : BigInt(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;  // unreachable
}

}  // namespace repgrowth
