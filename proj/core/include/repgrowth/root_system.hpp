#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "repgrowth/bigint.hpp"
#include "repgrowth/errors.hpp"

namespace repgrowth {

enum class Family : char {
  A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

// Irreducible root system in Bourbaki numbering. Canonical ranks are
// A >= 1, B >= 2, C >= 2, D >= 4, E in {6,7,8}, F = 4, G = 2. Low-rank
// members that merely rename another system (B_1, C_1, D_1, D_2, D_3,
// E_4, E_5) are rejected with a hint naming the canonical id.
struct RootSystemId {
  Family family;
  int rank;
  friend auto operator<=>(const RootSystemId&, const RootSystemId&) = default;
};

std::string to_string(RootSystemId id);

// Accepts forms like "A2", "a2", "D10". Throws InvalidIdError.
RootSystemId parse_root_system_id(std::string_view text);

// Throws InvalidIdError unless id is canonical (see RootSystemId).
void validate_id(RootSystemId id);

// False exactly for B_2: its compact simply connected group coincides with
// that of C_2, so group-level counts keep only the C_2 copy.
bool is_census_canonical(RootSystemId id);

// Positive root as coefficients on the simple roots.
struct Root {
  std::vector<int> coeffs;
  int height() const;
  friend bool operator==(const Root&, const Root&) = default;
};

struct RootSystemData {
  RootSystemId id;
  // cartan[i][j] = value of the i-th simple coroot on the j-th simple root.
  std::vector<std::vector<int>> cartan;
  // Sorted by (height, lexicographic coefficients).
  std::vector<Root> positive_roots;
  int num_positive = 0;
  int coxeter_number = 0;  // 2 * num_positive / rank
  BigInt weyl_order;
};

std::vector<std::vector<int>> cartan_matrix(RootSystemId id);

// Closure of the simple roots under root addition, driven by root strings.
// Works for any valid Cartan matrix of finite type.
std::vector<Root> generate_positive_roots(
    const std::vector<std::vector<int>>& cartan);

RootSystemData build(RootSystemId id);

// B_r <-> C_r; every other family is self-dual.
RootSystemId dual(RootSystemId id);

// Values of the simple coroots on the given root, i.e. the coordinates of
// the root in the fundamental-weight basis. Accepts positive and negative
// roots of the system; throws std::domain_error otherwise.
std::vector<int> fundamental_coords(const RootSystemData& data,
                                    const Root& root);

// All Dynkin diagram symmetries as node permutations, identity included,
// sorted lexicographically. Sizes: 6 for D_4, 2 for A_r (r >= 2), D_r
// (r >= 5) and E_6, 1 otherwise.
std::vector<std::vector<int>> diagram_symmetries(RootSystemId id);

BigInt weyl_group_order(RootSystemId id);

}  // namespace repgrowth
