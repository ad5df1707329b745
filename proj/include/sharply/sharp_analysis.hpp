#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sharply/finite_group.hpp"
#include "sharply/perm.hpp"

namespace sharply {

// Aggregate involution-theoretic invariants of a sharply 2-transitive group.
struct InvolutionReport {
  std::vector<Permutation> J;
  bool single_class = false;
  // "all-have-unique-fixed-point" or "none-have-fixed-points"
  std::string fixed_point_mode;
  int characteristic = 0;
  bool split = false;
  std::optional<FiniteGroup> regular_normal;

  // Stable key: value lines for CLI output and golden tests.
  std::string to_string() const;
};

// All non-identity elements of order 2, in sorted order.
std::vector<Permutation> involutions(const FiniteGroup& G);

// True iff the involutions form a single conjugacy class.
// Requires a sharply 2-transitive group.
bool check_single_class(const FiniteGroup& G);

// True iff t -> (unique fixed point of t) is a bijection from the involution
// set onto the points; also asserts each point stabilizer contains exactly
// one involution and that it is central in the stabilizer.
// Errors when involutions are fixed point free (characteristic 2 case).
bool fix_bijection_check(const FiniteGroup& G);

// 2 when involutions are fixed point free; otherwise the common prime order
// of the nontrivial products of two involutions. Non-constant or non-prime
// orders raise an integrity error.
int characteristic(const FiniteGroup& G);

// Split test. The subgroup candidate is tJ for the least involution t when
// involutions have fixed points (tJ = J^2 there), and J^2 when they are
// fixed point free (tJ omits t itself in that mode). Split iff the candidate
// is closed under the group operation; when split, returns N = the candidate
// and asserts N regular, abelian, normal, plus J^2 = tJ (fixed-point mode)
// or J^2 = tJ with t adjoined (fixed-point-free mode). Always asserts that
// the candidate acts regularly on the points.
std::pair<bool, std::optional<FiniteGroup>> neumann_split_test(
    const FiniteGroup& G);

// True iff the products of two distinct involutions form a single conjugacy
// class. Errors on characteristic 2 input, where the question belongs to the
// infinite construction.
bool j_squared_class_check(const FiniteGroup& G);

// Full report; asserts internal consistency (finite input must split).
InvolutionReport analyze(const FiniteGroup& G);

}  // namespace sharply
