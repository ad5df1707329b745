#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sharply/perm.hpp"

namespace sharply {

// Ordered tuple of pairwise distinct points.
using PointTuple = std::vector<int>;

// A finite permutation group held as its full, sorted element set. Suited to
// order <= ~10^5 and degree <= 16; exact enumeration beats clever data
// structures at this scale.
struct FiniteGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted by image table
  std::string label;

  std::size_t order() const { return elements.size(); }
  bool contains(const Permutation& g) const;
};

// Closure cap used when none is given: SHARP_MAX_ORDER from the environment,
// else 100000.
std::size_t default_order_cap();

// Closure of the generators under composition. Throws when the closure
// exceeds cap, reporting the partial size.
FiniteGroup generate_group(const std::vector<Permutation>& gens,
                           std::size_t cap = 0);

// Wraps an explicit element set, deriving a small generating set greedily and
// validating that the set is closed (its closure reproduces it exactly).
FiniteGroup group_from_elements(std::vector<Permutation> elems,
                                std::string label = "");

bool is_transitive(const FiniteGroup& G);

// Orbit test: the orbit of the base tuple (0..n-1) under the generators must
// reach every tuple of distinct points.
bool is_n_transitive(const FiniteGroup& G, int n);

bool is_sharply_n_transitive(const FiniteGroup& G, int n);

// Definitional oracles scanning all tuple pairs; slow, used to cross-check
// the orbit-based tests.
bool is_n_transitive_all_tuples(const FiniteGroup& G, int n);
bool is_sharply_n_transitive_all_tuples(const FiniteGroup& G, int n);

// Pointwise stabilizer of the tuple, acting on the full point set.
FiniteGroup stabilizer(const FiniteGroup& G, const PointTuple& pts);

// Restricts a group fixing `removed` pointwise to the remaining points,
// relabelled in ascending order.
FiniteGroup restrict_to_complement(const FiniteGroup& G,
                                   const PointTuple& removed);

std::vector<Permutation> conjugacy_class(const FiniteGroup& G,
                                         const Permutation& g);

// All classes, each sorted, ordered by their least element.
std::vector<std::vector<Permutation>> conjugacy_classes(const FiniteGroup& G);

// Transitive, not regular, and no nontrivial element fixes two points.
bool is_frobenius(const FiniteGroup& G);

bool is_abelian(const FiniteGroup& G);
bool is_normal_subgroup(const FiniteGroup& G, const FiniteGroup& N);

// Searches unions of conjugacy classes for a normal subgroup of order equal
// to the degree acting regularly; every normal subgroup is such a union.
std::optional<FiniteGroup> find_regular_normal_subgroup(const FiniteGroup& G);

// Named groups: S(n), A(n), C(n), D(2n) on n points, and M11. The M11
// construction validates |G| = 7920 before returning.
FiniteGroup catalog(const std::string& name);

}  // namespace sharply
