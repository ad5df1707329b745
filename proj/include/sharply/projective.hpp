#pragma once

#include <string>
#include <vector>

#include "sharply/finite_group.hpp"
#include "sharply/galois.hpp"
#include "sharply/nearfield.hpp"

namespace sharply::proj {

// Point of the projective line over GF(q), held as a normalized homogeneous
// pair: (x, 1) for affine x, (1, 0) for infinity.
struct ProjectivePoint {
  int u = 0;
  int v = 0;
  bool operator==(const ProjectivePoint&) const = default;
};

// x -> (a x + b) / (c x + d) with ad - bc != 0, entries as field indices.
struct MoebiusMap {
  int a = 1, b = 0, c = 0, d = 1;
};

ProjectivePoint normalize_point(const FieldCtx& F, int u, int v);
ProjectivePoint affine_point(int x);
ProjectivePoint point_at_infinity();
// Point numbering: affine x -> x, infinity -> q.
int point_index(const ProjectivePoint& x, int q);
ProjectivePoint point_from_index(int i, int q);

bool moebius_valid(const FieldCtx& F, const MoebiusMap& m);
// Homogeneous evaluation (u:v) -> (au+bv : cu+dv); infinity needs no special
// case.
ProjectivePoint apply_moebius(const FieldCtx& F, const MoebiusMap& m,
                              ProjectivePoint x);

// The permutation group of degree q+1 induced by all valid Moebius maps.
FiniteGroup build_pgl(int q);

// True iff the stabilizer of infinity in build_pgl(q), restricted to the
// affine points, equals the affine group of GF(q) element-for-element.
bool stabilizer_is_affine(int q);

// sigma is a permutation of 0..n-1 with sigma(0) = 0. Checks sigma is an
// involutory automorphism of the multiplicative group and satisfies
//   sigma(1 + sigma(x)) = 1 - sigma(1 + x)  for all x outside {0, 1, -1}
// (the equation breaks down where 1 + x = 0; -1 coincides with 1 exactly in
// characteristic 2), where -y is the unique right additive inverse; both
// orders of the subtraction 1 - z are required. On failure, *why (if given)
// receives the first counterexample.
bool kerby_sigma_check(const NearStructure& D, const std::vector<int>& sigma,
                       std::string* why = nullptr);

// sigma(x) = multiplicative inverse, sigma(0) = 0.
std::vector<int> sigma_inversion(const NearStructure& D);

// All automorphisms of the multiplicative group (D minus 0), as full maps on
// 0..n-1 fixing 0, sorted.
std::vector<std::vector<int>> multiplicative_automorphisms(
    const NearStructure& D);

// All involutory automorphisms passing kerby_sigma_check, sorted.
std::vector<std::vector<int>> find_kerby_sigma(const NearStructure& D);

}  // namespace sharply::proj
