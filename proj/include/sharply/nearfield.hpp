#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sharply/finite_group.hpp"

namespace sharply {

// Finite double-table algebra: a carrier {0..order-1} with addition and
// multiplication tables and distinguished 0 and 1. Verification functions
// decide whether it is a near-field or near-domain.
struct NearStructure {
  int order = 0;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  int zero = 0;
  int one = 1;
  std::string label;

  int plus(int a, int b) const { return add[a][b]; }
  int times(int a, int b) const { return mul[a][b]; }
};

// Axiom verdict. `axiom` names the first failing axiom and `witness` holds
// the lexicographically first counterexample, empty on pass.
struct AxiomReport {
  bool pass = false;
  std::string axiom;
  std::vector<int> witness;
  std::string detail;
  bool addition_associative = false;

  std::string to_string() const;
};

// GF(q) as a near-structure (both tables from the field).
NearStructure build_field_nearfield(int q);

// GF(p^2) with multiplication twisted through the Frobenius on the left
// factor whenever the right factor is a non-square:
//   a * b        if b is a square,
//   a^p * b      otherwise.
// Verified internally; throws naming the failed axiom if the result is not a
// near-field.
NearStructure build_dickson_nearfield(int q);

// Same tables but with the twist keyed on the left factor instead
// (a * b if a is a square, else a * b^p). Deliberate non-example: keeps the
// multiplicative group intact but breaks right distributivity, exercising the
// verifier's failure path.
NearStructure build_left_twist_table(int q);

// Axioms: (1) (Q,+) is a group with identity 0, (2) (Q\{0},*) is a group with
// identity 1 and 0 annihilates, (3) right distributivity
// (a+b)*c = a*c + b*c. Reports the first failing triple.
AxiomReport verify_near_field(const NearStructure& S);

// Axioms: (1) (D,+) is a loop with identity 0, (2) (D\{0},*) is a group with
// identity 1 and 0 annihilates, (3) right distributivity. Also records
// whether addition is associative (the structure is then a near-field).
AxiomReport verify_near_domain(const NearStructure& S);

// The affine maps x -> x*a + b (a != 0) of a near-field, as a permutation
// group on the carrier. Order n(n-1), sharply 2-transitive.
FiniteGroup build_affine_group(const NearStructure& S);

// Recovers the additive/multiplicative tables of a sharply 2-transitive
// group from its action: t is the unique element swapping zero and one,
// rho_b the unique product of t with an involution sending zero to b, and
// g_a the unique zero-stabilizer element sending one to a. The four
// orientation variants (which operand conjugates through rho/g) are
// numbered 0..3; variant 0 is canonical and orientation -1 selects the
// first variant whose result verifies as a near-domain.
NearStructure extract_near_domain(const FiniteGroup& G, int zero, int one,
                                  int orientation = -1);

// Regular subgroups of GL(k,p) on the nonzero vectors, one representative
// per GL(k,p)-conjugacy class, each of order p^k - 1. Degree of the returned
// groups is p^k - 1; point i stands for the vector with index i+1 (base-p
// coefficient encoding).
std::vector<FiniteGroup> classify_regular_linear_groups(int p, int k);

// Near-structure induced by a regular linear group: vector addition plus
// a*b = a^(h_b) where h_b maps the first basis vector to b.
NearStructure induced_near_structure(const FiniteGroup& H, int p, int k);

// Backtracking search for a bijection preserving both tables and fixing
// zero and one (after translating the distinguished elements).
std::optional<std::vector<int>> find_structure_isomorphism(
    const NearStructure& A, const NearStructure& B);

bool multiplicative_group_abelian(const NearStructure& S);
int count_multiplicative_involutions(const NearStructure& S);

// Unique y with a + y = zero; loop axioms make it well defined.
int right_negative(const NearStructure& S, int a);

// Convenience: a Latin-square loop of order 5 with field multiplication mod
// 5; addition is non-associative and right distributivity fails. Used as a
// verifier counterexample.
NearStructure build_broken_loop_table();

}  // namespace sharply
