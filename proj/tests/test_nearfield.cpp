#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "sharply/finite_group.hpp"
#include "sharply/galois.hpp"
#include "sharply/nearfield.hpp"

using namespace sharply;

TEST_CASE("field tables verify as near-fields") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    NearStructure S = build_field_nearfield(q);
    CAPTURE(q);
    CHECK(S.order == q);
    AxiomReport r = verify_near_field(S);
    CHECK(r.pass);
    CHECK(r.addition_associative);
    CHECK(r.to_string() == "pass (addition associative)");
    CHECK(multiplicative_group_abelian(S));
  }
}

TEST_CASE("GF(9) near-structure rows match the field") {
  NearStructure S = build_field_nearfield(9);
  CHECK(S.add[1] == std::vector<int>{1, 2, 0, 4, 5, 3, 7, 8, 6});
  CHECK(S.mul[3] == std::vector<int>{0, 3, 6, 2, 5, 8, 1, 4, 7});
  CHECK(count_multiplicative_involutions(S) == 1);  // only -1 = 2
  CHECK(right_negative(S, 1) == 2);
}

TEST_CASE("Dickson twist of order 9 is a genuine near-field") {
  NearStructure D = build_dickson_nearfield(9);
  CHECK(D.order == 9);
  CHECK(D.label == "Dickson(9)");

  AxiomReport r = verify_near_field(D);
  CHECK(r.pass);
  CHECK(r.addition_associative);

  // Addition is untouched; multiplication is twisted on non-square right
  // factors: 3*4 = frobenius(3)*4 = 6*4 = 7 while 4*3 keeps 4*3 = 5.
  NearStructure F = build_field_nearfield(9);
  CHECK(D.add == F.add);
  CHECK(D.mul != F.mul);
  CHECK(D.mul[3] == std::vector<int>{0, 3, 6, 2, 7, 4, 1, 8, 5});
  CHECK(D.times(3, 4) == 7);
  CHECK(D.times(4, 3) == 5);

  // Multiplicative group is the quaternion group: non-abelian of order 8
  // with a unique involution.
  CHECK_FALSE(multiplicative_group_abelian(D));
  CHECK(count_multiplicative_involutions(D) == 1);
}

TEST_CASE("left twist breaks right distributivity") {
  NearStructure L = build_left_twist_table(9);
  AxiomReport r = verify_near_field(L);
  CHECK_FALSE(r.pass);
  CHECK(r.axiom == "right distributivity");
  CHECK(r.witness == std::vector<int>{1, 3, 3});
  CHECK(r.to_string() ==
        "fail: right distributivity at (1, 3, 3) [(a+b)*c != a*c + b*c]");
}

TEST_CASE("broken loop fails as a near-domain with the first triple named") {
  NearStructure B = build_broken_loop_table();
  CHECK(B.order == 5);
  AxiomReport r = verify_near_domain(B);
  CHECK_FALSE(r.pass);
  CHECK(r.axiom == "right distributivity");
  CHECK(r.witness == std::vector<int>{1, 1, 2});
  CHECK_FALSE(r.addition_associative);
  CHECK(r.to_string() ==
        "fail: right distributivity at (1, 1, 2) [(a+b)*c != a*c + b*c]");
}

TEST_CASE("near-domain verification accepts fields and records associativity") {
  AxiomReport r = verify_near_domain(build_field_nearfield(5));
  CHECK(r.pass);
  CHECK(r.addition_associative);
  CHECK(verify_near_domain(build_dickson_nearfield(9)).pass);
}

TEST_CASE("affine groups are sharply 2-transitive of order n(n-1)") {
  for (int q : {3, 4, 5, 7, 8, 9}) {
    FiniteGroup G = build_affine_group(build_field_nearfield(q));
    CAPTURE(q);
    CHECK(G.degree == q);
    CHECK(G.order() == static_cast<std::size_t>(q) * (q - 1));
    CHECK(is_sharply_n_transitive(G, 2));
  }

  FiniteGroup GD = build_affine_group(build_dickson_nearfield(9));
  CHECK(GD.label == "affine(Dickson(9))");
  CHECK(GD.order() == 72);
  CHECK(is_sharply_n_transitive(GD, 2));

  // The twist changes the group: same order as affine GF(9) but a
  // different point set of permutations.
  FiniteGroup GF9 = build_affine_group(build_field_nearfield(9));
  CHECK(GD.elements != GF9.elements);
}

TEST_CASE("extraction inverts the affine construction") {
  for (int q : {3, 4, 5}) {
    NearStructure S = build_field_nearfield(q);
    FiniteGroup G = build_affine_group(S);
    CAPTURE(q);
    NearStructure E = extract_near_domain(G, S.zero, S.one);
    CHECK(E.label == "extracted near-domain");
    CHECK(verify_near_domain(E).pass);
    CHECK(find_structure_isomorphism(E, S).has_value());
  }
}

TEST_CASE("extraction of A(4) recovers the GF(4) tables") {
  NearStructure E = extract_near_domain(catalog("A(4)"), 0, 1);
  CHECK(verify_near_field(E).pass);
  CHECK(find_structure_isomorphism(E, build_field_nearfield(4)).has_value());
}

TEST_CASE("extraction rejects out-of-range arguments") {
  FiniteGroup G = catalog("A(4)");
  CHECK_THROWS_AS(extract_near_domain(G, 0, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(extract_near_domain(G, 0, 1, -2), std::invalid_argument);
  CHECK_THROWS_AS(extract_near_domain(G, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(extract_near_domain(G, 0, 7), std::invalid_argument);
}

TEST_CASE("regular linear subgroup classification at desk scale") {
  auto classes32 = classify_regular_linear_groups(3, 2);
  REQUIRE(classes32.size() == 2);
  int abelian = 0;
  for (const auto& H : classes32) {
    CHECK(H.order() == 8);
    CHECK(H.degree == 8);
    CHECK(H.label == "regular linear subgroup GL(2,3)");
    if (is_abelian(H)) ++abelian;
  }
  CHECK(abelian == 1);  // the cyclic class; the other is quaternion

  auto classes22 = classify_regular_linear_groups(2, 2);
  REQUIRE(classes22.size() == 1);
  CHECK(classes22[0].order() == 3);
}

TEST_CASE("induced near-structures verify as near-fields") {
  auto classes32 = classify_regular_linear_groups(3, 2);
  for (const auto& H : classes32) {
    NearStructure S = induced_near_structure(H, 3, 2);
    CHECK(S.order == 9);
    CHECK(S.label == "induced near-structure");
    CHECK(verify_near_field(S).pass);
  }
  // The non-abelian class induces the Dickson near-field, the abelian one
  // the field itself.
  NearStructure ref_field = build_field_nearfield(9);
  NearStructure ref_dickson = build_dickson_nearfield(9);
  int field_hits = 0, dickson_hits = 0;
  for (const auto& H : classes32) {
    NearStructure S = induced_near_structure(H, 3, 2);
    if (find_structure_isomorphism(S, ref_field)) ++field_hits;
    if (find_structure_isomorphism(S, ref_dickson)) ++dickson_hits;
  }
  CHECK(field_hits == 1);
  CHECK(dickson_hits == 1);
}

TEST_CASE("structure isomorphism search distinguishes the twist") {
  NearStructure F = build_field_nearfield(9);
  NearStructure D = build_dickson_nearfield(9);
  CHECK(find_structure_isomorphism(F, F).has_value());
  CHECK_FALSE(find_structure_isomorphism(F, D).has_value());
  CHECK_FALSE(
      find_structure_isomorphism(F, build_field_nearfield(8)).has_value());
}

TEST_CASE("right negatives in a loop") {
  NearStructure F5 = build_field_nearfield(5);
  CHECK(right_negative(F5, 2) == 3);
  CHECK(right_negative(F5, 0) == 0);
  NearStructure B = build_broken_loop_table();
  for (int a = 0; a < B.order; ++a)
    CHECK(B.plus(a, right_negative(B, a)) == B.zero);
}

TEST_CASE("multiplicative involution counts") {
  CHECK(count_multiplicative_involutions(build_field_nearfield(4)) == 0);
  CHECK(count_multiplicative_involutions(build_field_nearfield(5)) == 1);
  CHECK(count_multiplicative_involutions(build_field_nearfield(8)) == 0);
}
