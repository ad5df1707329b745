#include "doctest.h"

#include <set>
#include <stdexcept>

#include "sharply/finite_group.hpp"
#include "sharply/nearfield.hpp"
#include "sharply/perm.hpp"
#include "sharply/sharp_analysis.hpp"

using namespace sharply;

namespace {

FiniteGroup affine_gf(int q) {
  return build_affine_group(build_field_nearfield(q));
}

std::set<Permutation> involution_products(const FiniteGroup& G) {
  std::set<Permutation> out;
  auto J = involutions(G);
  for (const auto& a : J)
    for (const auto& b : J) out.insert(compose(a, b));
  return out;
}

}  // namespace

TEST_CASE("involution lists") {
  CHECK(involutions(catalog("S(3)")).size() == 3);
  CHECK(involutions(catalog("A(4)")).size() == 3);
  CHECK(involutions(affine_gf(5)).size() == 5);
  CHECK(involutions(catalog("C(3)")).empty());
  for (const auto& j : involutions(catalog("A(4)"))) {
    CHECK(perm_order(j) == 2);
    CHECK(fixed_points(j).empty());
  }
}

TEST_CASE("involutions of a sharply 2-transitive group form one class") {
  CHECK(check_single_class(affine_gf(5)));
  CHECK(check_single_class(affine_gf(8)));
  CHECK(check_single_class(catalog("A(4)")));
  CHECK(check_single_class(build_affine_group(build_dickson_nearfield(9))));
}

TEST_CASE("fixed-point bijection in odd characteristic") {
  CHECK(fix_bijection_check(affine_gf(5)));
  CHECK(fix_bijection_check(affine_gf(9)));
  CHECK(fix_bijection_check(catalog("S(3)")));
  // Fixed-point-free involutions have no fixed points to biject.
  CHECK_THROWS_AS(fix_bijection_check(catalog("A(4)")), std::runtime_error);
}

TEST_CASE("characteristic detection across the corpus") {
  CHECK(characteristic(catalog("S(3)")) == 3);
  CHECK(characteristic(catalog("A(4)")) == 2);
  CHECK(characteristic(affine_gf(4)) == 2);
  CHECK(characteristic(affine_gf(5)) == 5);
  CHECK(characteristic(affine_gf(7)) == 7);
  CHECK(characteristic(affine_gf(8)) == 2);
  CHECK(characteristic(affine_gf(9)) == 3);
  CHECK(characteristic(build_affine_group(build_dickson_nearfield(9))) == 3);
}

TEST_CASE("split test returns the translation subgroup") {
  auto [split5, N5] = neumann_split_test(affine_gf(5));
  CHECK(split5);
  REQUIRE(N5.has_value());
  CHECK(N5->order() == 5);
  CHECK(N5->label == "translation subgroup");
  CHECK(is_abelian(*N5));

  auto [splitA4, NA4] = neumann_split_test(catalog("A(4)"));
  CHECK(splitA4);
  REQUIRE(NA4.has_value());
  CHECK(NA4->order() == 4);

  auto [splitD, ND] =
      neumann_split_test(build_affine_group(build_dickson_nearfield(9)));
  CHECK(splitD);
  REQUIRE(ND.has_value());
  CHECK(ND->order() == 9);
  // Elementary abelian of exponent 3.
  for (const auto& g : ND->elements)
    if (!g.is_identity()) CHECK(perm_order(g) == 3);
}

TEST_CASE("translation subgroup equals the involution product set") {
  // In odd characteristic J^2 = tJ is the subgroup; with fixed-point-free
  // involutions J^2 picks up t itself and is still the subgroup.
  for (int q : {4, 5, 7, 8}) {
    FiniteGroup G = affine_gf(q);
    CAPTURE(q);
    auto [split, N] = neumann_split_test(G);
    REQUIRE(split);
    std::set<Permutation> Nset(N->elements.begin(), N->elements.end());
    CHECK(Nset == involution_products(G));
  }
}

TEST_CASE("products of distinct involutions form one class in odd char") {
  CHECK(j_squared_class_check(affine_gf(5)));
  CHECK(j_squared_class_check(affine_gf(7)));
  CHECK(j_squared_class_check(catalog("S(3)")));
  CHECK(j_squared_class_check(build_affine_group(build_dickson_nearfield(9))));
  // The characteristic-2 version of the question belongs to the infinite
  // construction.
  CHECK_THROWS_AS(j_squared_class_check(catalog("A(4)")), std::runtime_error);
  CHECK_THROWS_AS(j_squared_class_check(affine_gf(8)), std::runtime_error);
}

TEST_CASE("full report for the Dickson affine group") {
  InvolutionReport r = analyze(build_affine_group(build_dickson_nearfield(9)));
  CHECK(r.J.size() == 9);
  CHECK(r.single_class);
  CHECK(r.fixed_point_mode == "all-have-unique-fixed-point");
  CHECK(r.characteristic == 3);
  CHECK(r.split);
  REQUIRE(r.regular_normal.has_value());
  CHECK(r.regular_normal->order() == 9);
  CHECK(r.to_string() ==
        "involutions: 9\n"
        "single_class: true\n"
        "fixed_point_mode: all-have-unique-fixed-point\n"
        "characteristic: 3\n"
        "split: true\n"
        "regular_normal_order: 9\n");
}

TEST_CASE("full report for a characteristic-2 group") {
  InvolutionReport r = analyze(catalog("A(4)"));
  CHECK(r.J.size() == 3);
  CHECK(r.single_class);
  CHECK(r.fixed_point_mode == "none-have-fixed-points");
  CHECK(r.characteristic == 2);
  CHECK(r.split);
  REQUIRE(r.regular_normal.has_value());
  CHECK(r.regular_normal->order() == 4);

  InvolutionReport r8 = analyze(affine_gf(8));
  CHECK(r8.characteristic == 2);
  REQUIRE(r8.regular_normal.has_value());
  CHECK(r8.regular_normal->order() == 8);
}
