#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "sharply/free_product.hpp"

using namespace sharply::freeprod;

namespace {

FPWord W(const std::string& text) { return fp_parse(text); }

std::string round_trip(const std::string& text) {
  return fp_print(fp_parse(text));
}

}  // namespace

TEST_CASE("letter codes and tokens") {
  CHECK(letter_is_t(0));
  CHECK(letter_is_c(2));
  CHECK(letter_is_c(-2));
  CHECK(letter_is_n(3));
  CHECK(letter_is_n(-3));
  CHECK(letter_gen_index(2) == 1);
  CHECK(letter_gen_index(5) == 2);
  CHECK(letter_gen_index(-3) == 1);
  CHECK(letter_token(0) == "t");
  CHECK(letter_token(2) == "c1");
  CHECK(letter_token(-2) == "c1^-1");
  CHECK(letter_token(3) == "n1");
  CHECK(letter_token(-5) == "n2^-1");
}

TEST_CASE("canonical letter discipline") {
  CHECK(letter_allowed(kNoLetter, 0));   // t can start a word
  CHECK_FALSE(letter_allowed(0, 0));     // t t collapses
  CHECK_FALSE(letter_allowed(2, 0));     // t after c is rewritten t-first
  CHECK(letter_allowed(3, 0));           // t after n is fine
  CHECK_FALSE(letter_allowed(2, -2));    // exact inverses cancel
  CHECK_FALSE(letter_allowed(-3, 3));
  CHECK(letter_allowed(3, 3));           // n1 n1 is reduced
  CHECK(letter_allowed(2, 4));           // distinct c's are free
  CHECK(letter_allowed(4, 2));
  CHECK(letter_allowed(0, 2));           // t then c forms an A-syllable
  CHECK(letter_allowed(2, 3));           // c then n crosses the free factor
}

TEST_CASE("parse and print round trips") {
  for (const char* text :
       {"1", "t", "c1", "n1", "n1^-1", "t c1", "t n1^-1 t n1",
        "c2 n1 t c1", "n1 n1", "t c1 c2^-1"}) {
    CAPTURE(text);
    CHECK(round_trip(text) == text);
  }
  CHECK(fp_print(fp_identity()) == "1");
  CHECK(fp_print(fp_t()) == "t");
  CHECK(fp_print(fp_c(1)) == "c1");
  CHECK(fp_print(fp_c(2, -1)) == "c2^-1");
  CHECK(fp_print(fp_n(1, -1)) == "n1^-1");
}

TEST_CASE("parsing normalizes to the t-first syllable form") {
  CHECK(round_trip("c1 t") == "t c1");            // c commutes with t
  CHECK(round_trip("t t") == "1");
  CHECK(round_trip("n1 n1^-1") == "1");
  CHECK(round_trip("c1 t c1") == "t c1 c1");
  CHECK(round_trip("c1 c2 t") == "t c1 c2");
  CHECK(round_trip("n1 t t n1^-1") == "1");
}

TEST_CASE("parse rejects unknown tokens") {
  CHECK_THROWS_AS(fp_parse("x7"), std::invalid_argument);
  CHECK_THROWS_AS(fp_parse("t q1"), std::invalid_argument);
}

TEST_CASE("letters round trip through words") {
  std::vector<int> letters{0, -3, 0, 3};
  FPWord u = fp_from_letters(letters);
  CHECK(fp_print(u) == "t n1^-1 t n1");
  CHECK(fp_letters(u) == letters);
  CHECK(fp_letter_length(u) == 4);
  CHECK(u.syllable_length() == 4);
}

TEST_CASE("multiplication goldens") {
  CHECK(fp_print(fp_multiply(W("c1"), W("t"))) == "t c1");
  CHECK(fp_print(fp_multiply(W("t"), W("t"))) == "1");
  CHECK(fp_print(fp_multiply(W("n1"), W("n1^-1"))) == "1");
  CHECK(fp_print(fp_multiply(W("t c1"), W("c1^-1"))) == "t");
  CHECK(fp_print(fp_multiply(W("t n1^-1"), W("n1 t"))) == "1");
  CHECK(fp_print(fp_multiply(W("n1"), W("c1"))) == "n1 c1");
}

TEST_CASE("inversion goldens") {
  CHECK(fp_print(fp_invert(W("t n1"))) == "n1^-1 t");
  CHECK(fp_print(fp_invert(W("t"))) == "t");
  CHECK(fp_print(fp_invert(W("1"))) == "1");
  for (const char* text : {"t", "c1", "t n1^-1 t n1", "c2 n1 t c1"}) {
    FPWord u = W(text);
    CAPTURE(text);
    CHECK(fp_multiply(u, fp_invert(u)).empty());
    CHECK(fp_multiply(fp_invert(u), u).empty());
    CHECK(fp_invert(fp_invert(u)) == u);
  }
}

TEST_CASE("conjugation goldens") {
  CHECK(fp_print(fp_conjugate(W("t"), W("n1"))) == "n1^-1 t n1");
  CHECK(fp_print(fp_conjugate(W("t"), W("t"))) == "t");
  CHECK(fp_print(fp_conjugate(W("t"), W("c1"))) == "t");  // c commutes with t
  // g^-1 u g multiplies out.
  FPWord u = W("t c1");
  FPWord g = W("n1 c2");
  CHECK(fp_conjugate(u, g) ==
        fp_multiply(fp_multiply(fp_invert(g), u), g));
}

TEST_CASE("involution recognition") {
  CHECK(fp_is_involution(W("t")));
  CHECK(fp_is_involution(W("n1^-1 t n1")));
  CHECK_FALSE(fp_is_involution(W("t c1")));
  CHECK_FALSE(fp_is_involution(W("n1")));
  CHECK_FALSE(fp_is_involution(W("1")));
  CHECK_FALSE(fp_is_involution(W("t n1^-1 t n1")));
}

TEST_CASE("membership in tJ") {
  CHECK(fp_in_tJ(W("t")));                // t * 1
  CHECK(fp_in_tJ(W("t n1^-1 t n1")));     // t * t^n1
  CHECK_FALSE(fp_in_tJ(W("n1")));
  CHECK_FALSE(fp_in_tJ(W("c1")));
  CHECK(fp_in_tJ(fp_multiply(W("t"), fp_conjugate(W("t"), W("c2 n1")))));
}

TEST_CASE("conjugacy of cyclic words") {
  CHECK(fp_conjugacy_test(W("n1 c1"), W("c1 n1")));
  CHECK(fp_conjugacy_test(W("t"), W("n1^-1 t n1")));
  CHECK_FALSE(fp_conjugacy_test(W("t"), W("n1")));
  CHECK_FALSE(fp_conjugacy_test(W("t"), W("1")));
  FPWord u = W("t n1^-1 t n1");
  CHECK(fp_conjugacy_test(u, u));
  CHECK(fp_conjugacy_test(u, fp_conjugate(u, W("c1 n2 t"))));
}

TEST_CASE("t times its distinct conjugates has infinite order behavior") {
  // u = t * t^n1 lies in tJ but is no involution; its powers stay nontrivial
  // and grow linearly, so the subgroup element has infinite order.
  FPWord b = W("n1");
  FPWord u = fp_multiply(W("t"), fp_conjugate(W("t"), b));
  CHECK(fp_print(u) == "t n1^-1 t n1");
  CHECK(fp_in_tJ(u));
  CHECK_FALSE(fp_is_involution(u));
  FPWord pow = fp_identity();
  for (int k = 1; k <= 6; ++k) {
    pow = fp_multiply(pow, u);
    CAPTURE(k);
    CHECK_FALSE(pow.empty());
    CHECK(fp_letter_length(pow) == 4 * k);
  }
}

TEST_CASE("conjugates of t by distinct powers are non-conjugate in pairs") {
  FPWord b = W("n1");
  FPWord bb = fp_multiply(b, b);
  FPWord u1 = fp_multiply(W("t"), fp_conjugate(W("t"), b));
  FPWord u2 = fp_multiply(W("t"), fp_conjugate(W("t"), bb));
  CHECK(fp_print(u2) == "t n1^-1 n1^-1 t n1 n1");
  CHECK_FALSE(fp_conjugacy_test(u1, u2));
}

TEST_CASE("canonical word enumeration") {
  auto words1 = enumerate_canonical_letter_words(1, 1, 1);
  // Empty word plus c1, c1^-1, n1, n1^-1, t ordered by token.
  REQUIRE(words1.size() == 6);
  CHECK(words1[0].empty());
  CHECK(words1[1] == std::vector<int>{2});
  CHECK(words1[2] == std::vector<int>{-2});
  CHECK(words1[3] == std::vector<int>{3});
  CHECK(words1[4] == std::vector<int>{-3});
  CHECK(words1[5] == std::vector<int>{0});

  auto words2 = enumerate_canonical_letter_words(2, 1, 1);
  CHECK(words2.size() == 24);
  // Every listed word is canonical: adjacent letters pass the discipline.
  for (const auto& w : words2)
    for (std::size_t i = 1; i < w.size(); ++i)
      CHECK(letter_allowed(w[i - 1], w[i]));
}

TEST_CASE("witness search certifies tJ is not multiplicatively closed") {
  WitnessSearchResult r = neumann_witness_search(1);
  CHECK(r.radius == 1);
  CHECK(r.words_searched == 6);
  CHECK(r.count == 2);
  REQUIRE(r.witness.has_value());
  CHECK(fp_print(r.witness->first) == "n1");
  CHECK(fp_print(r.witness->second) == "n1^-1");

  FPWord tu = fp_multiply(W("t"), fp_conjugate(W("t"), r.witness->first));
  FPWord tv = fp_multiply(W("t"), fp_conjugate(W("t"), r.witness->second));
  FPWord prod = fp_multiply(tu, tv);
  CHECK(fp_in_tJ(tu));
  CHECK(fp_in_tJ(tv));
  CHECK_FALSE(fp_in_tJ(prod));
  CHECK(fp_print(prod) == "t n1^-1 t n1 t n1 t n1^-1");
  CHECK(prod.syllable_length() == 8);
}

TEST_CASE("witness search at radius 2") {
  WitnessSearchResult r = neumann_witness_search(2);
  CHECK(r.words_searched == 24);
  CHECK(r.count == 200);
  REQUIRE(r.witness.has_value());
  CHECK(fp_print(r.witness->first) == "n1");
  CHECK(fp_print(r.witness->second) == "n1^-1");
}

TEST_CASE("witness search rejects bad radii") {
  CHECK_THROWS_AS(neumann_witness_search(0), std::invalid_argument);
  CHECK_THROWS_AS(neumann_witness_search(-1), std::invalid_argument);
}
