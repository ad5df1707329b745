#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sharply::freeprod {

// Elements of (C2 x F(C)) * F(N): alternating syllables from the two factors.
// The A-factor C2 x F(C) holds the central involution t and the commuting
// generators c1, c2, ...; F(N) holds the free generators n1, n2, ...
//
// A syllable is either
//   is_a = true : (flip, word) with word a freely reduced string over the
//                 commuting generators (entries +-k for c_k^{+-1});
//   is_a = false: a freely reduced string over the free generators
//                 (entries +-k for n_k^{+-1}), flip unused.
struct Syllable {
  bool is_a = false;
  bool flip = false;
  std::vector<int> word;

  bool trivial() const { return word.empty() && !(is_a && flip); }
  bool operator==(const Syllable&) const = default;
  auto operator<=>(const Syllable&) const = default;
};

struct FPWord {
  std::vector<Syllable> syllables;

  bool empty() const { return syllables.empty(); }
  int syllable_length() const { return static_cast<int>(syllables.size()); }
  bool operator==(const FPWord&) const = default;
  auto operator<=>(const FPWord&) const = default;
};

// --- Letter codes -----------------------------------------------------------
// Single generator letters are coded as integers:
//   0        -> t
//   +-2k     -> c_k^{+-1}
//   +-(2k+1) -> n_k^{+-1}   (k >= 1)
// The inverse of a letter is its negation (t is self-inverse, -0 == 0).
inline constexpr int kNoLetter = INT32_MIN;

bool letter_is_t(int code);
bool letter_is_c(int code);
bool letter_is_n(int code);
// Which generator index a letter refers to (1-based); t has none.
int letter_gen_index(int code);
// Token for a letter: "t", "c<k>", "c<k>^-1", "n<k>", "n<k>^-1".
std::string letter_token(int code);

// Whether `next` may follow `last` in a canonical letter sequence (pass
// kNoLetter for the start). Canonical sequences spell normal forms letter by
// letter: each A-syllable is written t-first followed by its reduced c-word,
// N-syllables are reduced n-words, and syllables alternate. Every prefix of
// a canonical sequence is canonical.
bool letter_allowed(int last, int next);

// --- Construction -----------------------------------------------------------
FPWord fp_identity();
FPWord fp_t();
FPWord fp_c(int k, int exponent = 1);
FPWord fp_n(int k, int exponent = 1);
// Product of single letters in order (input need not be canonical).
FPWord fp_from_letters(const std::vector<int>& letters);
// Canonical letter sequence of a normal form (inverse of fp_from_letters on
// canonical input).
std::vector<int> fp_letters(const FPWord& w);
int fp_letter_length(const FPWord& w);

// Space-separated tokens; the identity prints and parses as "1".
std::string fp_print(const FPWord& w);
FPWord fp_parse(const std::string& text);

// --- Arithmetic -------------------------------------------------------------
FPWord fp_multiply(const FPWord& u, const FPWord& v);
FPWord fp_invert(const FPWord& u);
// g^{-1} u g.
FPWord fp_conjugate(const FPWord& u, const FPWord& g);

// True iff u != 1 and u^2 = 1. Cross-checks the structural fact that the
// involutions are exactly the conjugates of t.
bool fp_is_involution(const FPWord& u);

// True iff u lies in tJ = {t*j : j an involution or 1}, i.e. t*u is the
// identity or an involution.
bool fp_in_tJ(const FPWord& u);

// Exact conjugacy in the free product.
bool fp_conjugacy_test(const FPWord& u, const FPWord& v);

// --- Neumann witness search -------------------------------------------------
// Enumerates canonical words of letter length <= radius over the generators
// t, c1..c_{num_c}, n1..n_{num_n}, ordered by (letter length, token string),
// and scans conjugator pairs (u, v) row-major for
//     (t * t^u)(t * t^v) not in tJ,
// which certifies that tJ is not closed under multiplication.
struct WitnessSearchResult {
  std::optional<std::pair<FPWord, FPWord>> witness;  // first found, if any
  long long count = 0;                               // all witnesses in range
  int radius = 0;
  int words_searched = 0;  // conjugator words enumerated
};

WitnessSearchResult neumann_witness_search(int radius, int num_c = 1,
                                           int num_n = 1);

// The canonical word list used by the search (exposed for tests and the
// partial action): all canonical words of letter length <= radius over
// t, c1..c_{num_c}, n1..n_{num_n}, ordered by (letter length, token string).
std::vector<std::vector<int>> enumerate_canonical_letter_words(int radius,
                                                               int num_c,
                                                               int num_n);

}  // namespace sharply::freeprod
