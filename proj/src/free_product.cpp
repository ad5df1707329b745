#include "sharply/free_product.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sharply::freeprod {

namespace {

void free_reduce_append(std::vector<int>& w, int letter) {
  if (!w.empty() && w.back() == -letter)
    w.pop_back();
  else
    w.push_back(letter);
}

std::vector<int> free_reduce_concat(const std::vector<int>& a,
                                    const std::vector<int>& b) {
  std::vector<int> out = a;
  for (int x : b) free_reduce_append(out, x);
  return out;
}

Syllable merge_same_factor(const Syllable& left, const Syllable& right) {
  Syllable merged;
  merged.is_a = left.is_a;
  merged.flip = left.flip ^ right.flip;
  merged.word = free_reduce_concat(left.word, right.word);
  return merged;
}

void push_syllable(std::vector<Syllable>& out, const Syllable& s) {
  if (s.trivial()) return;
  if (out.empty() || out.back().is_a != s.is_a) {
    out.push_back(s);
    return;
  }
  Syllable merged = merge_same_factor(out.back(), s);
  out.pop_back();
  if (!merged.trivial()) out.push_back(std::move(merged));
}

}  // namespace

bool letter_is_t(int code) { return code == 0; }

bool letter_is_c(int code) {
  return code != kNoLetter && code != 0 && std::abs(code) % 2 == 0;
}

bool letter_is_n(int code) {
  return code != kNoLetter && std::abs(code) % 2 == 1;
}

int letter_gen_index(int code) {
  if (letter_is_c(code)) return std::abs(code) / 2;
  if (letter_is_n(code)) return (std::abs(code) - 1) / 2;
  throw std::invalid_argument("letter_gen_index: letter has no index");
}

std::string letter_token(int code) {
  if (code == 0) return "t";
  int k = letter_gen_index(code);
  std::string s = letter_is_c(code) ? "c" : "n";
  s += std::to_string(k);
  if (code < 0) s += "^-1";
  return s;
}

bool letter_allowed(int last, int next) {
  if (next == kNoLetter) return false;
  if (letter_is_t(next)) return last == kNoLetter || letter_is_n(last);
  if (letter_is_c(next))
    return last == kNoLetter || letter_is_t(last) || letter_is_n(last) ||
           (letter_is_c(last) && last != -next);
  return last == kNoLetter || letter_is_t(last) || letter_is_c(last) ||
         (letter_is_n(last) && last != -next);
}

FPWord fp_identity() { return {}; }

FPWord fp_t() {
  Syllable s;
  s.is_a = true;
  s.flip = true;
  return FPWord{{s}};
}

FPWord fp_c(int k, int exponent) {
  if (k < 1) throw std::invalid_argument("fp_c: index must be >= 1");
  if (exponent == 0) return {};
  Syllable s;
  s.is_a = true;
  s.word.assign(std::abs(exponent), exponent > 0 ? k : -k);
  return FPWord{{s}};
}

FPWord fp_n(int k, int exponent) {
  if (k < 1) throw std::invalid_argument("fp_n: index must be >= 1");
  if (exponent == 0) return {};
  Syllable s;
  s.is_a = false;
  s.word.assign(std::abs(exponent), exponent > 0 ? k : -k);
  return FPWord{{s}};
}

FPWord fp_from_letters(const std::vector<int>& letters) {
  std::vector<Syllable> out;
  for (int code : letters) {
    if (code == kNoLetter || (code != 0 && std::abs(code) < 2))
      throw std::invalid_argument("fp_from_letters: bad letter code " +
                                  std::to_string(code));
    Syllable s;
    if (code == 0) {
      s.is_a = true;
      s.flip = true;
    } else if (std::abs(code) % 2 == 0) {
      s.is_a = true;
      int k = std::abs(code) / 2;
      s.word = {code > 0 ? k : -k};
    } else {
      s.is_a = false;
      int k = (std::abs(code) - 1) / 2;
      s.word = {code > 0 ? k : -k};
    }
    push_syllable(out, s);
  }
  return FPWord{std::move(out)};
}

std::vector<int> fp_letters(const FPWord& w) {
  std::vector<int> out;
  for (const auto& s : w.syllables) {
    if (s.is_a) {
      if (s.flip) out.push_back(0);
      for (int x : s.word) out.push_back(x > 0 ? 2 * x : -2 * (-x));
    } else {
      for (int x : s.word)
        out.push_back(x > 0 ? 2 * x + 1 : -(2 * (-x) + 1));
    }
  }
  return out;
}

int fp_letter_length(const FPWord& w) {
  int n = 0;
  for (const auto& s : w.syllables) {
    n += static_cast<int>(s.word.size());
    if (s.is_a && s.flip) ++n;
  }
  return n;
}

std::string fp_print(const FPWord& w) {
  if (w.empty()) return "1";
  std::vector<int> letters = fp_letters(w);
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += letter_token(letters[i]);
  }
  return out;
}

namespace {

int parse_token(const std::string& tok) {
  if (tok == "t") return 0;
  if (tok.size() < 2 || (tok[0] != 'c' && tok[0] != 'n'))
    throw std::invalid_argument("bad word token: " + tok);
  std::size_t i = 1;
  while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
    ++i;
  if (i == 1) throw std::invalid_argument("bad word token: " + tok);
  int k = std::stoi(tok.substr(1, i - 1));
  if (k < 1) throw std::invalid_argument("bad word token: " + tok);
  bool inv = false;
  if (i < tok.size()) {
    if (tok.substr(i) != "^-1")
      throw std::invalid_argument("bad word token: " + tok);
    inv = true;
  }
  int code = tok[0] == 'c' ? 2 * k : 2 * k + 1;
  return inv ? -code : code;
}

}  // namespace

FPWord fp_parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.empty())
    throw std::invalid_argument("empty word; use 1 for the identity");
  if (tokens.size() == 1 && tokens[0] == "1") return {};
  std::vector<int> letters;
  letters.reserve(tokens.size());
  for (const auto& s : tokens) letters.push_back(parse_token(s));
  return fp_from_letters(letters);
}

FPWord fp_multiply(const FPWord& u, const FPWord& v) {
  std::vector<Syllable> out = u.syllables;
  for (const auto& s : v.syllables) push_syllable(out, s);
  return FPWord{std::move(out)};
}

FPWord fp_invert(const FPWord& u) {
  FPWord r;
  r.syllables.reserve(u.syllables.size());
  for (auto it = u.syllables.rbegin(); it != u.syllables.rend(); ++it) {
    Syllable s = *it;
    std::reverse(s.word.begin(), s.word.end());
    for (int& x : s.word) x = -x;
    r.syllables.push_back(std::move(s));
  }
  return r;
}

FPWord fp_conjugate(const FPWord& u, const FPWord& g) {
  return fp_multiply(fp_multiply(fp_invert(g), u), g);
}

namespace {

// Conjugate by the last syllable while the two ends lie in the same factor.
FPWord cyclically_reduce(FPWord w) {
  while (w.syllables.size() >= 2 &&
         w.syllables.front().is_a == w.syllables.back().is_a) {
    Syllable last = w.syllables.back();
    w.syllables.pop_back();
    Syllable merged = merge_same_factor(last, w.syllables.front());
    w.syllables.erase(w.syllables.begin());
    if (!merged.trivial())
      w.syllables.insert(w.syllables.begin(), std::move(merged));
  }
  return w;
}

// Conjugacy of freely reduced words in a free group: cyclically reduce,
// then compare up to rotation.
bool cyclic_word_equal(std::vector<int> a, std::vector<int> b) {
  auto strip = [](std::vector<int>& w) {
    std::size_t i = 0, j = w.size();
    while (j - i >= 2 && w[i] == -w[j - 1]) {
      ++i;
      --j;
    }
    w.assign(w.begin() + i, w.begin() + j);
  };
  strip(a);
  strip(b);
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool match = true;
    for (std::size_t i = 0; i < a.size() && match; ++i)
      match = a[(i + r) % a.size()] == b[i];
    if (match) return true;
  }
  return false;
}

bool syllable_conjugate_in_factor(const Syllable& x, const Syllable& y) {
  if (x.is_a != y.is_a) return false;
  if (x.is_a && x.flip != y.flip) return false;
  return cyclic_word_equal(x.word, y.word);
}

}  // namespace

bool fp_conjugacy_test(const FPWord& u, const FPWord& v) {
  FPWord a = cyclically_reduce(u);
  FPWord b = cyclically_reduce(v);
  std::size_t m = a.syllables.size();
  if (m != b.syllables.size()) return false;
  if (m == 0) return true;
  if (m == 1)
    return syllable_conjugate_in_factor(a.syllables[0], b.syllables[0]);
  for (std::size_t r = 0; r < m; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < m && match; ++i)
      match = a.syllables[(i + r) % m] == b.syllables[i];
    if (match) return true;
  }
  return false;
}

bool fp_is_involution(const FPWord& u) {
  if (u.empty()) return false;
  bool by_square = fp_multiply(u, u).empty();
  // Torsion in a free product is conjugate into a factor; the only
  // involution in C2 x F(C) is t and F(N) is torsion free.
  bool by_structure = fp_conjugacy_test(u, fp_t());
  if (by_square != by_structure)
    throw std::runtime_error(
        "fp_is_involution: square test and torsion structure disagree");
  return by_square;
}

bool fp_in_tJ(const FPWord& u) {
  FPWord p = fp_multiply(fp_t(), u);
  return p.empty() || fp_is_involution(p);
}

std::vector<std::vector<int>> enumerate_canonical_letter_words(int radius,
                                                               int num_c,
                                                               int num_n) {
  if (radius < 0)
    throw std::invalid_argument(
        "enumerate_canonical_letter_words: radius must be >= 0");
  if (num_c < 0 || num_n < 0)
    throw std::invalid_argument(
        "enumerate_canonical_letter_words: generator counts must be >= 0");
  std::vector<int> alphabet;
  alphabet.push_back(0);
  for (int k = 1; k <= num_c; ++k) {
    alphabet.push_back(2 * k);
    alphabet.push_back(-2 * k);
  }
  for (int k = 1; k <= num_n; ++k) {
    alphabet.push_back(2 * k + 1);
    alphabet.push_back(-(2 * k + 1));
  }
  std::vector<std::vector<int>> words;
  std::vector<int> cur;
  std::function<void()> rec = [&]() {
    words.push_back(cur);
    if (static_cast<int>(cur.size()) >= radius) return;
    int last = cur.empty() ? kNoLetter : cur.back();
    for (int a : alphabet)
      if (letter_allowed(last, a)) {
        cur.push_back(a);
        rec();
        cur.pop_back();
      }
  };
  rec();
  auto token_string = [](const std::vector<int>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ' ';
      s += letter_token(w[i]);
    }
    return s;
  };
  std::sort(words.begin(), words.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return token_string(a) < token_string(b);
            });
  return words;
}

WitnessSearchResult neumann_witness_search(int radius, int num_c, int num_n) {
  if (radius < 1)
    throw std::invalid_argument(
        "neumann_witness_search: radius must be >= 1");
  auto words = enumerate_canonical_letter_words(radius, num_c, num_n);
  WitnessSearchResult res;
  res.radius = radius;
  res.words_searched = static_cast<int>(words.size());

  FPWord t = fp_t();
  std::vector<FPWord> conjugators;
  std::vector<FPWord> factors;  // t * t^u per conjugator u
  conjugators.reserve(words.size());
  factors.reserve(words.size());
  for (const auto& w : words) {
    FPWord u = fp_from_letters(w);
    factors.push_back(fp_multiply(t, fp_conjugate(t, u)));
    conjugators.push_back(std::move(u));
  }
  for (std::size_t i = 0; i < conjugators.size(); ++i)
    for (std::size_t j = 0; j < conjugators.size(); ++j) {
      FPWord prod = fp_multiply(factors[i], factors[j]);
      if (!fp_in_tJ(prod)) {
        ++res.count;
        if (!res.witness)
          res.witness = std::make_pair(conjugators[i], conjugators[j]);
      }
    }
  return res;
}

}  // namespace sharply::freeprod
