#pragma once

#include <compare>
#include <string>
#include <vector>

namespace sharply {

// Permutation of {0..degree-1} stored as an image table. Composition follows
// the right action convention throughout the library: x^(ab) = (x^a)^b.
struct Permutation {
  std::vector<int> images;

  int degree() const { return static_cast<int>(images.size()); }
  int apply(int x) const { return images[x]; }
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation& o) const { return images <=> o.images; }
};

Permutation identity_perm(int degree);

// result[x] = b.images[a.images[x]], so that x^(ab) = (x^a)^b.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& a);

// h^-1 g h.
Permutation conjugate_perm(const Permutation& g, const Permutation& h);

int perm_order(const Permutation& a);

std::vector<int> fixed_points(const Permutation& a);

// Parses disjoint cycle notation over 0-based points, e.g. "(0 1 2)(3 4)".
// "()" denotes the identity.
Permutation parse_cycles(int degree, const std::string& text);

std::string print_cycles(const Permutation& a);

}  // namespace sharply
