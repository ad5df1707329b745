#include "sharply/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sharply {

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images[x] != x) return false;
  return true;
}

Permutation identity_perm(int degree) {
  Permutation p;
  p.images.resize(degree);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  Permutation r;
  r.images.resize(a.degree());
  for (int x = 0; x < a.degree(); ++x) r.images[x] = b.images[a.images[x]];
  return r;
}

Permutation inverse(const Permutation& a) {
  Permutation r;
  r.images.resize(a.degree());
  for (int x = 0; x < a.degree(); ++x) r.images[a.images[x]] = x;
  return r;
}

Permutation conjugate_perm(const Permutation& g, const Permutation& h) {
  return compose(compose(inverse(h), g), h);
}

int perm_order(const Permutation& a) {
  int n = a.degree();
  std::vector<bool> seen(n, false);
  long order = 1;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    int len = 0;
    int y = x;
    do {
      seen[y] = true;
      y = a.images[y];
      ++len;
    } while (y != x);
    order = std::lcm(order, static_cast<long>(len));
  }
  return static_cast<int>(order);
}

std::vector<int> fixed_points(const Permutation& a) {
  std::vector<int> fix;
  for (int x = 0; x < a.degree(); ++x)
    if (a.images[x] == x) fix.push_back(x);
  return fix;
}

Permutation parse_cycles(int degree, const std::string& text) {
  Permutation p = identity_perm(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("parse_cycles: expected '(' in \"" + text +
                                  "\"");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      std::size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == i)
        throw std::invalid_argument("parse_cycles: expected point in \"" +
                                    text + "\"");
      int pt = std::stoi(text.substr(i, j - i));
      if (pt < 0 || pt >= degree)
        throw std::invalid_argument("parse_cycles: point out of range");
      cyc.push_back(pt);
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i == text.size())
      throw std::invalid_argument("parse_cycles: missing ')'");
    ++i;
    for (std::size_t c = 0; c < cyc.size(); ++c) {
      int from = cyc[c];
      int to = cyc[(c + 1) % cyc.size()];
      if (p.images[from] != from)
        throw std::invalid_argument("parse_cycles: repeated point");
      p.images[from] = to;
    }
    skip_ws();
  }
  // Repeated-point detection above only guards within-pass overwrites; verify
  // the result is a bijection.
  std::vector<bool> seen(degree, false);
  for (int x = 0; x < degree; ++x) {
    if (seen[p.images[x]])
      throw std::invalid_argument("parse_cycles: not a bijection");
    seen[p.images[x]] = true;
  }
  return p;
}

std::string print_cycles(const Permutation& a) {
  std::ostringstream out;
  std::vector<bool> seen(a.degree(), false);
  bool any = false;
  for (int x = 0; x < a.degree(); ++x) {
    if (seen[x] || a.images[x] == x) {
      seen[x] = true;
      continue;
    }
    out << '(';
    int y = x;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << y;
      seen[y] = true;
      y = a.images[y];
      first = false;
    } while (y != x);
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace sharply
