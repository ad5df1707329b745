#include "sharply/galois.hpp"

#include <stdexcept>
#include <string>

namespace sharply {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) {
    ++p;
    if (p * p > q) {
      p = q;
      break;
    }
  }
  int k = 0;
  int m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, k);
}

namespace {

// Polynomials over GF(p) as coefficient vectors, low degree first.
using Poly = std::vector<int>;

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_trim(r);
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  a = poly_trim(a);
  while (a.size() >= m.size()) {
    int lead = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      int idx = static_cast<int>(i + shift);
      a[idx] = ((a[idx] - lead * m[i]) % p + p) % p;
    }
    a = poly_trim(a);
  }
  return a;
}

int poly_encode(const Poly& a, int p) {
  int v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

Poly poly_decode(int idx, int p, int len) {
  Poly c(len, 0);
  for (int i = 0; i < len; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return c;
}

bool poly_irreducible(const Poly& m, int p) {
  int k = static_cast<int>(m.size()) - 1;
  if (k < 1) return false;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (int d = 1; 2 * d <= k; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      Poly div = poly_decode(low, p, d);
      div.push_back(1);
      if (poly_mod(m, div, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(int p, int k) {
  int count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (int low = 0; low < count; ++low) {
    Poly m = poly_decode(low, p, k);
    m.push_back(1);
    if (poly_irreducible(m, p)) return m;
  }
  throw std::runtime_error("make_field: no irreducible modulus found");
}

}  // namespace

int FieldCtx::inv(int a) const {
  if (a == 0) throw std::invalid_argument("FieldCtx::inv: zero has no inverse");
  return inv_table[a];
}

int FieldCtx::pow(int a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int FieldCtx::frobenius(int a) const { return pow(a, p); }

std::vector<int> FieldCtx::to_coeffs(int idx) const {
  return poly_decode(idx, p, k);
}

int FieldCtx::from_coeffs(const std::vector<int>& c) const {
  Poly t = c;
  for (auto& x : t) x = ((x % p) + p) % p;
  t.resize(k, 0);
  return poly_encode(t, p);
}

FieldCtx make_field(int q) {
  auto pk = prime_power(q);
  if (!pk)
    throw std::invalid_argument("make_field: " + std::to_string(q) +
                                " is not a prime power");
  FieldCtx f;
  f.p = pk->first;
  f.k = pk->second;
  f.q = q;
  f.modulus = smallest_irreducible(f.p, f.k);

  f.add_table.assign(q, std::vector<int>(q, 0));
  f.mul_table.assign(q, std::vector<int>(q, 0));
  f.neg_table.assign(q, 0);
  f.inv_table.assign(q, 0);
  f.square_table.assign(q, false);

  for (int a = 0; a < q; ++a) {
    Poly ca = poly_decode(a, f.p, f.k);
    for (int b = 0; b < q; ++b) {
      Poly cb = poly_decode(b, f.p, f.k);
      Poly s(f.k, 0);
      for (int i = 0; i < f.k; ++i) s[i] = (ca[i] + cb[i]) % f.p;
      f.add_table[a][b] = poly_encode(poly_trim(s), f.p);
      Poly m = poly_mod(poly_mul(poly_trim(ca), poly_trim(cb), f.p), f.modulus,
                        f.p);
      f.mul_table[a][b] = poly_encode(m, f.p);
    }
  }
  for (int a = 0; a < q; ++a) {
    Poly ca = poly_decode(a, f.p, f.k);
    for (auto& x : ca) x = (f.p - x) % f.p;
    f.neg_table[a] = poly_encode(poly_trim(ca), f.p);
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f.mul_table[a][b] == 1) f.inv_table[a] = b;
  for (int a = 0; a < q; ++a) f.square_table[f.mul_table[a][a]] = true;
  return f;
}

}  // namespace sharply
