#pragma once

#include <optional>
#include <vector>

namespace sharply {

bool is_prime(int n);

// Returns (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(int q);

// Arithmetic for GF(p^k) in polynomial representation. Elements are indices
// in [0, q); the index sum c_i * p^i encodes the coefficient vector
// (c_0, ..., c_{k-1}) modulo the irreducible modulus.
struct FieldCtx {
  int p = 0;
  int k = 0;
  int q = 0;
  std::vector<int> modulus;  // monic, degree k, coefficients low to high

  std::vector<std::vector<int>> add_table;
  std::vector<std::vector<int>> mul_table;
  std::vector<int> neg_table;
  std::vector<int> inv_table;
  std::vector<bool> square_table;

  int add(int a, int b) const { return add_table[a][b]; }
  int sub(int a, int b) const { return add_table[a][neg_table[b]]; }
  int neg(int a) const { return neg_table[a]; }
  int mul(int a, int b) const { return mul_table[a][b]; }
  int inv(int a) const;  // throws on a = 0
  int pow(int a, long e) const;
  // Zero counts as a square; for odd q this is the Euler criterion.
  bool is_square(int a) const { return square_table[a]; }
  int frobenius(int a) const;  // a^p

  std::vector<int> to_coeffs(int idx) const;
  int from_coeffs(const std::vector<int>& c) const;
};

// Builds GF(q) with the monic irreducible modulus of smallest integer
// encoding (coefficients read as a base-p number, leading term included).
// Throws std::invalid_argument when q is not a prime power.
FieldCtx make_field(int q);

}  // namespace sharply
