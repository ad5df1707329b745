#include "sharply/projective.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace sharply::proj {

ProjectivePoint normalize_point(const FieldCtx& F, int u, int v) {
  if (u == 0 && v == 0)
    throw std::invalid_argument("normalize_point: zero vector");
  if (v != 0) return {F.mul(u, F.inv(v)), 1};
  return {1, 0};
}

ProjectivePoint affine_point(int x) { return {x, 1}; }

ProjectivePoint point_at_infinity() { return {1, 0}; }

int point_index(const ProjectivePoint& x, int q) {
  if (x.v == 1) return x.u;
  if (x.v == 0 && x.u == 1) return q;
  throw std::invalid_argument("point_index: point not normalized");
}

ProjectivePoint point_from_index(int i, int q) {
  if (i < 0 || i > q) throw std::invalid_argument("point_from_index: range");
  return i == q ? point_at_infinity() : affine_point(i);
}

bool moebius_valid(const FieldCtx& F, const MoebiusMap& m) {
  if (m.a < 0 || m.a >= F.q || m.b < 0 || m.b >= F.q || m.c < 0 ||
      m.c >= F.q || m.d < 0 || m.d >= F.q)
    return false;
  int det = F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
  return det != 0;
}

ProjectivePoint apply_moebius(const FieldCtx& F, const MoebiusMap& m,
                              ProjectivePoint x) {
  int nu = F.add(F.mul(m.a, x.u), F.mul(m.b, x.v));
  int nv = F.add(F.mul(m.c, x.u), F.mul(m.d, x.v));
  return normalize_point(F, nu, nv);
}

FiniteGroup build_pgl(int q) {
  if (!prime_power(q) || q > 16)
    throw std::invalid_argument("build_pgl: q must be a prime power <= 16");
  FieldCtx F = make_field(q);
  std::set<Permutation> perms;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          MoebiusMap m{a, b, c, d};
          if (!moebius_valid(F, m)) continue;
          Permutation perm;
          perm.images.resize(q + 1);
          for (int i = 0; i <= q; ++i)
            perm.images[i] =
                point_index(apply_moebius(F, m, point_from_index(i, q)), q);
          perms.insert(std::move(perm));
        }
  FiniteGroup G = group_from_elements(
      std::vector<Permutation>(perms.begin(), perms.end()));
  G.label = "PGL(2," + std::to_string(q) + ")";
  return G;
}

bool stabilizer_is_affine(int q) {
  FiniteGroup pgl = build_pgl(q);
  FiniteGroup stab = stabilizer(pgl, {q});
  FiniteGroup restricted = restrict_to_complement(stab, {q});
  FiniteGroup affine = build_affine_group(build_field_nearfield(q));
  return restricted.elements == affine.elements;
}

namespace {

int element_order_mul(const NearStructure& D, int a) {
  int x = a, ord = 1;
  while (x != D.one) {
    x = D.mul[x][a];
    ++ord;
    if (ord > D.order) throw std::runtime_error("element_order_mul: no order");
  }
  return ord;
}

}  // namespace

std::vector<std::vector<int>> multiplicative_automorphisms(
    const NearStructure& D) {
  AxiomReport rep = verify_near_domain(D);
  if (!rep.pass)
    throw std::invalid_argument(
        "multiplicative_automorphisms: input is not a near-domain (" +
        rep.to_string() + ")");
  int n = D.order;
  std::vector<int> order(n, 0);
  for (int x = 0; x < n; ++x)
    if (x != D.zero) order[x] = element_order_mul(D, x);

  std::vector<std::vector<int>> result;
  // f over all indices; zero fixed; propagation forces f(a*b) = f(a)*f(b).
  auto propagate = [&](std::vector<int>& f, std::vector<bool>& used) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        if (a == D.zero || f[a] < 0) continue;
        for (int b = 0; b < n; ++b) {
          if (b == D.zero || f[b] < 0) continue;
          int src = D.mul[a][b];
          int dst = D.mul[f[a]][f[b]];
          if (f[src] < 0) {
            if (used[dst]) return false;
            f[src] = dst;
            used[dst] = true;
            changed = true;
          } else if (f[src] != dst) {
            return false;
          }
        }
      }
    }
    return true;
  };

  std::function<void(std::vector<int>, std::vector<bool>)> dfs =
      [&](std::vector<int> f, std::vector<bool> used) {
        if (!propagate(f, used)) return;
        int a = -1;
        for (int i = 0; i < n; ++i)
          if (i != D.zero && f[i] < 0) {
            a = i;
            break;
          }
        if (a < 0) {
          result.push_back(f);
          return;
        }
        for (int v = 0; v < n; ++v) {
          if (v == D.zero || used[v] || order[v] != order[a]) continue;
          auto f2 = f;
          auto u2 = used;
          f2[a] = v;
          u2[v] = true;
          dfs(std::move(f2), std::move(u2));
        }
      };

  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);
  f[D.zero] = D.zero;
  f[D.one] = D.one;
  used[D.one] = true;
  dfs(std::move(f), std::move(used));
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> sigma_inversion(const NearStructure& D) {
  std::vector<int> sigma(D.order, -1);
  sigma[D.zero] = D.zero;
  for (int a = 0; a < D.order; ++a) {
    if (a == D.zero) continue;
    for (int b = 0; b < D.order; ++b)
      if (b != D.zero && D.mul[a][b] == D.one && D.mul[b][a] == D.one) {
        sigma[a] = b;
        break;
      }
    if (sigma[a] < 0)
      throw std::invalid_argument("sigma_inversion: element has no inverse");
  }
  return sigma;
}

bool kerby_sigma_check(const NearStructure& D, const std::vector<int>& sigma,
                       std::string* why) {
  AxiomReport rep = verify_near_domain(D);
  if (!rep.pass)
    throw std::invalid_argument(
        "kerby_sigma_check: input is not a near-domain (" + rep.to_string() +
        ")");
  int n = D.order;
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("kerby_sigma_check: sigma has wrong size");
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("kerby_sigma_check: sigma not a permutation");
    seen[v] = true;
  }
  if (sigma[D.zero] != D.zero)
    throw std::invalid_argument("kerby_sigma_check: sigma must fix zero");

  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int x = 0; x < n; ++x)
    if (sigma[sigma[x]] != x)
      return fail("sigma is not an involution at " + std::to_string(x));
  for (int a = 0; a < n; ++a) {
    if (a == D.zero) continue;
    for (int b = 0; b < n; ++b) {
      if (b == D.zero) continue;
      if (sigma[D.mul[a][b]] != D.mul[sigma[a]][sigma[b]])
        return fail("sigma is not multiplicative at (" + std::to_string(a) +
                    ", " + std::to_string(b) + ")");
    }
  }
  // The functional equation is vacuous at 0 and 1 and breaks down where
  // 1 + x = 0, i.e. at x = -1 (which coincides with 1 exactly in
  // characteristic 2). sigma(0) = 0 keeps both sides total for candidate
  // sigmas that send some other x to -1.
  int minus_one = right_negative(D, D.one);
  for (int x = 0; x < n; ++x) {
    if (x == D.zero || x == D.one || x == minus_one) continue;
    int lhs = sigma[D.add[D.one][sigma[x]]];
    int z = sigma[D.add[D.one][x]];
    int neg = right_negative(D, z);
    int rhs1 = D.add[D.one][neg];
    int rhs2 = D.add[neg][D.one];
    if (lhs != rhs1 || lhs != rhs2)
      return fail("functional equation fails at x = " + std::to_string(x));
  }
  return true;
}

std::vector<std::vector<int>> find_kerby_sigma(const NearStructure& D) {
  if (D.order > 16)
    throw std::invalid_argument("find_kerby_sigma: order above desk cap 16");
  auto autos = multiplicative_automorphisms(D);
  std::vector<std::vector<int>> out;
  for (const auto& f : autos) {
    bool involutory = true;
    for (int x = 0; x < D.order && involutory; ++x)
      involutory = f[f[x]] == x;
    if (!involutory) continue;
    if (kerby_sigma_check(D, f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sharply::proj
