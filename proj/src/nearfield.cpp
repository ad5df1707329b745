#include "sharply/nearfield.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sharply/galois.hpp"

namespace sharply {

namespace {

void validate_shape(const NearStructure& S, const char* who) {
  if (S.order < 2)
    throw std::invalid_argument(std::string(who) + ": order must be >= 2");
  if (S.zero < 0 || S.zero >= S.order || S.one < 0 || S.one >= S.order ||
      S.zero == S.one)
    throw std::invalid_argument(std::string(who) +
                                ": bad distinguished elements");
  auto check_table = [&](const std::vector<std::vector<int>>& t,
                         const char* name) {
    if (static_cast<int>(t.size()) != S.order)
      throw std::invalid_argument(std::string(who) + ": " + name +
                                  " table has wrong row count");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != S.order)
        throw std::invalid_argument(std::string(who) + ": " + name +
                                    " table has wrong row length");
      for (int v : row)
        if (v < 0 || v >= S.order)
          throw std::invalid_argument(std::string(who) + ": " + name +
                                      " table entry out of range");
    }
  };
  check_table(S.add, "add");
  check_table(S.mul, "mul");
}

AxiomReport fail_report(std::string axiom, std::vector<int> witness,
                        std::string detail) {
  AxiomReport r;
  r.pass = false;
  r.axiom = std::move(axiom);
  r.witness = std::move(witness);
  r.detail = std::move(detail);
  return r;
}

bool addition_associative_scan(const NearStructure& S) {
  for (int a = 0; a < S.order; ++a)
    for (int b = 0; b < S.order; ++b)
      for (int c = 0; c < S.order; ++c)
        if (S.add[S.add[a][b]][c] != S.add[a][S.add[b][c]]) return false;
  return true;
}

// Shared by both verifiers: multiplicative group axioms on the nonzero
// carrier plus the annihilation law for zero.
std::optional<AxiomReport> check_multiplication(const NearStructure& S) {
  for (int a = 0; a < S.order; ++a) {
    if (S.mul[S.zero][a] != S.zero)
      return fail_report("multiplication: zero product", {S.zero, a},
                         "zero * a != zero");
    if (S.mul[a][S.zero] != S.zero)
      return fail_report("multiplication: zero product", {a, S.zero},
                         "a * zero != zero");
  }
  for (int a = 0; a < S.order; ++a) {
    if (a == S.zero) continue;
    for (int b = 0; b < S.order; ++b) {
      if (b == S.zero) continue;
      if (S.mul[a][b] == S.zero)
        return fail_report("multiplication: closure", {a, b},
                           "product of nonzero elements is zero");
    }
  }
  for (int a = 0; a < S.order; ++a) {
    if (S.mul[S.one][a] != a)
      return fail_report("multiplication: identity", {a}, "one * a != a");
    if (S.mul[a][S.one] != a)
      return fail_report("multiplication: identity", {a}, "a * one != a");
  }
  for (int a = 0; a < S.order; ++a) {
    if (a == S.zero) continue;
    for (int b = 0; b < S.order; ++b) {
      if (b == S.zero) continue;
      for (int c = 0; c < S.order; ++c) {
        if (c == S.zero) continue;
        if (S.mul[S.mul[a][b]][c] != S.mul[a][S.mul[b][c]])
          return fail_report("multiplication: associativity", {a, b, c},
                             "(a*b)*c != a*(b*c)");
      }
    }
  }
  for (int a = 0; a < S.order; ++a) {
    if (a == S.zero) continue;
    bool found = false;
    for (int b = 0; b < S.order && !found; ++b)
      found = S.mul[a][b] == S.one && S.mul[b][a] == S.one;
    if (!found)
      return fail_report("multiplication: inverse", {a},
                         "no two-sided multiplicative inverse");
  }
  return std::nullopt;
}

std::optional<AxiomReport> check_right_distributivity(const NearStructure& S) {
  for (int a = 0; a < S.order; ++a)
    for (int b = 0; b < S.order; ++b)
      for (int c = 0; c < S.order; ++c) {
        if (c == S.zero) continue;
        if (S.mul[S.add[a][b]][c] != S.add[S.mul[a][c]][S.mul[b][c]])
          return fail_report("right distributivity", {a, b, c},
                             "(a+b)*c != a*c + b*c");
      }
  return std::nullopt;
}

}  // namespace

std::string AxiomReport::to_string() const {
  if (pass) {
    return addition_associative ? "pass (addition associative)"
                                : "pass (addition non-associative)";
  }
  std::ostringstream out;
  out << "fail: " << axiom;
  if (!witness.empty()) {
    out << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) out << ", ";
      out << witness[i];
    }
    out << ")";
  }
  if (!detail.empty()) out << " [" << detail << "]";
  return out.str();
}

AxiomReport verify_near_field(const NearStructure& S) {
  validate_shape(S, "verify_near_field");
  for (int a = 0; a < S.order; ++a) {
    if (S.add[S.zero][a] != a)
      return fail_report("addition: identity", {a}, "zero + a != a");
    if (S.add[a][S.zero] != a)
      return fail_report("addition: identity", {a}, "a + zero != a");
  }
  for (int a = 0; a < S.order; ++a)
    for (int b = 0; b < S.order; ++b)
      for (int c = 0; c < S.order; ++c)
        if (S.add[S.add[a][b]][c] != S.add[a][S.add[b][c]])
          return fail_report("addition: associativity", {a, b, c},
                             "(a+b)+c != a+(b+c)");
  for (int a = 0; a < S.order; ++a) {
    bool found = false;
    for (int b = 0; b < S.order && !found; ++b)
      found = S.add[a][b] == S.zero && S.add[b][a] == S.zero;
    if (!found)
      return fail_report("addition: inverse", {a},
                         "no two-sided additive inverse");
  }
  if (auto r = check_multiplication(S)) return *r;
  if (auto r = check_right_distributivity(S)) return *r;
  AxiomReport ok;
  ok.pass = true;
  ok.addition_associative = true;
  return ok;
}

AxiomReport verify_near_domain(const NearStructure& S) {
  validate_shape(S, "verify_near_domain");
  for (int a = 0; a < S.order; ++a) {
    if (S.add[S.zero][a] != a)
      return fail_report("addition: identity", {a}, "zero + a != a");
    if (S.add[a][S.zero] != a)
      return fail_report("addition: identity", {a}, "a + zero != a");
  }
  for (int a = 0; a < S.order; ++a) {
    std::vector<bool> row(S.order, false), col(S.order, false);
    for (int b = 0; b < S.order; ++b) {
      if (row[S.add[a][b]])
        return fail_report("addition: left translation", {a},
                           "row is not a bijection");
      row[S.add[a][b]] = true;
      if (col[S.add[b][a]])
        return fail_report("addition: right translation", {a},
                           "column is not a bijection");
      col[S.add[b][a]] = true;
    }
  }
  if (auto r = check_multiplication(S)) return *r;
  if (auto r = check_right_distributivity(S)) return *r;
  AxiomReport ok;
  ok.pass = true;
  ok.addition_associative = addition_associative_scan(S);
  return ok;
}

NearStructure build_field_nearfield(int q) {
  FieldCtx f = make_field(q);
  NearStructure S;
  S.order = q;
  S.add = f.add_table;
  S.mul = f.mul_table;
  S.zero = 0;
  S.one = 1;
  S.label = "GF(" + std::to_string(q) + ")";
  return S;
}

namespace {

NearStructure twisted_table(int q, bool twist_on_right, const char* who) {
  auto pk = prime_power(q);
  if (!pk || pk->second != 2 || pk->first == 2)
    throw std::invalid_argument(std::string(who) +
                                ": q must be the square of an odd prime");
  if (q > 49)
    throw std::invalid_argument(std::string(who) + ": q above desk cap 49");
  FieldCtx f = make_field(q);
  NearStructure S;
  S.order = q;
  S.add = f.add_table;
  S.mul.assign(q, std::vector<int>(q, 0));
  S.zero = 0;
  S.one = 1;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      bool plain = twist_on_right ? f.is_square(b) : f.is_square(a);
      S.mul[a][b] = plain ? f.mul(a, b)
                          : (twist_on_right ? f.mul(f.frobenius(a), b)
                                            : f.mul(a, f.frobenius(b)));
    }
  return S;
}

}  // namespace

NearStructure build_dickson_nearfield(int q) {
  NearStructure S = twisted_table(q, true, "build_dickson_nearfield");
  S.label = "Dickson(" + std::to_string(q) + ")";
  AxiomReport r = verify_near_field(S);
  if (!r.pass)
    throw std::runtime_error("build_dickson_nearfield: " + r.to_string());
  return S;
}

NearStructure build_left_twist_table(int q) {
  NearStructure S = twisted_table(q, false, "build_left_twist_table");
  S.label = "left-twist(" + std::to_string(q) + ")";
  return S;
}

NearStructure build_broken_loop_table() {
  NearStructure S;
  S.order = 5;
  S.zero = 0;
  S.one = 1;
  S.add = {{0, 1, 2, 3, 4},
           {1, 0, 4, 2, 3},
           {2, 4, 3, 0, 1},
           {3, 2, 1, 4, 0},
           {4, 3, 0, 1, 2}};
  S.mul.assign(5, std::vector<int>(5, 0));
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) S.mul[a][b] = a * b % 5;
  S.label = "broken-loop(5)";
  return S;
}

FiniteGroup build_affine_group(const NearStructure& S) {
  AxiomReport r = verify_near_field(S);
  if (!r.pass)
    throw std::invalid_argument("build_affine_group: not a near-field (" +
                                r.to_string() + ")");
  std::vector<Permutation> elems;
  for (int a = 0; a < S.order; ++a) {
    if (a == S.zero) continue;
    for (int b = 0; b < S.order; ++b) {
      Permutation p;
      p.images.resize(S.order);
      for (int x = 0; x < S.order; ++x) p.images[x] = S.add[S.mul[x][a]][b];
      elems.push_back(std::move(p));
    }
  }
  FiniteGroup G = group_from_elements(std::move(elems));
  G.label = S.label.empty() ? "affine group" : "affine(" + S.label + ")";
  return G;
}

int right_negative(const NearStructure& S, int a) {
  for (int y = 0; y < S.order; ++y)
    if (S.add[a][y] == S.zero) return y;
  throw std::invalid_argument("right_negative: no additive inverse");
}

NearStructure extract_near_domain(const FiniteGroup& G, int zero, int one,
                                  int orientation) {
  if (zero < 0 || zero >= G.degree || one < 0 || one >= G.degree ||
      zero == one)
    throw std::invalid_argument("extract_near_domain: bad base points");
  if (!is_sharply_n_transitive(G, 2))
    throw std::invalid_argument(
        "extract_near_domain: group is not sharply 2-transitive");
  if (orientation < -1 || orientation > 3)
    throw std::invalid_argument("extract_near_domain: orientation out of range");

  int n = G.degree;
  // The unique element swapping zero and one; its square fixes both points,
  // so it is an involution.
  const Permutation* t = nullptr;
  for (const auto& g : G.elements)
    if (g.images[zero] == one && g.images[one] == zero) {
      t = &g;
      break;
    }
  if (!t || !compose(*t, *t).is_identity())
    throw std::runtime_error("extract_near_domain: no swapping involution");

  // rho_b: the unique product of two involutions with zero^rho = b. With
  // fixed-point involutions this set equals t*J for any single involution
  // t; with fixed-point-free involutions t*J omits t itself, and taking
  // products over all pairs adds exactly t back.
  std::vector<const Permutation*> rho(n, nullptr);
  std::vector<const Permutation*> invs;
  for (const auto& j : G.elements)
    if (!j.is_identity() && compose(j, j).is_identity()) invs.push_back(&j);
  std::set<Permutation> tJ;
  for (const Permutation* a : invs)
    for (const Permutation* b : invs) tJ.insert(compose(*a, *b));
  for (const auto& p : tJ) {
    int target = p.images[zero];
    if (rho[target])
      throw std::runtime_error(
          "extract_near_domain: translation set is not regular");
    rho[target] = &p;
  }
  for (int b = 0; b < n; ++b)
    if (!rho[b])
      throw std::runtime_error(
          "extract_near_domain: translation set misses a target");

  // g_a: the unique zero-stabilizer element with one^g = a.
  std::vector<const Permutation*> gmap(n, nullptr);
  for (const auto& g : G.elements) {
    if (g.images[zero] != zero) continue;
    int target = g.images[one];
    if (gmap[target])
      throw std::runtime_error(
          "extract_near_domain: stabilizer action is not regular");
    gmap[target] = &g;
  }

  auto build_variant = [&](int variant) {
    bool add_flip = (variant & 2) != 0;
    bool mul_flip = (variant & 1) != 0;
    NearStructure S;
    S.order = n;
    S.zero = zero;
    S.one = one;
    S.add.assign(n, std::vector<int>(n, 0));
    S.mul.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        S.add[a][b] =
            add_flip ? rho[a]->images[b] : rho[b]->images[a];
        if (a == zero || b == zero)
          S.mul[a][b] = zero;
        else
          S.mul[a][b] =
              mul_flip ? gmap[a]->images[b] : gmap[b]->images[a];
      }
    S.label = "extracted near-domain";
    return S;
  };

  if (orientation >= 0) {
    NearStructure S = build_variant(orientation);
    AxiomReport r = verify_near_domain(S);
    if (!r.pass)
      throw std::runtime_error("extract_near_domain: orientation " +
                               std::to_string(orientation) + " failed (" +
                               r.to_string() + ")");
    return S;
  }
  std::string failures;
  for (int variant = 0; variant < 4; ++variant) {
    NearStructure S = build_variant(variant);
    AxiomReport r = verify_near_domain(S);
    if (r.pass) return S;
    failures += "\n  orientation " + std::to_string(variant) + ": " +
                r.to_string();
  }
  throw std::runtime_error("extract_near_domain: no orientation verifies:" +
                           failures);
}

namespace {

// Closure limited to `limit` elements; nullopt when it would grow past it.
std::optional<std::vector<Permutation>> closure_limited(
    const std::vector<Permutation>& gens, std::size_t limit) {
  std::set<Permutation> seen;
  std::vector<Permutation> todo;
  Permutation id = identity_perm(gens.front().degree());
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Permutation cur = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Permutation next = compose(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > limit) return std::nullopt;
        todo.push_back(next);
      }
    }
  }
  return std::vector<Permutation>(seen.begin(), seen.end());
}

}  // namespace

std::vector<FiniteGroup> classify_regular_linear_groups(int p, int k) {
  if (!is_prime(p))
    throw std::invalid_argument("classify_regular_linear_groups: p not prime");
  int q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 16)
      throw std::invalid_argument(
          "classify_regular_linear_groups: p^k above desk cap 16");
  }
  int nvec = q;  // vector index = base-p coefficient encoding
  int deg = q - 1;

  auto decode = [&](int idx) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) {
      c[i] = idx % p;
      idx /= p;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int v = 0;
    for (int i = k; i-- > 0;) v = v * p + c[i];
    return v;
  };

  // All invertible matrices as permutations of the nonzero vectors
  // (point i <-> vector i+1), acting by row-vector times matrix.
  std::vector<Permutation> gl;
  int nmat = 1;
  for (int i = 0; i < k * k; ++i) nmat *= p;
  for (int m = 0; m < nmat; ++m) {
    std::vector<int> mat(k * k);
    int mm = m;
    for (int i = 0; i < k * k; ++i) {
      mat[i] = mm % p;
      mm /= p;
    }
    Permutation perm;
    perm.images.assign(deg, -1);
    std::vector<bool> hit(nvec, false);
    bool invertible = true;
    for (int v = 1; v < nvec && invertible; ++v) {
      std::vector<int> c = decode(v);
      std::vector<int> r(k, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) r[j] = (r[j] + c[i] * mat[i * k + j]) % p;
      int w = encode(r);
      if (w == 0 || hit[w]) {
        invertible = false;
        break;
      }
      hit[w] = true;
      perm.images[v - 1] = w - 1;
    }
    if (invertible) gl.push_back(std::move(perm));
  }
  std::sort(gl.begin(), gl.end());

  // Candidate elements: nontrivial, order dividing q-1, all nontrivial powers
  // fixed point free (the cyclic group they generate acts freely).
  std::vector<Permutation> candidates;
  for (const auto& g : gl) {
    if (g.is_identity()) continue;
    int ord = perm_order(g);
    if ((q - 1) % ord != 0) continue;
    bool free_action = true;
    Permutation pw = g;
    for (int e = 1; e < ord && free_action; ++e) {
      if (!fixed_points(pw).empty()) free_action = false;
      pw = compose(pw, g);
    }
    if (free_action) candidates.push_back(g);
  }

  // Depth-first closure search over candidate generators.
  std::set<std::vector<Permutation>> found;
  auto all_candidates_ok = [&](const std::vector<Permutation>& elems) {
    for (const auto& e : elems) {
      if (e.is_identity()) continue;
      if (!std::binary_search(candidates.begin(), candidates.end(), e))
        return false;
    }
    return true;
  };

  std::vector<Permutation> trivial{identity_perm(deg)};
  std::vector<std::pair<std::vector<Permutation>, std::size_t>> stack;
  stack.push_back({trivial, 0});
  while (!stack.empty()) {
    auto [elems, start] = stack.back();
    stack.pop_back();
    for (std::size_t ci = start; ci < candidates.size(); ++ci) {
      if (std::binary_search(elems.begin(), elems.end(), candidates[ci]))
        continue;
      std::vector<Permutation> gens = elems;
      gens.push_back(candidates[ci]);
      auto bigger = closure_limited(gens, static_cast<std::size_t>(deg));
      if (!bigger) continue;
      if ((deg % static_cast<int>(bigger->size())) != 0) continue;
      if (!all_candidates_ok(*bigger)) continue;
      if (static_cast<int>(bigger->size()) == deg) {
        // Regular: free by candidate membership, transitive by orbit count.
        FiniteGroup H = group_from_elements(*bigger);
        if (is_transitive(H)) found.insert(*bigger);
      } else {
        stack.push_back({*bigger, ci + 1});
      }
    }
  }

  // Partition by GL-conjugacy; keep the lexicographically least element set
  // of each class as representative.
  std::vector<std::vector<Permutation>> reps;
  std::set<std::vector<Permutation>> classified;
  for (const auto& sub : found) {
    if (classified.count(sub)) continue;
    std::vector<Permutation> least = sub;
    for (const auto& g : gl) {
      std::vector<Permutation> conj;
      conj.reserve(sub.size());
      for (const auto& h : sub) conj.push_back(conjugate_perm(h, g));
      std::sort(conj.begin(), conj.end());
      classified.insert(conj);
      if (conj < least) least = conj;
    }
    reps.push_back(std::move(least));
  }
  std::sort(reps.begin(), reps.end());

  std::vector<FiniteGroup> out;
  for (auto& r : reps) {
    FiniteGroup H = group_from_elements(std::move(r));
    H.label = "regular linear subgroup GL(" + std::to_string(k) + "," +
              std::to_string(p) + ")";
    out.push_back(std::move(H));
  }
  return out;
}

NearStructure induced_near_structure(const FiniteGroup& H, int p, int k) {
  int q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (H.degree != q - 1)
    throw std::invalid_argument("induced_near_structure: degree mismatch");
  if (static_cast<int>(H.order()) != q - 1)
    throw std::invalid_argument("induced_near_structure: group not regular");

  // h_b: the unique element sending the first basis vector (index 1) to b.
  std::vector<const Permutation*> hmap(q, nullptr);
  for (const auto& h : H.elements) {
    int target = h.images[0] + 1;
    if (hmap[target])
      throw std::invalid_argument("induced_near_structure: group not regular");
    hmap[target] = &h;
  }
  NearStructure S;
  S.order = q;
  S.zero = 0;
  S.one = 1;
  S.add.assign(q, std::vector<int>(q, 0));
  S.mul.assign(q, std::vector<int>(q, 0));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      int va = a, vb = b, sum = 0, mult = 1;
      for (int i = 0; i < k; ++i) {
        sum += (va % p + vb % p) % p * mult;
        va /= p;
        vb /= p;
        mult *= p;
      }
      S.add[a][b] = sum;
      if (a != 0 && b != 0) S.mul[a][b] = hmap[b]->images[a - 1] + 1;
    }
  S.label = "induced near-structure";
  return S;
}

std::optional<std::vector<int>> find_structure_isomorphism(
    const NearStructure& A, const NearStructure& B) {
  if (A.order != B.order) return std::nullopt;
  int n = A.order;
  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);

  // Propagate images forced by the tables; false on conflict.
  auto propagate = [&](std::vector<int>& f, std::vector<bool>& used) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        if (f[a] < 0) continue;
        for (int b = 0; b < n; ++b) {
          if (f[b] < 0) continue;
          int pairs[2][2] = {{A.add[a][b], B.add[f[a]][f[b]]},
                             {A.mul[a][b], B.mul[f[a]][f[b]]}};
          for (auto& pr : pairs) {
            int src = pr[0], dst = pr[1];
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
    }
    return true;
  };

  std::vector<int> result(n, -1);
  std::function<bool(std::vector<int>, std::vector<bool>)> dfs =
      [&](std::vector<int> f, std::vector<bool> used) {
        if (!propagate(f, used)) return false;
        int a = -1;
        for (int i = 0; i < n; ++i)
          if (f[i] < 0) {
            a = i;
            break;
          }
        if (a < 0) {
          std::copy(f.begin(), f.end(), result.begin());
          return true;
        }
        for (int v = 0; v < n; ++v) {
          if (used[v]) continue;
          auto f2 = f;
          auto u2 = used;
          f2[a] = v;
          u2[v] = true;
          if (dfs(std::move(f2), std::move(u2))) return true;
        }
        return false;
      };

  f[A.zero] = B.zero;
  used[B.zero] = true;
  f[A.one] = B.one;
  used[B.one] = true;
  if (dfs(f, used)) return result;
  return std::nullopt;
}

bool multiplicative_group_abelian(const NearStructure& S) {
  for (int a = 0; a < S.order; ++a) {
    if (a == S.zero) continue;
    for (int b = a + 1; b < S.order; ++b) {
      if (b == S.zero) continue;
      if (S.mul[a][b] != S.mul[b][a]) return false;
    }
  }
  return true;
}

int count_multiplicative_involutions(const NearStructure& S) {
  int count = 0;
  for (int a = 0; a < S.order; ++a) {
    if (a == S.zero || a == S.one) continue;
    if (S.mul[a][a] == S.one) ++count;
  }
  return count;
}

}  // namespace sharply
