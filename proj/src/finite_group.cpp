#include "sharply/finite_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace sharply {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using VecSet = std::unordered_set<std::vector<int>, VecHash>;

long falling_factorial(int degree, int n) {
  long r = 1;
  for (int i = 0; i < n; ++i) r *= degree - i;
  return r;
}

void check_tuple(const FiniteGroup& G, const PointTuple& pts) {
  std::vector<bool> seen(G.degree, false);
  for (int p : pts) {
    if (p < 0 || p >= G.degree)
      throw std::invalid_argument("point tuple: point out of range");
    if (seen[p]) throw std::invalid_argument("point tuple: repeated point");
    seen[p] = true;
  }
}

std::vector<Permutation> closure(const std::vector<Permutation>& gens,
                                 std::size_t cap, const char* who) {
  int degree = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument(std::string(who) + ": degree mismatch");
  VecSet seen;
  std::deque<Permutation> todo;
  Permutation id = identity_perm(degree);
  seen.insert(id.images);
  todo.push_back(id);
  std::vector<Permutation> out{id};
  while (!todo.empty()) {
    Permutation cur = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      Permutation next = compose(cur, g);
      if (seen.insert(next.images).second) {
        if (seen.size() > cap)
          throw std::runtime_error(std::string(who) +
                                   ": closure exceeded cap " +
                                   std::to_string(cap) + " (partial size " +
                                   std::to_string(seen.size()) + ")");
        out.push_back(next);
        todo.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool FiniteGroup::contains(const Permutation& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

std::size_t default_order_cap() {
  if (const char* env = std::getenv("SHARP_MAX_ORDER")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

FiniteGroup generate_group(const std::vector<Permutation>& gens,
                           std::size_t cap) {
  if (gens.empty())
    throw std::invalid_argument("generate_group: no generators");
  if (cap == 0) cap = default_order_cap();
  FiniteGroup G;
  G.degree = gens.front().degree();
  G.generators = gens;
  G.elements = closure(gens, cap, "generate_group");
  return G;
}

FiniteGroup group_from_elements(std::vector<Permutation> elems,
                                std::string label) {
  if (elems.empty())
    throw std::invalid_argument("group_from_elements: empty element set");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  int degree = elems.front().degree();
  Permutation id = identity_perm(degree);
  if (!std::binary_search(elems.begin(), elems.end(), id))
    throw std::invalid_argument("group_from_elements: identity missing");

  // Greedy generating set: repeatedly adjoin the least element outside the
  // subgroup generated so far.
  std::vector<Permutation> gens;
  std::vector<Permutation> sub{id};
  while (sub.size() < elems.size()) {
    const Permutation* fresh = nullptr;
    for (const auto& e : elems) {
      if (!std::binary_search(sub.begin(), sub.end(), e)) {
        fresh = &e;
        break;
      }
    }
    gens.push_back(*fresh);
    sub = closure(gens, elems.size(), "group_from_elements");
  }
  if (sub != elems)
    throw std::invalid_argument(
        "group_from_elements: set is not closed under the group operation");
  FiniteGroup G;
  G.degree = degree;
  G.generators = gens.empty() ? std::vector<Permutation>{id} : gens;
  G.elements = std::move(elems);
  G.label = std::move(label);
  return G;
}

bool is_transitive(const FiniteGroup& G) {
  std::vector<bool> seen(G.degree, false);
  std::deque<int> todo{0};
  seen[0] = true;
  int count = 1;
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (const auto& g : G.generators) {
      int y = g.images[x];
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        todo.push_back(y);
      }
    }
  }
  return count == G.degree;
}

bool is_n_transitive(const FiniteGroup& G, int n) {
  if (n < 1 || n > G.degree)
    throw std::invalid_argument("is_n_transitive: n out of range");
  PointTuple base(n);
  for (int i = 0; i < n; ++i) base[i] = i;
  VecSet seen;
  std::deque<PointTuple> todo;
  seen.insert(base);
  todo.push_back(base);
  long target = falling_factorial(G.degree, n);
  while (!todo.empty()) {
    PointTuple cur = todo.front();
    todo.pop_front();
    for (const auto& g : G.generators) {
      PointTuple next(n);
      for (int i = 0; i < n; ++i) next[i] = g.images[cur[i]];
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return static_cast<long>(seen.size()) == target;
}

bool is_sharply_n_transitive(const FiniteGroup& G, int n) {
  return is_n_transitive(G, n) &&
         static_cast<long>(G.order()) == falling_factorial(G.degree, n);
}

namespace {

void all_tuples_rec(int degree, int n, PointTuple& cur,
                    std::vector<PointTuple>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int x = 0; x < degree; ++x) {
    if (std::find(cur.begin(), cur.end(), x) != cur.end()) continue;
    cur.push_back(x);
    all_tuples_rec(degree, n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool is_n_transitive_all_tuples(const FiniteGroup& G, int n) {
  if (n < 1 || n > G.degree)
    throw std::invalid_argument("is_n_transitive_all_tuples: n out of range");
  std::vector<PointTuple> tuples;
  PointTuple cur;
  all_tuples_rec(G.degree, n, cur, tuples);
  for (const auto& from : tuples) {
    for (const auto& to : tuples) {
      bool found = false;
      for (const auto& g : G.elements) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = g.images[from[i]] == to[i];
        if (ok) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_sharply_n_transitive_all_tuples(const FiniteGroup& G, int n) {
  if (n < 1 || n > G.degree)
    throw std::invalid_argument(
        "is_sharply_n_transitive_all_tuples: n out of range");
  std::vector<PointTuple> tuples;
  PointTuple cur;
  all_tuples_rec(G.degree, n, cur, tuples);
  for (const auto& from : tuples) {
    for (const auto& to : tuples) {
      int count = 0;
      for (const auto& g : G.elements) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = g.images[from[i]] == to[i];
        if (ok) ++count;
      }
      if (count != 1) return false;
    }
  }
  return true;
}

FiniteGroup stabilizer(const FiniteGroup& G, const PointTuple& pts) {
  check_tuple(G, pts);
  std::vector<Permutation> elems;
  for (const auto& g : G.elements) {
    bool fixes = true;
    for (int p : pts)
      if (g.images[p] != p) {
        fixes = false;
        break;
      }
    if (fixes) elems.push_back(g);
  }
  return group_from_elements(std::move(elems));
}

FiniteGroup restrict_to_complement(const FiniteGroup& G,
                                   const PointTuple& removed) {
  check_tuple(G, removed);
  std::vector<int> newindex(G.degree, -1);
  int m = 0;
  for (int x = 0; x < G.degree; ++x) {
    if (std::find(removed.begin(), removed.end(), x) == removed.end())
      newindex[x] = m++;
  }
  std::vector<Permutation> elems;
  for (const auto& g : G.elements) {
    Permutation r;
    r.images.resize(m);
    for (int x = 0; x < G.degree; ++x) {
      if (newindex[x] < 0) continue;
      if (newindex[g.images[x]] < 0)
        throw std::invalid_argument(
            "restrict_to_complement: group does not preserve the complement");
      r.images[newindex[x]] = newindex[g.images[x]];
    }
    elems.push_back(std::move(r));
  }
  return group_from_elements(std::move(elems));
}

std::vector<Permutation> conjugacy_class(const FiniteGroup& G,
                                         const Permutation& g) {
  if (!G.contains(g))
    throw std::invalid_argument("conjugacy_class: element not in group");
  VecSet seen;
  std::deque<Permutation> todo;
  seen.insert(g.images);
  todo.push_back(g);
  std::vector<Permutation> out{g};
  while (!todo.empty()) {
    Permutation cur = todo.front();
    todo.pop_front();
    for (const auto& h : G.generators) {
      Permutation next = conjugate_perm(cur, h);
      if (seen.insert(next.images).second) {
        out.push_back(next);
        todo.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Permutation>> conjugacy_classes(const FiniteGroup& G) {
  std::vector<std::vector<Permutation>> classes;
  VecSet classified;
  for (const auto& e : G.elements) {
    if (classified.count(e.images)) continue;
    auto cls = conjugacy_class(G, e);
    for (const auto& c : cls) classified.insert(c.images);
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_frobenius(const FiniteGroup& G) {
  if (!is_transitive(G)) return false;
  if (G.order() <= static_cast<std::size_t>(G.degree)) return false;
  for (const auto& g : G.elements) {
    if (g.is_identity()) continue;
    if (fixed_points(g).size() >= 2) return false;
  }
  return true;
}

bool is_abelian(const FiniteGroup& G) {
  for (const auto& a : G.generators)
    for (const auto& b : G.generators)
      if (compose(a, b) != compose(b, a)) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& G, const FiniteGroup& N) {
  if (N.degree != G.degree) return false;
  for (const auto& n : N.elements)
    if (!G.contains(n)) return false;
  for (const auto& g : G.generators)
    for (const auto& n : N.elements)
      if (!N.contains(conjugate_perm(n, g))) return false;
  return true;
}

namespace {

bool regular_subset_search(const std::vector<std::vector<Permutation>>& classes,
                           std::size_t idx, long remaining,
                           std::vector<std::size_t>& chosen,
                           const FiniteGroup& G, FiniteGroup& out) {
  if (remaining == 0) {
    std::vector<Permutation> elems{identity_perm(G.degree)};
    for (std::size_t c : chosen)
      elems.insert(elems.end(), classes[c].begin(), classes[c].end());
    std::sort(elems.begin(), elems.end());
    // Closure check: the union of classes is a subgroup iff it is closed.
    for (const auto& a : elems)
      for (const auto& b : elems)
        if (!std::binary_search(elems.begin(), elems.end(), compose(a, b)))
          return false;
    FiniteGroup N = group_from_elements(elems);
    if (!is_transitive(N)) return false;
    out = std::move(N);
    return true;
  }
  for (std::size_t c = idx; c < classes.size(); ++c) {
    long size = static_cast<long>(classes[c].size());
    if (size > remaining) continue;
    chosen.push_back(c);
    if (regular_subset_search(classes, c + 1, remaining - size, chosen, G, out))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<FiniteGroup> find_regular_normal_subgroup(const FiniteGroup& G) {
  if (!is_transitive(G))
    throw std::invalid_argument("find_regular_normal_subgroup: not transitive");
  std::vector<std::vector<Permutation>> classes;
  for (auto& cls : conjugacy_classes(G)) {
    if (cls.size() == 1 && cls.front().is_identity()) continue;
    classes.push_back(std::move(cls));
  }
  std::vector<std::size_t> chosen;
  FiniteGroup out;
  if (regular_subset_search(classes, 0, G.degree - 1, chosen, G, out)) {
    out.label = "regular normal subgroup";
    return out;
  }
  return std::nullopt;
}

namespace {

FiniteGroup catalog_sym(int n) {
  if (n < 1) throw std::invalid_argument("catalog: S(n) needs n >= 1");
  if (n == 1) return generate_group({identity_perm(1)});
  std::vector<Permutation> gens;
  Permutation tr = identity_perm(n);
  tr.images[0] = 1;
  tr.images[1] = 0;
  gens.push_back(tr);
  if (n > 2) {
    Permutation cyc = identity_perm(n);
    for (int i = 0; i < n; ++i) cyc.images[i] = (i + 1) % n;
    gens.push_back(cyc);
  }
  FiniteGroup G = generate_group(gens);
  G.label = "S(" + std::to_string(n) + ")";
  return G;
}

FiniteGroup catalog_alt(int n) {
  if (n < 3) throw std::invalid_argument("catalog: A(n) needs n >= 3");
  std::vector<Permutation> gens;
  gens.push_back(parse_cycles(n, "(0 1 2)"));
  if (n > 3) {
    Permutation cyc = identity_perm(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) cyc.images[i] = (i + 1) % n;
    } else {
      for (int i = 1; i < n; ++i) cyc.images[i] = i % (n - 1) + 1;
    }
    gens.push_back(cyc);
  }
  FiniteGroup G = generate_group(gens);
  G.label = "A(" + std::to_string(n) + ")";
  return G;
}

FiniteGroup catalog_cyc(int n) {
  if (n < 1) throw std::invalid_argument("catalog: C(n) needs n >= 1");
  Permutation cyc = identity_perm(n);
  for (int i = 0; i < n; ++i) cyc.images[i] = (i + 1) % n;
  FiniteGroup G = generate_group({cyc});
  G.label = "C(" + std::to_string(n) + ")";
  return G;
}

FiniteGroup catalog_dih(int order) {
  if (order < 6 || order % 2 != 0)
    throw std::invalid_argument("catalog: D(m) needs even m >= 6");
  int n = order / 2;
  Permutation rot = identity_perm(n);
  for (int i = 0; i < n; ++i) rot.images[i] = (i + 1) % n;
  Permutation refl = identity_perm(n);
  for (int i = 0; i < n; ++i) refl.images[i] = (n - i) % n;
  FiniteGroup G = generate_group({rot, refl});
  G.label = "D(" + std::to_string(order) + ")";
  return G;
}

FiniteGroup catalog_m11() {
  Permutation a = parse_cycles(11, "(0 1 2 3 4 5 6 7 8 9 10)");
  Permutation b = parse_cycles(11, "(2 6 10 7)(3 9 4 5)");
  FiniteGroup G = generate_group({a, b});
  if (G.order() != 7920)
    throw std::runtime_error("catalog: M11 generators gave order " +
                             std::to_string(G.order()) + ", expected 7920");
  G.label = "M11";
  return G;
}

}  // namespace

FiniteGroup catalog(const std::string& name) {
  if (name == "M11") return catalog_m11();
  if (name.size() >= 4 && name[1] == '(' && name.back() == ')') {
    int n = 0;
    try {
      n = std::stoi(name.substr(2, name.size() - 3));
    } catch (const std::exception&) {
      throw std::invalid_argument("catalog: unknown name \"" + name + "\"");
    }
    switch (name[0]) {
      case 'S':
        return catalog_sym(n);
      case 'A':
        return catalog_alt(n);
      case 'C':
        return catalog_cyc(n);
      case 'D':
        return catalog_dih(n);
      default:
        break;
    }
  }
  throw std::invalid_argument("catalog: unknown name \"" + name + "\"");
}

}  // namespace sharply
