#include "sharply/sharp_analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sharply {

namespace {

void require_sharp2(const FiniteGroup& G, const char* who) {
  if (!is_sharply_n_transitive(G, 2))
    throw std::invalid_argument(std::string(who) +
                                ": group is not sharply 2-transitive");
}

// "all-have-unique-fixed-point" or "none-have-fixed-points"; mixed behavior
// is impossible for sharply 2-transitive groups and raises an error.
std::string fixed_point_mode_of(const FiniteGroup& G,
                                const std::vector<Permutation>& J,
                                const char* who) {
  if (J.empty())
    throw std::runtime_error(std::string(who) + ": no involutions found");
  int with_fp = 0;
  for (const auto& t : J) {
    auto fp = fixed_points(t);
    if (fp.size() > 1)
      throw std::runtime_error(std::string(who) +
                               ": involution fixes two points");
    if (!fp.empty()) ++with_fp;
  }
  if (with_fp == 0) return "none-have-fixed-points";
  if (with_fp == static_cast<int>(J.size()))
    return "all-have-unique-fixed-point";
  throw std::runtime_error(std::string(who) +
                           ": mixed involution fixed-point behavior");
}

}  // namespace

std::vector<Permutation> involutions(const FiniteGroup& G) {
  std::vector<Permutation> J;
  for (const auto& g : G.elements)
    if (!g.is_identity() && compose(g, g).is_identity()) J.push_back(g);
  return J;
}

bool check_single_class(const FiniteGroup& G) {
  require_sharp2(G, "check_single_class");
  std::vector<Permutation> J = involutions(G);
  if (J.empty()) return false;
  std::vector<Permutation> cls = conjugacy_class(G, J.front());
  return cls == J;
}

bool fix_bijection_check(const FiniteGroup& G) {
  require_sharp2(G, "fix_bijection_check");
  std::vector<Permutation> J = involutions(G);
  std::string mode = fixed_point_mode_of(G, J, "fix_bijection_check");
  if (mode == "none-have-fixed-points")
    throw std::runtime_error(
        "fix_bijection_check: characteristic 2 case (involutions are fixed "
        "point free)");
  // t -> Fix(t) must hit every point exactly once.
  std::vector<int> hits(G.degree, 0);
  for (const auto& t : J) ++hits[fixed_points(t).front()];
  for (int x = 0; x < G.degree; ++x)
    if (hits[x] != 1) return false;
  // Each point stabilizer has a unique involution, central in the stabilizer.
  for (int x = 0; x < G.degree; ++x) {
    FiniteGroup stab = stabilizer(G, {x});
    std::vector<Permutation> sj = involutions(stab);
    if (sj.size() != 1) return false;
    for (const auto& h : stab.elements)
      if (compose(sj.front(), h) != compose(h, sj.front())) return false;
  }
  return true;
}

int characteristic(const FiniteGroup& G) {
  require_sharp2(G, "characteristic");
  std::vector<Permutation> J = involutions(G);
  std::string mode = fixed_point_mode_of(G, J, "characteristic");
  if (mode == "none-have-fixed-points") return 2;
  int p = 0;
  for (const auto& a : J)
    for (const auto& b : J) {
      Permutation prod = compose(a, b);
      if (prod.is_identity()) continue;
      int ord = perm_order(prod);
      if (p == 0)
        p = ord;
      else if (p != ord)
        throw std::runtime_error(
            "characteristic: products of involutions have mixed orders " +
            std::to_string(p) + " and " + std::to_string(ord));
    }
  if (p == 0)
    throw std::runtime_error("characteristic: J^2 has no nontrivial element");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw std::runtime_error("characteristic: common order " +
                               std::to_string(p) + " is not prime");
  return p;
}

std::pair<bool, std::optional<FiniteGroup>> neumann_split_test(
    const FiniteGroup& G) {
  require_sharp2(G, "neumann_split_test");
  std::vector<Permutation> J = involutions(G);
  if (J.empty())
    throw std::runtime_error("neumann_split_test: no involutions found");
  const Permutation& t = J.front();  // least involution
  std::set<Permutation> tJ;
  for (const auto& j : J) tJ.insert(compose(t, j));
  std::set<Permutation> j2;
  for (const auto& a : J)
    for (const auto& b : J) j2.insert(compose(a, b));

  // With fixed-point involutions J bijects with the points and tJ = J^2 is
  // the subgroup candidate. With fixed-point-free involutions tJ always
  // omits t itself (t*j = t would need j = 1), so the candidate is J^2,
  // which equals tJ with t adjoined exactly when it closes.
  std::string mode = fixed_point_mode_of(G, J, "neumann_split_test");
  bool fpf = mode == "none-have-fixed-points";
  const std::set<Permutation>& cand = fpf ? j2 : tJ;

  // The candidate acts regularly on the points whether or not it closes.
  if (static_cast<int>(cand.size()) != G.degree)
    throw std::runtime_error("neumann_split_test: |" +
                             std::string(fpf ? "J^2" : "tJ") +
                             "| != number of points");
  for (int x = 0; x < G.degree; ++x) {
    std::vector<int> hits(G.degree, 0);
    for (const auto& r : cand) ++hits[r.images[x]];
    for (int y = 0; y < G.degree; ++y)
      if (hits[y] != 1)
        throw std::runtime_error(
            "neumann_split_test: candidate set does not act regularly");
  }

  bool split = true;
  for (const auto& a : cand) {
    for (const auto& b : cand)
      if (!cand.count(compose(a, b))) {
        split = false;
        break;
      }
    if (!split) break;
  }
  if (!split) return {false, std::nullopt};

  FiniteGroup N =
      group_from_elements(std::vector<Permutation>(cand.begin(), cand.end()));
  N.label = "translation subgroup";
  if (fpf) {
    std::set<Permutation> adjoined = tJ;
    adjoined.insert(t);
    if (adjoined != j2)
      throw std::runtime_error(
          "neumann_split_test: J^2 closed but J^2 != tJ with t adjoined");
  } else if (j2 != tJ) {
    throw std::runtime_error("neumann_split_test: tJ closed but tJ != J^2");
  }
  if (!is_transitive(N) || static_cast<int>(N.order()) != N.degree)
    throw std::runtime_error("neumann_split_test: N is not regular");
  if (!is_abelian(N))
    throw std::runtime_error("neumann_split_test: N is not abelian");
  if (!is_normal_subgroup(G, N))
    throw std::runtime_error("neumann_split_test: N is not normal");
  return {true, std::move(N)};
}

bool j_squared_class_check(const FiniteGroup& G) {
  require_sharp2(G, "j_squared_class_check");
  std::vector<Permutation> J = involutions(G);
  std::string mode = fixed_point_mode_of(G, J, "j_squared_class_check");
  if (mode == "none-have-fixed-points")
    throw std::runtime_error(
        "j_squared_class_check: characteristic 2 case; the claim is only "
        "meaningful there for the infinite construction");
  std::set<Permutation> prods;
  for (const auto& a : J)
    for (const auto& b : J) {
      if (a == b) continue;
      prods.insert(compose(a, b));
    }
  if (prods.empty()) return false;
  if (prods.count(identity_perm(G.degree)))
    throw std::runtime_error(
        "j_squared_class_check: distinct involutions with trivial product");
  std::vector<Permutation> cls = conjugacy_class(G, *prods.begin());
  return std::set<Permutation>(cls.begin(), cls.end()) == prods;
}

InvolutionReport analyze(const FiniteGroup& G) {
  require_sharp2(G, "analyze");
  InvolutionReport rep;
  rep.J = involutions(G);
  rep.single_class = check_single_class(G);
  rep.fixed_point_mode = fixed_point_mode_of(G, rep.J, "analyze");
  rep.characteristic = characteristic(G);
  auto [split, N] = neumann_split_test(G);
  rep.split = split;
  rep.regular_normal = std::move(N);
  if (rep.split != rep.regular_normal.has_value())
    throw std::runtime_error("analyze: split flag and subgroup disagree");
  if (!rep.split)
    throw std::runtime_error(
        "analyze: finite sharply 2-transitive group failed to split");
  return rep;
}

std::string InvolutionReport::to_string() const {
  std::ostringstream out;
  out << "involutions: " << J.size() << "\n";
  out << "single_class: " << (single_class ? "true" : "false") << "\n";
  out << "fixed_point_mode: " << fixed_point_mode << "\n";
  out << "characteristic: " << characteristic << "\n";
  out << "split: " << (split ? "true" : "false") << "\n";
  if (regular_normal)
    out << "regular_normal_order: " << regular_normal->order() << "\n";
  return out.str();
}

}  // namespace sharply
