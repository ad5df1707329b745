// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// Each criterion is a self-contained check with an optional wall-clock
// budget (seconds) enforced in code. Failures carry the first offending
// assertion; the suite keeps going so every criterion reports.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sharply/finite_group.hpp"
#include "sharply/free_product.hpp"
#include "sharply/galois.hpp"
#include "sharply/nearfield.hpp"
#include "sharply/partial_action.hpp"
#include "sharply/perm.hpp"
#include "sharply/projective.hpp"
#include "sharply/sharp_analysis.hpp"

using namespace sharply;

namespace {

struct AcceptFail {
  std::string reason;
};

void require(bool ok, const std::string& reason) {
  if (!ok) throw AcceptFail{reason};
}

template <typename T, typename U>
void require_eq(const T& got, const U& want, const std::string& what) {
  if (!(got == static_cast<T>(want))) {
    std::ostringstream msg;
    msg << what << ": got " << got << ", want " << want;
    throw AcceptFail{msg.str()};
  }
}

// The finite test corpus: every sharply 2-transitive group the suite
// exercises, covering both fixed-point modes and both Zassenhaus types.
std::vector<FiniteGroup> corpus() {
  std::vector<FiniteGroup> out;
  for (int q : {3, 4, 5, 7, 8, 9})
    out.push_back(build_affine_group(build_field_nearfield(q)));
  out.push_back(build_affine_group(build_dickson_nearfield(9)));
  out.push_back(catalog("A(4)"));
  out.push_back(catalog("S(3)"));
  return out;
}

std::set<Permutation> involution_products(const FiniteGroup& G) {
  std::set<Permutation> out;
  auto J = involutions(G);
  for (const auto& a : J)
    for (const auto& b : J) out.insert(compose(a, b));
  return out;
}

// ---- criterion bodies ------------------------------------------------------

void criterion_sharp_orders() {
  for (int q : {3, 4, 5, 7, 8, 9}) {
    FiniteGroup G = build_affine_group(build_field_nearfield(q));
    require_eq(G.order(), static_cast<std::size_t>(q) * (q - 1),
               "AGL(1," + std::to_string(q) + ") order");
    require(is_sharply_n_transitive(G, 2),
            "AGL(1," + std::to_string(q) + ") not sharply 2-transitive");
  }
  for (int q : {3, 4, 5, 7}) {
    FiniteGroup G = proj::build_pgl(q);
    require_eq(G.order(),
               static_cast<std::size_t>(q + 1) * q * (q - 1),
               "PGL(2," + std::to_string(q) + ") order");
    require(is_sharply_n_transitive(G, 3),
            "PGL(2," + std::to_string(q) + ") not sharply 3-transitive");
  }
}

void criterion_mathieu() {
  FiniteGroup M11 = catalog("M11");
  require_eq(M11.degree, 11, "M11 degree");
  require_eq(M11.order(), std::size_t{7920}, "M11 order");
  require_eq(std::size_t{7920}, std::size_t{11} * 10 * 9 * 8,
             "7920 = 11*10*9*8");
  require(is_sharply_n_transitive(M11, 4), "M11 not sharply 4-transitive");
  require(!is_n_transitive(M11, 5), "M11 must not be 5-transitive");
}

void criterion_dickson() {
  NearStructure D = build_dickson_nearfield(9);
  AxiomReport rep = verify_near_field(D);
  require(rep.pass, "Dickson(9) axioms: " + rep.to_string());
  require(!multiplicative_group_abelian(D),
          "Dickson(9) multiplicative group must be non-abelian");
  require_eq(D.order - 1, 8, "Dickson(9) multiplicative group order");
  require_eq(count_multiplicative_involutions(D), 1,
             "Dickson(9) multiplicative involutions");

  FiniteGroup G = build_affine_group(D);
  require_eq(G.order(), std::size_t{72}, "affine Dickson(9) order");
  require_eq(characteristic(G), 3, "affine Dickson(9) characteristic");

  auto [split, N] = neumann_split_test(G);
  require(split, "affine Dickson(9) must split");
  require(N.has_value(), "split without a subgroup");
  require_eq(N->order(), std::size_t{9}, "translation subgroup order");
  require(is_abelian(*N), "translation subgroup must be abelian");
  for (const auto& g : N->elements)
    require(g.is_identity() || perm_order(g) == 3,
            "translation subgroup must be elementary abelian of exponent 3");
}

void criterion_regular_linear_classes() {
  auto classes32 = classify_regular_linear_groups(3, 2);
  require_eq(classes32.size(), std::size_t{2}, "GL(2,3) class count");
  auto classes22 = classify_regular_linear_groups(2, 2);
  require_eq(classes22.size(), std::size_t{1}, "GL(2,2) class count");
  for (const auto& H : classes32) {
    AxiomReport rep = verify_near_field(induced_near_structure(H, 3, 2));
    require(rep.pass, "induced structure (p=3): " + rep.to_string());
  }
  for (const auto& H : classes22) {
    AxiomReport rep = verify_near_field(induced_near_structure(H, 2, 2));
    require(rep.pass, "induced structure (p=2): " + rep.to_string());
  }
}

void criterion_neumann_finite() {
  for (const FiniteGroup& G : corpus()) {
    const std::string& who = G.label;
    auto J = involutions(G);
    require(!J.empty(), who + ": no involutions");
    const Permutation& t = J.front();
    std::set<Permutation> tJ;
    for (const auto& j : J) tJ.insert(compose(t, j));
    std::set<Permutation> j2 = involution_products(G);

    auto [split, N] = neumann_split_test(G);
    require(split, who + ": must split");
    require(N.has_value(), who + ": split without a subgroup");
    std::set<Permutation> Nset(N->elements.begin(), N->elements.end());

    // The subgroup is the involution-product set; with fixed-point-free
    // involutions tJ misses exactly t itself, otherwise tJ = J^2 already.
    require(Nset == j2, who + ": subgroup differs from J^2");
    bool fpf = fixed_points(t).empty();
    if (fpf) {
      std::set<Permutation> tJt = tJ;
      tJt.insert(t);
      require(tJt == j2, who + ": J^2 must be tJ with t adjoined");
    } else {
      require(tJ == j2, who + ": tJ must equal J^2");
    }

    require(is_abelian(*N), who + ": subgroup must be abelian");
    require(is_normal_subgroup(G, *N), who + ": subgroup must be normal");
    require_eq(N->order(), static_cast<std::size_t>(G.degree),
               who + ": subgroup must be regular");
    require(is_transitive(*N), who + ": subgroup must be transitive");

    NearStructure E = extract_near_domain(G, 0, 1);
    for (int a = 0; a < E.order; ++a)
      for (int b = 0; b < E.order; ++b)
        require(E.plus(a, b) == E.plus(b, a),
                who + ": extracted addition must be commutative");
  }
}

// Strips conjugating letter pairs g ... g^-1 from both ends, renormalizing,
// until the word is cyclically reduced.
freeprod::FPWord cyclic_reduce(freeprod::FPWord w) {
  using namespace freeprod;
  for (;;) {
    std::vector<int> letters = fp_letters(w);
    if (letters.size() < 2) return w;
    int front = letters.front();
    int back = letters.back();
    bool inverse_pair =
        (letter_is_t(front) && letter_is_t(back)) || front == -back;
    if (!inverse_pair) return w;
    std::vector<int> middle(letters.begin() + 1, letters.end() - 1);
    w = fp_from_letters(middle);
  }
}

void criterion_neumann_infinite() {
  using namespace freeprod;
  WitnessSearchResult r = neumann_witness_search(1);
  require(r.witness.has_value(), "no witness at radius 1");
  FPWord t = fp_t();
  FPWord tu = fp_multiply(t, fp_conjugate(t, r.witness->first));
  FPWord tv = fp_multiply(t, fp_conjugate(t, r.witness->second));
  require(fp_in_tJ(tu), "left factor must lie in tJ");
  require(fp_in_tJ(tv), "right factor must lie in tJ");
  FPWord prod = fp_multiply(tu, tv);
  require(!fp_in_tJ(prod), "witness product must escape tJ");
  FPWord reduced = cyclic_reduce(prod);
  require(reduced.syllable_length() > 1,
          "cyclically reduced witness product has syllable length " +
              std::to_string(reduced.syllable_length()));
}

void criterion_non_conjugacy() {
  using namespace freeprod;
  FPWord t = fp_t();
  FPWord b = fp_n(1);
  FPWord bb = fp_multiply(b, b);
  FPWord u = fp_multiply(t, fp_conjugate(t, b));
  FPWord v = fp_multiply(t, fp_conjugate(t, bb));
  require(!fp_conjugacy_test(u, v),
          "t*t^b and t*t^(b^2) must not be conjugate");
}

void criterion_partial_action() {
  construct::Stage s = construct::run(50, 1);
  construct::CheckReport rep = construct::check_invariants(s, 4);
  require(rep.pass, "depth-4 invariant check failed:\n" + rep.to_string());
  require_eq(rep.violation_count, 0LL, "violation count");
}

void criterion_round_trip() {
  std::vector<NearStructure> structures;
  for (int q : {3, 4, 5, 7}) structures.push_back(build_field_nearfield(q));
  structures.push_back(build_dickson_nearfield(9));
  for (const NearStructure& S : structures) {
    FiniteGroup G = build_affine_group(S);
    NearStructure E = extract_near_domain(G, S.zero, S.one, 0);
    require(verify_near_domain(E).pass,
            S.label + ": extraction is not a near-domain");
    require(find_structure_isomorphism(E, S).has_value(),
            S.label + ": extraction not isomorphic to the source");
  }
}

void criterion_kerby() {
  for (int q : {3, 4, 5, 7, 8, 9}) {
    NearStructure S = build_field_nearfield(q);
    std::string why;
    require(proj::kerby_sigma_check(S, proj::sigma_inversion(S), &why),
            "GF(" + std::to_string(q) + "): " + why);
    require(proj::stabilizer_is_affine(q),
            "GF(" + std::to_string(q) +
                "): infinity stabilizer is not the affine group");
  }
}

void criterion_property_suites() {
  using namespace freeprod;

  // Free-product group laws on random canonical words.
  std::mt19937 rng(2026);
  std::vector<int> letters{0, 2, -2, 4, -4, 3, -3, 5, -5};
  auto random_word = [&]() {
    std::uniform_int_distribution<int> len_dist(0, 6);
    int len = len_dist(rng);
    std::vector<int> word;
    int last = kNoLetter;
    for (int i = 0; i < len; ++i) {
      std::vector<int> options;
      for (int code : letters)
        if (letter_allowed(last, code)) options.push_back(code);
      require(!options.empty(), "no canonical continuation available");
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      word.push_back(options[pick(rng)]);
      last = word.back();
    }
    return fp_from_letters(word);
  };
  const int kTriples = 10000;
  for (int i = 0; i < kTriples; ++i) {
    FPWord u = random_word(), v = random_word(), w = random_word();
    require(fp_multiply(fp_multiply(u, v), w) ==
                fp_multiply(u, fp_multiply(v, w)),
            "associativity failed on triple " + std::to_string(i));
    require(fp_multiply(u, fp_identity()) == u,
            "right identity failed on triple " + std::to_string(i));
    require(fp_multiply(fp_identity(), u) == u,
            "left identity failed on triple " + std::to_string(i));
    require(fp_multiply(u, fp_invert(u)).empty(),
            "right inverse failed on triple " + std::to_string(i));
    require(fp_invert(fp_invert(u)) == u,
            "double inversion failed on triple " + std::to_string(i));
  }

  // characteristic() against a direct order scan of J^2 minus the identity.
  for (const FiniteGroup& G : corpus()) {
    int oracle = 0;
    for (const Permutation& g : involution_products(G)) {
      if (g.is_identity()) continue;
      int ord = perm_order(g);
      require(oracle == 0 || oracle == ord,
              G.label + ": J^2 element orders are not constant");
      oracle = ord;
    }
    require(oracle != 0, G.label + ": J^2 has no nontrivial elements");
    require_eq(characteristic(G), oracle,
               G.label + ": characteristic vs order scan");
  }

  // Sharp transitivity against the definitional all-tuples oracle on every
  // group of order <= 500.
  std::vector<FiniteGroup> small = corpus();
  for (int q : {3, 4, 5, 7}) small.push_back(proj::build_pgl(q));
  small.push_back(catalog("C(3)"));
  small.push_back(catalog("D(8)"));
  small.push_back(catalog("S(4)"));
  for (const FiniteGroup& G : small) {
    require(G.order() <= 500, G.label + ": corpus group exceeds order 500");
    for (int n = 1; n <= 4 && n <= G.degree; ++n) {
      bool fast = is_sharply_n_transitive(G, n);
      bool oracle = is_sharply_n_transitive_all_tuples(G, n);
      require(fast == oracle,
              G.label + ": sharp " + std::to_string(n) +
                  "-transitivity disagrees with the all-tuples oracle");
    }
  }
}

// ---- driver ----------------------------------------------------------------

struct Criterion {
  std::string name;
  std::function<void()> body;
  double budget_sec;  // <= 0 means no time budget
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"sharp transitivity orders of AGL(1,q) and PGL(2,q)",
       criterion_sharp_orders, 10.0},
      {"M11 order 7920, sharply 4- but not 5-transitive",
       criterion_mathieu, 60.0},
      {"Dickson(9): axioms, quaternion units, affine split",
       criterion_dickson, 0.0},
      {"regular linear subgroup classes of GL(2,3) and GL(2,2)",
       criterion_regular_linear_classes, 30.0},
      {"finite corpus: tJ subgroup = J^2, abelian normal regular; "
       "commutative extracted addition",
       criterion_neumann_finite, 0.0},
      {"free product: radius-1 witness that tJ is not closed",
       criterion_neumann_infinite, 1.0},
      {"free product: t*t^b and t*t^(b^2) are not conjugate",
       criterion_non_conjugacy, 0.0},
      {"partial action: run(50, seed 1) passes depth-4 invariants",
       criterion_partial_action, 300.0},
      {"extraction round trip on GF(3),GF(4),GF(5),GF(7),Dickson(9)",
       criterion_round_trip, 0.0},
      {"Kerby functional equation and affine infinity stabilizers",
       criterion_kerby, 0.0},
      {"property suites: group laws, characteristic oracle, "
       "all-tuples oracle",
       criterion_property_suites, 0.0},
  };

  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.body();
    } catch (const AcceptFail& f) {
      failure = f.reason;
    } catch (const std::exception& e) {
      failure = std::string("unexpected exception: ") + e.what();
    }
    double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (failure.empty() && c.budget_sec > 0 && sec > c.budget_sec) {
      std::ostringstream msg;
      msg << "time budget exceeded: " << sec << "s > " << c.budget_sec << "s";
      failure = msg.str();
    }
    bool ok = failure.empty();
    if (ok) ++passed;
    std::printf("[%2zu] %s %s (%.2fs)\n", i + 1, ok ? "PASS" : "FAIL",
                c.name.c_str(), sec);
    if (!ok) std::printf("     reason: %s\n", failure.c_str());
  }
  std::printf("acceptance: %d/%zu passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
