#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "sharply/finite_group.hpp"
#include "sharply/free_product.hpp"
#include "sharply/galois.hpp"
#include "sharply/io.hpp"
#include "sharply/nearfield.hpp"
#include "sharply/partial_action.hpp"
#include "sharply/perm.hpp"
#include "sharply/projective.hpp"
#include "sharply/sharp_analysis.hpp"

namespace py = pybind11;

namespace {

sharply::freeprod::FPWord wparse(const std::string& s) {
  return sharply::freeprod::fp_parse(s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  using namespace sharply;

  m.doc() = "Sharply n-transitive permutation groups: near-fields, "
            "involution analysis, free-product words, and the "
            "partial-action construction.";

  // --- permutations ----------------------------------------------------
  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](std::vector<int> images) {
             return Permutation{std::move(images)};
           }),
           py::arg("images"))
      .def_readonly("images", &Permutation::images)
      .def_property_readonly("degree", &Permutation::degree)
      .def("apply", &Permutation::apply, py::arg("x"))
      .def("is_identity", &Permutation::is_identity)
      .def("__eq__", [](const Permutation& a, const Permutation& b) {
        return a == b;
      })
      .def("__hash__", [](const Permutation& a) {
        std::size_t h = 0;
        for (int v : a.images) h = h * 1000003u + static_cast<unsigned>(v);
        return h;
      })
      .def("__repr__", [](const Permutation& a) {
        return "Permutation(" + print_cycles(a) + ")";
      });

  m.def("identity_perm", &identity_perm, py::arg("degree"));
  m.def("compose", &compose, py::arg("a"), py::arg("b"),
        "Right-action composition: compose(a, b) applies a first, then b.");
  m.def("inverse", &inverse, py::arg("a"));
  m.def("conjugate_perm", &conjugate_perm, py::arg("g"), py::arg("h"),
        "h^-1 g h");
  m.def("perm_order", &perm_order, py::arg("a"));
  m.def("fixed_points", &fixed_points, py::arg("a"));
  m.def("parse_cycles", &parse_cycles, py::arg("degree"), py::arg("text"));
  m.def("print_cycles", &print_cycles, py::arg("a"));

  // --- finite groups ----------------------------------------------------
  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_readonly("degree", &FiniteGroup::degree)
      .def_readonly("generators", &FiniteGroup::generators)
      .def_readonly("elements", &FiniteGroup::elements)
      .def_readonly("label", &FiniteGroup::label)
      .def_property_readonly("order",
                             [](const FiniteGroup& G) { return G.order(); })
      .def("contains", &FiniteGroup::contains, py::arg("g"))
      .def("__len__", [](const FiniteGroup& G) { return G.order(); })
      .def("__repr__", [](const FiniteGroup& G) {
        return "FiniteGroup(degree=" + std::to_string(G.degree) +
               ", order=" + std::to_string(G.order()) +
               (G.label.empty() ? std::string() : ", label=" + G.label) + ")";
      });

  m.def("generate_group", &generate_group, py::arg("gens"),
        py::arg("cap") = 0);
  m.def("group_from_elements", &group_from_elements, py::arg("elems"),
        py::arg("label") = "");
  m.def("catalog", &catalog, py::arg("name"),
        "Named groups: S(n), A(n), C(n), D(m), M11.");
  m.def("is_transitive", &is_transitive);
  m.def("is_n_transitive", &is_n_transitive, py::arg("G"), py::arg("n"));
  m.def("is_sharply_n_transitive", &is_sharply_n_transitive, py::arg("G"),
        py::arg("n"));
  m.def("is_n_transitive_all_tuples", &is_n_transitive_all_tuples,
        py::arg("G"), py::arg("n"));
  m.def("is_sharply_n_transitive_all_tuples",
        &is_sharply_n_transitive_all_tuples, py::arg("G"), py::arg("n"));
  m.def("stabilizer", &stabilizer, py::arg("G"), py::arg("pts"));
  m.def("restrict_to_complement", &restrict_to_complement, py::arg("G"),
        py::arg("removed"));
  m.def("conjugacy_classes", &conjugacy_classes, py::arg("G"));
  m.def("is_frobenius", &is_frobenius);
  m.def("is_abelian", &is_abelian);
  m.def("is_normal_subgroup", &is_normal_subgroup, py::arg("G"),
        py::arg("N"));
  m.def("find_regular_normal_subgroup", &find_regular_normal_subgroup);

  // --- near-structures ---------------------------------------------------
  py::class_<NearStructure>(m, "NearStructure")
      .def(py::init([](int order, std::vector<std::vector<int>> add,
                       std::vector<std::vector<int>> mul, int zero, int one,
                       std::string label) {
             NearStructure S;
             S.order = order;
             S.add = std::move(add);
             S.mul = std::move(mul);
             S.zero = zero;
             S.one = one;
             S.label = std::move(label);
             return S;
           }),
           py::arg("order"), py::arg("add"), py::arg("mul"),
           py::arg("zero") = 0, py::arg("one") = 1, py::arg("label") = "")
      .def_readonly("order", &NearStructure::order)
      .def_readonly("add", &NearStructure::add)
      .def_readonly("mul", &NearStructure::mul)
      .def_readonly("zero", &NearStructure::zero)
      .def_readonly("one", &NearStructure::one)
      .def_readonly("label", &NearStructure::label)
      .def("plus", &NearStructure::plus, py::arg("a"), py::arg("b"))
      .def("times", &NearStructure::times, py::arg("a"), py::arg("b"))
      .def("__repr__", [](const NearStructure& S) {
        return "NearStructure(order=" + std::to_string(S.order) +
               (S.label.empty() ? std::string() : ", label=" + S.label) + ")";
      });

  py::class_<AxiomReport>(m, "AxiomReport")
      .def_readonly("ok", &AxiomReport::pass)
      .def_readonly("axiom", &AxiomReport::axiom)
      .def_readonly("witness", &AxiomReport::witness)
      .def_readonly("detail", &AxiomReport::detail)
      .def_readonly("addition_associative", &AxiomReport::addition_associative)
      .def("__bool__", [](const AxiomReport& r) { return r.pass; })
      .def("__str__", &AxiomReport::to_string)
      .def("__repr__", &AxiomReport::to_string);

  m.def("build_field_nearfield", &build_field_nearfield, py::arg("q"));
  m.def("build_dickson_nearfield", &build_dickson_nearfield, py::arg("q"));
  m.def("build_left_twist_table", &build_left_twist_table, py::arg("q"));
  m.def("build_broken_loop_table", &build_broken_loop_table);
  m.def("verify_near_field", &verify_near_field, py::arg("S"));
  m.def("verify_near_domain", &verify_near_domain, py::arg("S"));
  m.def("build_affine_group", &build_affine_group, py::arg("S"));
  m.def("extract_near_domain", &extract_near_domain, py::arg("G"),
        py::arg("zero"), py::arg("one"), py::arg("orientation") = -1);
  m.def("classify_regular_linear_groups", &classify_regular_linear_groups,
        py::arg("p"), py::arg("k"));
  m.def("induced_near_structure", &induced_near_structure, py::arg("H"),
        py::arg("p"), py::arg("k"));
  m.def("find_structure_isomorphism", &find_structure_isomorphism,
        py::arg("A"), py::arg("B"));
  m.def("multiplicative_group_abelian", &multiplicative_group_abelian);
  m.def("count_multiplicative_involutions", &count_multiplicative_involutions);
  m.def("right_negative", &right_negative, py::arg("S"), py::arg("a"));

  // --- involution analysis ------------------------------------------------
  py::class_<InvolutionReport>(m, "InvolutionReport")
      .def_readonly("J", &InvolutionReport::J)
      .def_readonly("single_class", &InvolutionReport::single_class)
      .def_readonly("fixed_point_mode", &InvolutionReport::fixed_point_mode)
      .def_readonly("characteristic", &InvolutionReport::characteristic)
      .def_readonly("split", &InvolutionReport::split)
      .def_readonly("regular_normal", &InvolutionReport::regular_normal)
      .def("__str__", &InvolutionReport::to_string)
      .def("__repr__", &InvolutionReport::to_string);

  m.def("involutions", &involutions, py::arg("G"));
  m.def("check_single_class", &check_single_class, py::arg("G"));
  m.def("fix_bijection_check", &fix_bijection_check, py::arg("G"));
  m.def("characteristic", &characteristic, py::arg("G"));
  m.def("neumann_split_test", &neumann_split_test, py::arg("G"));
  m.def("j_squared_class_check", &j_squared_class_check, py::arg("G"));
  m.def("analyze", &analyze, py::arg("G"));

  // --- group/table text formats -------------------------------------------
  m.def("print_group", &io::print_group, py::arg("G"));
  m.def("parse_group", &io::parse_group, py::arg("text"));
  m.def("print_table", &io::print_table, py::arg("S"));
  m.def("parse_table", &io::parse_table, py::arg("text"));

  // --- free product ---------------------------------------------------------
  auto fp = m.def_submodule("freeprod",
                            "Words in (C2 x F(C)) * F(N) as token strings: "
                            "t, c<k>, c<k>^-1, n<k>, n<k>^-1; identity '1'.");
  fp.def("normalize", [](const std::string& u) {
    return freeprod::fp_print(wparse(u));
  });
  fp.def("mul", [](const std::string& u, const std::string& v) {
    return freeprod::fp_print(freeprod::fp_multiply(wparse(u), wparse(v)));
  });
  fp.def("inv", [](const std::string& u) {
    return freeprod::fp_print(freeprod::fp_invert(wparse(u)));
  });
  fp.def("conj", [](const std::string& u, const std::string& g) {
    return freeprod::fp_print(freeprod::fp_conjugate(wparse(u), wparse(g)));
  }, py::arg("u"), py::arg("g"), "g^-1 u g");
  fp.def("is_involution", [](const std::string& u) {
    return freeprod::fp_is_involution(wparse(u));
  });
  fp.def("in_tj", [](const std::string& u) {
    return freeprod::fp_in_tJ(wparse(u));
  });
  fp.def("conjugacy", [](const std::string& u, const std::string& v) {
    return freeprod::fp_conjugacy_test(wparse(u), wparse(v));
  });
  fp.def("letter_length", [](const std::string& u) {
    return freeprod::fp_letter_length(wparse(u));
  });
  fp.def("syllable_length", [](const std::string& u) {
    return wparse(u).syllable_length();
  });

  py::class_<freeprod::WitnessSearchResult>(fp, "WitnessSearchResult")
      .def_property_readonly("found",
                             [](const freeprod::WitnessSearchResult& r) {
                               return r.witness.has_value();
                             })
      .def_property_readonly("u",
                             [](const freeprod::WitnessSearchResult& r) {
                               return r.witness
                                          ? freeprod::fp_print(r.witness->first)
                                          : std::string();
                             })
      .def_property_readonly(
          "v",
          [](const freeprod::WitnessSearchResult& r) {
            return r.witness ? freeprod::fp_print(r.witness->second)
                             : std::string();
          })
      .def_readonly("count", &freeprod::WitnessSearchResult::count)
      .def_readonly("radius", &freeprod::WitnessSearchResult::radius)
      .def_readonly("words_searched",
                    &freeprod::WitnessSearchResult::words_searched);

  fp.def("neumann_witness_search", &freeprod::neumann_witness_search,
         py::arg("radius"), py::arg("num_c") = 1, py::arg("num_n") = 1);

  // --- partial action construction ------------------------------------------
  auto con = m.def_submodule(
      "construct", "Stagewise partial-action construction in characteristic "
                   "2 with invariant checks.");

  py::class_<construct::Stage>(con, "Stage")
      .def_readonly("num_points", &construct::Stage::num_points)
      .def_readonly("step_count", &construct::Stage::step_count)
      .def_readonly("pairs_processed", &construct::Stage::pairs_processed)
      .def_property_readonly("generators",
                             [](const construct::Stage& s) {
                               return s.gens.size();
                             })
      .def_property_readonly("joined_pairs",
                             [](const construct::Stage& s) {
                               return s.joined.size();
                             })
      .def("queue_size", &construct::Stage::queue_size)
      .def("__repr__", [](const construct::Stage& s) {
        return "Stage(points=" + std::to_string(s.num_points) +
               ", generators=" + std::to_string(s.gens.size()) + ")";
      });

  py::class_<construct::CheckReport>(con, "CheckReport")
      .def_readonly("ok", &construct::CheckReport::pass)
      .def_readonly("violations", &construct::CheckReport::violations)
      .def_readonly("violation_count",
                    &construct::CheckReport::violation_count)
      .def_readonly("frobenius_words", &construct::CheckReport::frobenius_words)
      .def_readonly("uniqueness_nodes",
                    &construct::CheckReport::uniqueness_nodes)
      .def_readonly("coherence_checks",
                    &construct::CheckReport::coherence_checks)
      .def("__bool__",
           [](const construct::CheckReport& r) { return r.pass; })
      .def("__str__", &construct::CheckReport::to_string)
      .def("__repr__", &construct::CheckReport::to_string);

  con.def("init_stage", &construct::init_stage, py::arg("seed") = 0);
  con.def("process_next_pair", &construct::process_next_pair, py::arg("s"));
  con.def("totalize", &construct::totalize, py::arg("s"));
  con.def("run", &construct::run, py::arg("steps"), py::arg("seed") = 0,
          py::arg("cadence") = 1);
  con.def("check_invariants", &construct::check_invariants, py::arg("s"),
          py::arg("depth"));
  con.def("write_snapshot", &construct::write_snapshot, py::arg("s"));

  // --- projective line and coupling maps -------------------------------------
  auto pj = m.def_submodule("proj",
                            "PGL(2,q) and involutory coupling automorphisms.");
  pj.def("build_pgl", &proj::build_pgl, py::arg("q"));
  pj.def("stabilizer_is_affine", &proj::stabilizer_is_affine, py::arg("q"));
  pj.def("sigma_inversion", &proj::sigma_inversion, py::arg("D"));
  pj.def("kerby_sigma_check",
         [](const NearStructure& D, const std::vector<int>& sigma) {
           std::string why;
           bool ok = proj::kerby_sigma_check(D, sigma, &why);
           return py::make_tuple(ok, why);
         },
         py::arg("D"), py::arg("sigma"),
         "Returns (ok, first_counterexample_or_empty).");
  pj.def("multiplicative_automorphisms", &proj::multiplicative_automorphisms,
         py::arg("D"));
  pj.def("find_kerby_sigma", &proj::find_kerby_sigma, py::arg("D"));
}
