#include "sharply/cli.hpp"

#include <exception>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "sharply/finite_group.hpp"
#include "sharply/free_product.hpp"
#include "sharply/io.hpp"
#include "sharply/nearfield.hpp"
#include "sharply/partial_action.hpp"
#include "sharply/projective.hpp"
#include "sharply/sharp_analysis.hpp"

namespace sharply::cli {

namespace {

constexpr const char* kTrue = "true";
constexpr const char* kFalse = "false";

const char* yn(bool b) { return b ? kTrue : kFalse; }

// --group accepts either a group file path or a catalog name (S(n), A(n),
// C(n), D(m), M11). Files win when both would apply.
FiniteGroup load_group(const std::string& spec) {
  {
    std::ifstream probe(spec);
    if (probe.good()) return io::parse_group(io::read_file(spec));
  }
  try {
    return catalog(spec);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("group \"" + spec +
                                "\": not a readable file or a catalog name");
  }
}

struct TableChoice {
  std::string table_file;
  int q = 0;
  bool dickson = false;
  bool left_twist = false;
  bool broken_loop = false;
};

void add_table_options(CLI::App* cmd, TableChoice& tc) {
  auto* file = cmd->add_option("--table", tc.table_file,
                               "near-structure table file to load");
  auto* q = cmd->add_option("--q", tc.q, "field order (prime power)");
  cmd->add_flag("--dickson", tc.dickson,
                "with --q: Dickson twist of GF(q), q an odd prime square");
  cmd->add_flag("--left-twist", tc.left_twist,
                "with --q: twist keyed on the left factor (fails "
                "right distributivity; verifier counterexample)");
  cmd->add_flag("--broken-loop", tc.broken_loop,
                "built-in order-5 loop counterexample (ignores --q)");
  file->excludes(q);
}

NearStructure load_table(const TableChoice& tc) {
  if (!tc.table_file.empty()) return io::parse_table(io::read_file(tc.table_file));
  if (tc.broken_loop) return build_broken_loop_table();
  if (tc.q == 0)
    throw std::invalid_argument("need --table, --q, or --broken-loop");
  if (tc.dickson && tc.left_twist)
    throw std::invalid_argument("--dickson and --left-twist are exclusive");
  if (tc.dickson) return build_dickson_nearfield(tc.q);
  if (tc.left_twist) return build_left_twist_table(tc.q);
  return build_field_nearfield(tc.q);
}

void print_group_header(std::ostream& out, const FiniteGroup& G) {
  out << "label: " << (G.label.empty() ? "(unnamed)" : G.label) << "\n";
  out << "degree: " << G.degree << "\n";
  out << "order: " << G.order() << "\n";
}

void maybe_write_group(const std::string& path, const FiniteGroup& G) {
  if (!path.empty()) io::write_file(path, io::print_group(G));
}

void maybe_write_table(const std::string& path, const NearStructure& S) {
  if (!path.empty()) io::write_file(path, io::print_table(S));
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"sharply n-transitive permutation groups: build, verify, "
               "analyze, construct",
               "sharply"};
  app.require_subcommand(1);

  // ---- build ----------------------------------------------------------
  auto* build = app.add_subcommand("build", "build a group and report on it");
  build->require_subcommand(1);

  int agl_q = 0;
  bool agl_dickson = false;
  std::string agl_out;
  auto* agl = build->add_subcommand(
      "agl", "affine group x -> x*a + b over GF(q) or the Dickson "
             "near-field of order q");
  agl->add_option("--q", agl_q, "order (prime power)")->required();
  agl->add_flag("--dickson", agl_dickson, "use the Dickson near-field");
  agl->add_option("-o,--output", agl_out, "write the group file here");

  std::string cat_name, cat_out;
  auto* cat = build->add_subcommand(
      "catalog", "named group: S(n), A(n), C(n), D(m), M11");
  cat->add_option("--name", cat_name, "catalog name")->required();
  cat->add_option("-o,--output", cat_out, "write the group file here");

  // ---- verify ---------------------------------------------------------
  std::string verify_group;
  int verify_sharp = 2;
  auto* verify = app.add_subcommand(
      "verify", "decide sharp n-transitivity of a group");
  verify->add_option("--group", verify_group, "group file or catalog name")
      ->required();
  verify->add_option("--sharp", verify_sharp, "transitivity degree n")
      ->required();

  // ---- analyze --------------------------------------------------------
  std::string analyze_group;
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "involution analysis of a sharply 2-transitive group: "
                 "class count, fixed points, characteristic, splitting");
  analyze_cmd->add_option("--group", analyze_group,
                          "group file or catalog name")
      ->required();

  // ---- nearfield ------------------------------------------------------
  TableChoice nf_choice;
  bool nf_domain = false;
  std::string nf_out;
  auto* nf = app.add_subcommand(
      "nearfield", "verify near-field or near-domain axioms on a table");
  add_table_options(nf, nf_choice);
  nf->add_flag("--domain", nf_domain,
               "check the near-domain axioms (addition a loop) instead of "
               "the near-field axioms");
  nf->add_option("-o,--output", nf_out, "write the canonical table here");

  // ---- freeprod -------------------------------------------------------
  auto* fp = app.add_subcommand(
      "freeprod", "word arithmetic in the free product (C2 x F(C)) * F(N)");
  fp->require_subcommand(1);
  std::string fp_u, fp_v;

  auto* fp_mul = fp->add_subcommand("mul", "product of two words");
  fp_mul->add_option("u", fp_u, "left word")->required();
  fp_mul->add_option("v", fp_v, "right word")->required();

  auto* fp_inv = fp->add_subcommand("inv", "inverse of a word");
  fp_inv->add_option("u", fp_u, "word")->required();

  auto* fp_conj = fp->add_subcommand("conj", "conjugate g^-1 u g");
  fp_conj->add_option("u", fp_u, "word")->required();
  fp_conj->add_option("g", fp_v, "conjugator")->required();

  auto* fp_invol = fp->add_subcommand("involution", "is the word an "
                                                    "involution?");
  fp_invol->add_option("u", fp_u, "word")->required();

  auto* fp_intj = fp->add_subcommand(
      "in-tj", "does the word lie in tJ (t times an involution or 1)?");
  fp_intj->add_option("u", fp_u, "word")->required();

  auto* fp_conjtest = fp->add_subcommand("conjugacy",
                                         "are two words conjugate?");
  fp_conjtest->add_option("u", fp_u, "first word")->required();
  fp_conjtest->add_option("v", fp_v, "second word")->required();

  int wit_radius = 1, wit_num_c = 1, wit_num_n = 1;
  auto* fp_wit = fp->add_subcommand(
      "neumann-witness",
      "search conjugator pairs (u,v) with (t t^u)(t t^v) outside tJ");
  fp_wit->add_option("--radius", wit_radius, "conjugator letter length cap")
      ->default_val(1);
  fp_wit->add_option("--num-c", wit_num_c, "commuting generators available")
      ->default_val(1);
  fp_wit->add_option("--num-n", wit_num_n, "free generators available")
      ->default_val(1);

  // ---- construct ------------------------------------------------------
  long long con_steps = 0;
  int con_depth = 3, con_cadence = 1;
  unsigned con_seed = 1;
  std::string con_snapshot;
  auto* con = app.add_subcommand(
      "construct", "grow the partial action toward a sharply 2-transitive "
                   "action and check its invariants");
  con->add_option("--steps", con_steps, "generators to mint")->required();
  con->add_option("--depth", con_depth, "invariant check depth")
      ->default_val(3);
  con->add_option("--seed", con_seed, "totalization shuffle seed (0 = none)")
      ->default_val(1);
  con->add_option("--cadence", con_cadence, "totalize every this many mints")
      ->default_val(1);
  con->add_option("--snapshot", con_snapshot, "write the stage snapshot here");

  // ---- pgl ------------------------------------------------------------
  int pgl_q = 0;
  std::string pgl_out;
  auto* pgl_cmd = app.add_subcommand(
      "pgl", "PGL(2,q) on the projective line (degree q+1)");
  pgl_cmd->add_option("--q", pgl_q, "field order (prime power)")->required();
  pgl_cmd->add_option("-o,--emit-group", pgl_out, "write the group file here");

  // ---- kerby ----------------------------------------------------------
  TableChoice kerby_choice;
  std::string kerby_sigma = "inversion";
  auto* kerby = app.add_subcommand(
      "kerby", "involutory multiplicative automorphisms satisfying the "
               "coupling equation s(1 + s(x)) = 1 - s(1 + x)");
  add_table_options(kerby, kerby_choice);
  kerby->add_option("--sigma", kerby_sigma,
                    "inversion: test x -> x^-1; search: enumerate all")
      ->check(CLI::IsMember({"inversion", "search"}))
      ->default_val("inversion");

  // ---- extract --------------------------------------------------------
  std::string ext_group, ext_out;
  int ext_zero = 0, ext_one = 1, ext_orientation = -1;
  auto* ext = app.add_subcommand(
      "extract", "recover the near-domain tables from a sharply "
                 "2-transitive group");
  ext->add_option("--group", ext_group, "group file or catalog name")
      ->required();
  ext->add_option("--zero", ext_zero, "point playing 0")->default_val(0);
  ext->add_option("--one", ext_one, "point playing 1")->default_val(1);
  ext->add_option("--orientation", ext_orientation,
                  "table orientation 0..3, or -1 to auto-select")
      ->default_val(-1);
  ext->add_option("-o,--output", ext_out, "write the table file here");

  // ---- parse ----------------------------------------------------------
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (agl->parsed()) {
      NearStructure S = agl_dickson ? build_dickson_nearfield(agl_q)
                                    : build_field_nearfield(agl_q);
      FiniteGroup G = build_affine_group(S);
      print_group_header(out, G);
      out << "sharply_2_transitive: " << yn(is_sharply_n_transitive(G, 2))
          << "\n";
      maybe_write_group(agl_out, G);
      return 0;
    }

    if (cat->parsed()) {
      FiniteGroup G = catalog(cat_name);
      print_group_header(out, G);
      maybe_write_group(cat_out, G);
      return 0;
    }

    if (verify->parsed()) {
      if (verify_sharp < 1)
        throw std::invalid_argument("--sharp must be at least 1");
      FiniteGroup G = load_group(verify_group);
      print_group_header(out, G);
      bool trans = is_n_transitive(G, verify_sharp);
      bool sharp = trans && is_sharply_n_transitive(G, verify_sharp);
      out << "n: " << verify_sharp << "\n";
      out << "n_transitive: " << yn(trans) << "\n";
      out << "sharply_n_transitive: " << yn(sharp) << "\n";
      if (sharp)
        out << "verdict: sharply " << verify_sharp << "-transitive\n";
      else if (trans)
        out << "verdict: " << verify_sharp
            << "-transitive but not sharply\n";
      else
        out << "verdict: not " << verify_sharp << "-transitive\n";
      return sharp ? 0 : 1;
    }

    if (analyze_cmd->parsed()) {
      FiniteGroup G = load_group(analyze_group);
      print_group_header(out, G);
      InvolutionReport rep = analyze(G);
      out << rep.to_string();
      return 0;
    }

    if (nf->parsed()) {
      NearStructure S = load_table(nf_choice);
      AxiomReport rep = nf_domain ? verify_near_domain(S)
                                  : verify_near_field(S);
      out << "label: " << (S.label.empty() ? "(unnamed)" : S.label) << "\n";
      out << "order: " << S.order << "\n";
      out << "check: " << (nf_domain ? "near-domain" : "near-field") << "\n";
      out << "report: " << rep.to_string() << "\n";
      if (rep.pass) {
        out << "mult_abelian: " << yn(multiplicative_group_abelian(S))
            << "\n";
        out << "mult_involutions: " << count_multiplicative_involutions(S)
            << "\n";
      }
      maybe_write_table(nf_out, S);
      return rep.pass ? 0 : 1;
    }

    if (fp_mul->parsed()) {
      out << "product: "
          << freeprod::fp_print(
                 freeprod::fp_multiply(freeprod::fp_parse(fp_u),
                                       freeprod::fp_parse(fp_v)))
          << "\n";
      return 0;
    }
    if (fp_inv->parsed()) {
      out << "inverse: "
          << freeprod::fp_print(freeprod::fp_invert(freeprod::fp_parse(fp_u)))
          << "\n";
      return 0;
    }
    if (fp_conj->parsed()) {
      out << "conjugate: "
          << freeprod::fp_print(
                 freeprod::fp_conjugate(freeprod::fp_parse(fp_u),
                                        freeprod::fp_parse(fp_v)))
          << "\n";
      return 0;
    }
    if (fp_invol->parsed()) {
      bool b = freeprod::fp_is_involution(freeprod::fp_parse(fp_u));
      out << "involution: " << yn(b) << "\n";
      return b ? 0 : 1;
    }
    if (fp_intj->parsed()) {
      bool b = freeprod::fp_in_tJ(freeprod::fp_parse(fp_u));
      out << "in_tj: " << yn(b) << "\n";
      return b ? 0 : 1;
    }
    if (fp_conjtest->parsed()) {
      bool b = freeprod::fp_conjugacy_test(freeprod::fp_parse(fp_u),
                                           freeprod::fp_parse(fp_v));
      out << "conjugate_elements: " << yn(b) << "\n";
      return b ? 0 : 1;
    }
    if (fp_wit->parsed()) {
      freeprod::WitnessSearchResult r =
          freeprod::neumann_witness_search(wit_radius, wit_num_c, wit_num_n);
      out << "radius: " << r.radius << "\n";
      out << "words_searched: " << r.words_searched << "\n";
      out << "witness_count: " << r.count << "\n";
      if (!r.witness) {
        out << "witness: none\n";
        return 1;
      }
      const auto& [u, v] = *r.witness;
      freeprod::FPWord t = freeprod::fp_t();
      freeprod::FPWord left =
          freeprod::fp_multiply(t, freeprod::fp_conjugate(t, u));
      freeprod::FPWord right =
          freeprod::fp_multiply(t, freeprod::fp_conjugate(t, v));
      freeprod::FPWord product = freeprod::fp_multiply(left, right);
      out << "witness_u: " << freeprod::fp_print(u) << "\n";
      out << "witness_v: " << freeprod::fp_print(v) << "\n";
      out << "product: " << freeprod::fp_print(product) << "\n";
      out << "product_syllables: " << product.syllable_length() << "\n";
      return 0;
    }

    if (con->parsed()) {
      if (con_steps < 0)
        throw std::invalid_argument("--steps must be nonnegative");
      construct::Stage s = construct::run(con_steps, con_seed, con_cadence);
      out << "steps: " << s.step_count << "\n";
      out << "seed: " << con_seed << "\n";
      out << "points: " << s.num_points << "\n";
      out << "generators: " << s.gens.size() << "\n";
      out << "joined_pairs: " << s.joined.size() << "\n";
      out << "queue: " << s.queue_size() << "\n";
      out << "check_depth: " << con_depth << "\n";
      construct::CheckReport rep = construct::check_invariants(s, con_depth);
      out << rep.to_string();
      if (!con_snapshot.empty())
        io::write_file(con_snapshot, construct::write_snapshot(s));
      return rep.pass ? 0 : 1;
    }

    if (pgl_cmd->parsed()) {
      FiniteGroup G = proj::build_pgl(pgl_q);
      print_group_header(out, G);
      bool sharp3 = is_sharply_n_transitive(G, 3);
      out << "sharply_3_transitive: " << yn(sharp3) << "\n";
      maybe_write_group(pgl_out, G);
      return sharp3 ? 0 : 1;
    }

    if (kerby->parsed()) {
      NearStructure D = load_table(kerby_choice);
      out << "label: " << (D.label.empty() ? "(unnamed)" : D.label) << "\n";
      out << "order: " << D.order << "\n";
      if (kerby_sigma == "inversion") {
        std::vector<int> sigma = proj::sigma_inversion(D);
        std::string why;
        bool ok = proj::kerby_sigma_check(D, sigma, &why);
        out << "sigma: inversion\n";
        out << "check: " << (ok ? "pass" : "fail: " + why) << "\n";
        return ok ? 0 : 1;
      }
      std::vector<std::vector<int>> found = proj::find_kerby_sigma(D);
      out << "sigma: search\n";
      out << "found: " << found.size() << "\n";
      for (const auto& sigma : found) {
        out << "sigma_map:";
        for (int v : sigma) out << ' ' << v;
        out << "\n";
      }
      return found.empty() ? 1 : 0;
    }

    if (ext->parsed()) {
      FiniteGroup G = load_group(ext_group);
      NearStructure D =
          extract_near_domain(G, ext_zero, ext_one, ext_orientation);
      AxiomReport rep = verify_near_domain(D);
      out << "label: " << D.label << "\n";
      out << "order: " << D.order << "\n";
      out << "orientation: ";
      if (ext_orientation < 0)
        out << "auto\n";
      else
        out << ext_orientation << "\n";
      out << "report: " << rep.to_string() << "\n";
      maybe_write_table(ext_out, D);
      return rep.pass ? 0 : 1;
    }

    err << "usage error: no command selected\n";
    return 2;
  } catch (const io::ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sharply::cli
