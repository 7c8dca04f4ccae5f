// Command-line front end: build complexes, run the transformations, and
// execute the verification suites.
#include "CLI11.hpp"
#include "cubik/suites.hpp"

#include <fstream>
#include <set>
#include <iostream>

using namespace cubik;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

FinCategory category_by_name(const std::string& name) {
  if (name.rfind("poset:", 0) == 0) return poset_category(std::stoi(name.substr(6)));
  if (name == "walking-iso") return walking_isomorphism();
  if (name == "parallel-pair") return parallel_pair();
  if (name.rfind("discrete:", 0) == 0) return discrete_category(std::stoi(name.substr(9)));
  for (const FinCategory& C : category_corpus())
    if (C.name == name) return C;
  throw std::runtime_error("unknown category: " + name);
}

ConeKind cone_kind_by_name(const std::string& s) {
  if (s == "l1") return kLeftPositive;
  if (s == "l0") return kLeftNegative;
  if (s == "r1") return kRightPositive;
  if (s == "r0") return kRightNegative;
  throw std::runtime_error("unknown cone kind: " + s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubik: a kernel for finite cubical sets with connections"};
  app.require_subcommand(1);

  // shape
  auto* shape_cmd = app.add_subcommand("shape", "emit a standard complex");
  std::string shape_kind, shape_out;
  int sn = 2, si = 1, seps = 0;
  shape_cmd->add_option("--kind", shape_kind, "cube|boundary|open_box|inner_open_box|inner_cube|"
                                              "K|Kprime|marked_open_box|three_out_of_four|point")
      ->required();
  shape_cmd->add_option("--n", sn);
  shape_cmd->add_option("--i", si);
  shape_cmd->add_option("--eps", seps);
  shape_cmd->add_option("-o,--out", shape_out)->required();

  // product
  auto* product_cmd = app.add_subcommand("product", "geometric product of two complexes");
  std::string pa, pb, pout;
  product_cmd->add_option("a", pa)->required();
  product_cmd->add_option("b", pb)->required();
  product_cmd->add_option("-o,--out", pout)->required();

  // triangulate
  auto* tri_cmd = app.add_subcommand("triangulate", "triangulation of a complex");
  std::string ta, tout;
  tri_cmd->add_option("a", ta)->required();
  tri_cmd->add_option("-o,--out", tout)->required();

  // cone
  auto* cone_cmd = app.add_subcommand("cone", "cone on a complex");
  std::string ca, cout_path, ckind = "l1";
  cone_cmd->add_option("a", ca)->required();
  cone_cmd->add_option("--kind", ckind, "l1|l0|r1|r0");
  cone_cmd->add_option("-o,--out", cout_path)->required();

  // q
  auto* q_cmd = app.add_subcommand("q", "straightening of a simplicial set");
  std::string qa, qout;
  q_cmd->add_option("a", qa)->required();
  q_cmd->add_option("-o,--out", qout)->required();

  // integrate
  auto* int_cmd = app.add_subcommand("integrate", "the right adjoint of q, truncated");
  std::string ia, iout;
  int ibound = 3;
  int_cmd->add_option("a", ia)->required();
  int_cmd->add_option("--bound", ibound);
  int_cmd->add_option("-o,--out", iout)->required();

  // check-qcat
  auto* qc_cmd = app.add_subcommand("check-qcat", "inner open box filler check");
  std::string qc_nerve, qc_file;
  int qc_dim = 3;
  qc_cmd->add_option("--nerve", qc_nerve, "e.g. poset:2 or walking-iso");
  qc_cmd->add_option("file", qc_file);
  qc_cmd->add_option("--dim", qc_dim);

  // ho
  auto* ho_cmd = app.add_subcommand("ho", "homotopy category of a nerve");
  std::string ho_nerve;
  ho_cmd->add_option("--nerve", ho_nerve)->required();

  // map-space
  auto* ms_cmd = app.add_subcommand("map-space", "cubical mapping space");
  std::string msa, ms_x0, ms_x1, ms_side = "R", ms_out;
  int ms_bound = 2;
  ms_cmd->add_option("a", msa)->required();
  ms_cmd->add_option("--x0", ms_x0)->required();
  ms_cmd->add_option("--x1", ms_x1)->required();
  ms_cmd->add_option("--side", ms_side, "L|R");
  ms_cmd->add_option("--bound", ms_bound);
  ms_cmd->add_option("-o,--out", ms_out)->required();

  // suspend
  auto* sus_cmd = app.add_subcommand("suspend", "suspension of a complex");
  std::string sa_path, sus_out, sus_side = "R";
  sus_cmd->add_option("a", sa_path)->required();
  sus_cmd->add_option("--side", sus_side, "L|R");
  sus_cmd->add_option("-o,--out", sus_out)->required();

  // theta-verify
  auto* th_cmd = app.add_subcommand("theta-verify", "verify the composite-family identities");
  std::string th_nerve = "poset:2";
  int th_bound = 4;
  th_cmd->add_option("--nerve", th_nerve);
  th_cmd->add_option("--bound", th_bound);

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "run a verification suite");
  std::string suite_name = "all";
  unsigned suite_seed = 2026;
  suite_cmd->add_option("name", suite_name,
                        "identities|product|triangulation|cones|q|quasicat|theta|serialization|all");
  suite_cmd->add_option("--seed", suite_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*shape_cmd) {
      ComplexPtr X;
      if (shape_kind == "cube") X = standard_cube(sn);
      else if (shape_kind == "boundary") X = boundary_cube(sn);
      else if (shape_kind == "open_box") X = open_box(sn, si, seps);
      else if (shape_kind == "inner_open_box") X = inner_open_box(sn, si, seps).complex;
      else if (shape_kind == "inner_cube") X = inner_cube(sn, si, seps).complex;
      else if (shape_kind == "K") X = shape_K();
      else if (shape_kind == "Kprime") X = shape_K_prime();
      else if (shape_kind == "marked_open_box") X = marked_open_box(sn, si, seps);
      else if (shape_kind == "three_out_of_four") X = three_out_of_four(si, seps);
      else if (shape_kind == "point") X = point();
      else throw std::runtime_error("unknown shape kind: " + shape_kind);
      spit(shape_out, serialize_cub(*X, shape_kind));
    } else if (*product_cmd) {
      ComplexPtr A = parse_cub(slurp(pa));
      ComplexPtr B = parse_cub(slurp(pb));
      ProductResult P = product(A, B);
      std::vector<std::string> comments;
      for (int total = 0; total <= P.complex->dim_bound(); ++total)
        for (int k = 0; k < P.complex->count(total); ++k) {
          auto [x, y] = P.pairs[total][k];
          comments.push_back("pair " + A->name(x) + " " + B->name(y));
        }
      spit(pout, serialize_cub(*P.complex, "product", comments));
    } else if (*tri_cmd) {
      ComplexPtr A = parse_cub(slurp(ta));
      TriangulationResult T = triangulate(A);
      spit(tout, serialize_sim(*T.complex, "triangulation"));
    } else if (*cone_cmd) {
      ComplexPtr A = parse_cub(slurp(ca));
      ConeResult C = cone(A, cone_kind_by_name(ckind));
      spit(cout_path, serialize_cub(*C.complex, "cone"));
    } else if (*q_cmd) {
      SimpPtr S = parse_sim(slurp(qa));
      QFunctorResult Q = q_functor(S);
      spit(qout, serialize_cub(*Q.complex, "q"));
    } else if (*int_cmd) {
      ComplexPtr A = parse_cub(slurp(ia));
      ExplicitCubes E{A};
      Materialized<CubeRef> I = integral(E, ibound);
      spit(iout, serialize_sim(*I.complex, "integral"));
    } else if (*qc_cmd) {
      QuasicatReport rep;
      if (!qc_nerve.empty()) {
        NerveComplex N(category_by_name(qc_nerve));
        rep = is_quasicategory_up_to(N, qc_dim, default_budget());
      } else if (!qc_file.empty()) {
        ExplicitCubes E{parse_cub(slurp(qc_file))};
        rep = is_quasicategory_up_to(E, qc_dim, default_budget());
      } else {
        throw std::runtime_error("check-qcat needs --nerve or a file");
      }
      std::cout << "boxes checked: " << rep.boxes_checked << "\n";
      if (rep.ok) {
        std::cout << "quasicategory up to dimension " << qc_dim << "\n";
      } else {
        auto [n, i, e] = *rep.failing_shape;
        std::cout << "missing filler for an inner (" << i << "," << e << ")-box in dimension "
                  << n << "\n";
        return 1;
      }
    } else if (*ho_cmd) {
      NerveComplex N(category_by_name(ho_nerve));
      HoCategory<NerveComplex> H = ho(N);
      std::cout << "objects: " << H.cat.num_objects << "\n";
      for (size_t m = 0; m < H.cat.morphisms.size(); ++m)
        std::cout << "morphism " << H.cat.morphisms[m].name << ": " << H.cat.morphisms[m].src
                  << " -> " << H.cat.morphisms[m].dst << "\n";
    } else if (*ms_cmd) {
      ComplexPtr A = parse_cub(slurp(msa));
      ExplicitCubes E{A};
      auto x0 = A->find_by_name(ms_x0);
      auto x1 = A->find_by_name(ms_x1);
      if (!x0 || !x1) throw std::runtime_error("vertex not found");
      auto M = mapping_space(E, A->ref(*x0), A->ref(*x1),
                             ms_side == "L" ? MapSide::L : MapSide::R, ms_bound);
      spit(ms_out, serialize_cub(*M.complex, "map-space"));
    } else if (*sus_cmd) {
      ComplexPtr A = parse_cub(slurp(sa_path));
      SuspensionResult S = suspension(A, sus_side == "L" ? MapSide::L : MapSide::R);
      spit(sus_out, serialize_cub(*S.complex, "suspension"));
    } else if (*th_cmd) {
      NerveComplex N(category_by_name(th_nerve));
      ThetaFamily<NerveComplex> F(N, th_bound);
      std::vector<ThetaReportLine> rep = verify_theta(F);
      std::cout << render_theta_report(rep);
      for (const ThetaReportLine& l : rep)
        if (l.failed > 0) return 1;
    } else if (*suite_cmd) {
      const std::set<std::string> known{"identities",    "product", "triangulation",
                                        "cones",         "q",       "quasicat",
                                        "theta",         "serialization", "all"};
      if (!known.count(suite_name)) {
        std::cerr << "unknown suite: " << suite_name << "\n";
        return 2;
      }
      SuiteContext ctx;
      ctx.seed = suite_seed;
      std::vector<SuiteResult> results = run_suite_by_name(suite_name, ctx);
      bool ok = true;
      for (const SuiteResult& rr : results) {
        std::cout << (rr.ok ? "PASS " : "FAIL ") << rr.name << "\n";
        for (const std::string& line : rr.lines) std::cout << line << "\n";
        ok = ok && rr.ok;
      }
      if (!ok) return 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
