// Command-line front end: solve, verify, gen, tripod, clean, topo.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgallai/cgallai.hpp"

namespace {

using namespace cgallai;

constexpr int kExitHitting = 10;
constexpr int kExitInput = 2;
constexpr int kExitRange = 3;
constexpr int kExitContract = 4;

void emit(const Json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write " + out);
  f << j.dump(2) << '\n';
}

Json set_json(const VertexSet& s) { return s.ids(); }

struct SolveArgs {
  std::string graph, a_set, out;
  std::int64_t k = 1, d = 1;
  bool coarse = false, check = false;
};

int cmd_solve(const SolveArgs& s) {
  const Graph g = read_graph_file(s.graph);
  const VertexSet a = read_vertex_set_file(s.a_set, g);
  const SolveParams p = SolveParams::make(s.k, s.d, s.coarse);
  const Certificate c = solve(g, a, p, SolveOptions{.check_invariants = s.check, .frame_observer = {}});
  emit(certificate_to_json(c, p), s.out);
  return std::holds_alternative<Packing>(c) ? 0 : kExitHitting;
}

struct VerifyArgs {
  std::string graph, a_set, cert;
};

int cmd_verify(const VerifyArgs& s) {
  const Graph g = read_graph_file(s.graph);
  const VertexSet a = read_vertex_set_file(s.a_set, g);
  const CertificateFile cf = certificate_from_json(read_json_file(s.cert));
  if (const auto why = certificate_violation(g, a, cf)) {
    std::cout << "REJECT " << *why << '\n';
    return 1;
  }
  std::cout << "ACCEPT\n";
  return 0;
}

int cmd_gen(const GenSpec& gen, const std::string& out) {
  const Instance inst = generate(gen);
  if (out.empty() || out == "-") {
    write_graph(std::cout, inst.graph);
    std::cout << "# A\n# ";
    write_vertex_set(std::cout, inst.a);
    return 0;
  }
  std::ofstream gf(out + ".graph"), af(out + ".a");
  if (!gf || !af) throw InputError("cannot write " + out + ".graph / .a");
  write_graph(gf, inst.graph);
  write_vertex_set(af, inst.a);
  return 0;
}

struct TripodArgs {
  std::string graph, q, out;
  std::vector<Vertex> v;
  std::int64_t ell = 1, d = 1;
};

int cmd_tripod(const TripodArgs& s) {
  const Graph g = read_graph_file(s.graph);
  const VertexSet q = read_vertex_set_file(s.q, g);
  if (s.v.size() != 3) throw InputError("tripod: need exactly three vertices");
  const TripodProblem pr{{s.v[0], s.v[1], s.v[2]}, q, s.ell, s.d};
  const TripodResult r = tripod(g, pr, TripodOptions{.check_invariants = true});
  Json j;
  j["z"] = set_json(r.z);
  j["p"] = {set_json(r.p[0]), set_json(r.p[1]), set_json(r.p[2])};
  j["case"] = r.final_case;
  j["iterations"] = r.iterations;
  j["z_radius"] = radius_center(g, r.z).radius;
  j["conclusions_hold"] = tripod_result_violations(g, pr, r).empty();
  emit(j, s.out);
  return 0;
}

struct ModelArgs {
  std::string graph, model, out;
  std::int64_t q = 0, ell = 1;
};

int cmd_clean(const ModelArgs& s) {
  const Graph g = read_graph_file(s.graph);
  const FatModel m = model_from_json(read_json_file(s.model), false);
  const SimpleModel sm = fat_to_clean(g, m, s.q, s.ell);
  Json j;
  j["model"] = model_to_json(sm.model());
  j["fatness"] = fatness(g, sm.model()).str();
  j["clean"] = is_clean(g, sm, s.ell);
  emit(j, s.out);
  return 0;
}

int cmd_topo(const ModelArgs& s) {
  const Graph g = read_graph_file(s.graph);
  const FatModel m = model_from_json(read_json_file(s.model));
  const FatModel t = make_topological(g, m, s.ell);
  std::int64_t worst = 0;
  for (const auto& [_, part] : t.branch_sets) worst = std::max(worst, radius_center(g, part.vertices()).radius);
  Json j;
  j["model"] = model_to_json(t);
  j["fatness"] = fatness(g, t).str();
  j["max_branch_radius"] = worst;
  emit(j, s.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cgallai: packing-or-hitting solver for far-apart A-paths"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "packing or hitting certificate for (G, A, k, d)");
  solve_cmd->add_option("--graph", sa.graph)->required();
  solve_cmd->add_option("--a-set", sa.a_set)->required();
  solve_cmd->add_option("-k", sa.k)->required();
  solve_cmd->add_option("-d", sa.d)->required();
  solve_cmd->add_flag("--coarse", sa.coarse);
  solve_cmd->add_flag("--check", sa.check, "validate every intermediate frame");
  solve_cmd->add_option("--out", sa.out, "certificate path (default stdout)");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
  verify_cmd->add_option("--graph", va.graph)->required();
  verify_cmd->add_option("--a-set", va.a_set)->required();
  verify_cmd->add_option("--cert", va.cert)->required();

  GenSpec gs;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance");
  gen_cmd->add_option("--family", gs.family)
      ->check(CLI::IsMember({"path", "cycle", "spider", "disjoint_paths", "grid", "random"}));
  gen_cmd->add_option("--n", gs.n)->required();
  gen_cmd->add_option("--seed", gs.seed);
  gen_cmd->add_option("--a-policy", gs.a_policy)->check(CLI::IsMember({"endpoints", "all", "random_p"}));
  gen_cmd->add_option("--legs", gs.legs);
  gen_cmd->add_option("--count", gs.count);
  gen_cmd->add_option("--p", gs.p);
  gen_cmd->add_option("--out", gen_out, "prefix; writes PREFIX.graph and PREFIX.a");

  TripodArgs ta;
  auto* tripod_cmd = app.add_subcommand("tripod", "run the tripod construction");
  tripod_cmd->add_option("--graph", ta.graph)->required();
  tripod_cmd->add_option("--q", ta.q, "vertex-set file for Q")->required();
  tripod_cmd->add_option("--v", ta.v, "three vertices")->required()->expected(3);
  tripod_cmd->add_option("--ell", ta.ell)->required();
  tripod_cmd->add_option("-d", ta.d)->required();
  tripod_cmd->add_option("--out", ta.out);

  ModelArgs ca;
  auto* clean_cmd = app.add_subcommand("clean", "normalize a fat model into a clean one");
  clean_cmd->add_option("--graph", ca.graph)->required();
  clean_cmd->add_option("--model", ca.model)->required();
  clean_cmd->add_option("--q", ca.q)->required();
  clean_cmd->add_option("--ell", ca.ell)->required();
  clean_cmd->add_option("--out", ca.out);

  ModelArgs to;
  auto* topo_cmd = app.add_subcommand("topo", "shrink branch sets of a fat subcubic model");
  topo_cmd->add_option("--graph", to.graph)->required();
  topo_cmd->add_option("--model", to.model)->required();
  topo_cmd->add_option("--ell", to.ell)->required();
  topo_cmd->add_option("--out", to.out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return cmd_solve(sa);
    if (*verify_cmd) return cmd_verify(va);
    if (*gen_cmd) return cmd_gen(gs, gen_out);
    if (*tripod_cmd) return cmd_tripod(ta);
    if (*clean_cmd) return cmd_clean(ca);
    if (*topo_cmd) return cmd_topo(to);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ParameterRangeError& e) {
    std::cerr << "parameter range: " << e.what() << '\n';
    return kExitRange;
  } catch (const ContractError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kExitContract;
  }
  return 0;
}
