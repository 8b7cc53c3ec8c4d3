// Command-line front end: solvers, oracles, generators and a small benchmark.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include "kcn/canonical.hpp"
#include "kcn/decider.hpp"
#include "kcn/fptas.hpp"
#include "kcn/generators.hpp"
#include "kcn/io.hpp"
#include "kcn/oned.hpp"
#include "kcn/optimizer.hpp"
#include "kcn/oracle.hpp"
#include "kcn/size_ptas.hpp"
#include "kcn/svg.hpp"

namespace {

using namespace kcn;

constexpr int kExitInfeasible = 2;
constexpr int kExitInput = 3;

struct Globals {
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string svg;
  double tolerance = kTolerance;
  std::string out;
};

Instance load_instance(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    try {
      return instance_from_json(Json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("stdin: ") + e.what());
    }
  }
  return instance_from_json(read_json(path));
}

void emit(const Globals& g, const Json& j, const std::string& text) {
  const std::string body = g.format == "json" ? dump(j) : text;
  if (g.out.empty()) std::cout << body;
  else write_text(g.out, body);
}

void emit_solution(const Globals& g, const Instance& inst, const Solution& sol) {
  std::ostringstream text;
  text << "algorithm " << sol.algorithm << "\nradius " << sol.radius << "\ncenters "
       << sol.centers.size() << "\ndecider_calls " << sol.decider_calls << "\n";
  emit(g, to_json(sol), text.str());
  if (!g.svg.empty()) write_text(g.svg, render_svg(inst, &sol));
}

void emit_instance(const Globals& g, const Instance& inst) {
  std::ostringstream text;
  text << "dimension " << inst.dimension << "\nk " << inst.k << "\nobjects " << inst.objects.size()
       << "\n";
  emit(g, to_json(inst), text.str());
  if (!g.svg.empty()) write_text(g.svg, render_svg(inst));
}

PlanarGraph load_graph(const std::string& spec) {
  if (spec.find('.') == std::string::npos && spec.find('/') == std::string::npos)
    return named_graph(spec);
  const Json j = read_json(spec);
  PlanarGraph g;
  try {
    for (const auto& v : j.at("vertices")) g.positions.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(spec + ": graph needs \"vertices\" [[x,y],...] and \"edges\" [[u,v],...]: " + e.what());
  }
  return g;
}

int k_or(const Instance& inst, int override_k) { return override_k > 0 ? override_k : inst.k; }

struct BenchRow {
  std::size_t n;
  int k;
  double optimum;
  double disks_ratio;
  double size_ptas_ratio;
  std::size_t size_ptas_centers;
  double disks_ms;
};

BenchRow bench_one(std::size_t n, int k, std::uint64_t seed, double eps) {
  const auto disks = random_disks(n, seed);
  BenchRow row{n, k, 0, 0, 0, 0, 0};
  row.optimum = brute_force_opt(disks, k).radius;
  const auto t0 = std::chrono::steady_clock::now();
  const auto approx = solve_disks(disks, k);
  row.disks_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const auto size = solve_size(disks, k, eps);
  row.disks_ratio = row.optimum > 0 ? approx.radius / row.optimum : 1.0;
  row.size_ptas_ratio = row.optimum > 0 ? size.radius / row.optimum : 1.0;
  row.size_ptas_centers = size.centers.size();
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-center clustering of convex neighborhoods"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too
  Globals g;
  app.add_option("--seed", g.seed, "Seed for generators and the benchmark");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--svg", g.svg, "Also write an SVG drawing to this path");
  app.add_option("--tolerance", g.tolerance, "Slack of the decider's distance tests")
      ->check(CLI::NonNegativeNumber);
  app.add_option("-o,--out", g.out, "Write the main output here instead of stdout");

  std::string input = "-";
  int k_override = 0;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("instance", input, "Instance JSON file, or - for stdin");
    sub->add_option("-k,--k", k_override, "Override the instance's k");
  };

  auto* decide_cmd = app.add_subcommand("decide", "Run the decider at a radius");
  add_input(decide_cmd);
  double radius = 0;
  decide_cmd->add_option("-r,--radius", radius, "Query radius")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Approximate optimum for disjoint disks or balls");
  add_input(solve_cmd);
  std::string alg = "auto";
  double epsilon = 0.5;
  solve_cmd->add_option("--alg", alg, "disks, balls or auto")
      ->check(CLI::IsMember({"auto", "disks", "balls"}));
  solve_cmd->add_option("--epsilon", epsilon, "Grid refinement for --alg balls");

  auto* oned_cmd = app.add_subcommand("solve-1d", "Exact optimum for intervals");
  add_input(oned_cmd);

  auto* size_cmd = app.add_subcommand("size-ptas", "Optimal radius with at most (1+eps)k centers");
  add_input(size_cmd);
  int swap = kDefaultSwapSize;
  size_cmd->add_option("--epsilon", epsilon, "Center budget slack")->check(CLI::PositiveNumber);
  size_cmd->add_option("--swap", swap, "Local search swap size")->check(CLI::PositiveNumber);

  auto* fptas_cmd = app.add_subcommand("fptas", "(1+eps)-approximation for unit disks");
  add_input(fptas_cmd);
  FptasConfig fcfg;
  std::string mode = "auto";
  fptas_cmd->add_option("--epsilon", fcfg.epsilon, "Radius slack")->check(CLI::PositiveNumber);
  fptas_cmd->add_option("--gamma", fcfg.gamma, "Exact-branch threshold constant");
  fptas_cmd->add_option("--mode", mode, "k-center candidate mode")
      ->check(CLI::IsMember({"auto", "exact", "grid"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by exhaustive search");
  add_input(oracle_cmd);
  std::string method = "canonical";
  double step = 0.01;
  oracle_cmd->add_option("--method", method, "canonical, partition or grid")
      ->check(CLI::IsMember({"canonical", "partition", "grid"}));
  oracle_cmd->add_option("--step", step, "Grid spacing for --method grid");

  auto* cand_cmd = app.add_subcommand("gen-candidates", "Canonical candidate points and radii");
  add_input(cand_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  std::size_t count = 10;
  int gen_k = 2;
  auto* gen_disks = gen_cmd->add_subcommand("random-disks", "Random disjoint disks or balls");
  DiskOptions dopt;
  int dim = 2;
  bool unit = false;
  gen_disks->add_option("-n", count, "Number of objects");
  gen_disks->add_option("-k", gen_k, "Center budget written to the instance");
  gen_disks->add_option("--dim", dim, "Dimension")->check(CLI::PositiveNumber);
  gen_disks->add_option("--box", dopt.box, "Side of the sampling box");
  gen_disks->add_option("--min-radius", dopt.min_radius, "Smallest radius");
  gen_disks->add_option("--max-radius", dopt.max_radius, "Largest radius");
  gen_disks->add_option("--min-gap", dopt.min_gap, "Smallest boundary distance");
  gen_disks->add_flag("--unit", unit, "All radii equal to 1");

  auto* gen_iv = gen_cmd->add_subcommand("intervals", "Random intervals");
  double span = 100;
  double max_len = 10;
  gen_iv->add_option("-n", count, "Number of intervals");
  gen_iv->add_option("-k", gen_k, "Center budget");
  gen_iv->add_option("--span", span, "Range of left endpoints");
  gen_iv->add_option("--max-length", max_len, "Largest interval length");

  GadgetParams gp;
  std::string graph = "triangle";
  auto* gen_seg = gen_cmd->add_subcommand("vc-segments", "Segment gadget of a vertex cover instance");
  gen_seg->add_option("--graph", graph, "Built-in graph name or graph JSON file");
  gen_seg->add_option("-k", gp.k, "Vertex cover budget");
  gen_seg->add_option("--eps", gp.eps_shrink, "Length removed at each segment end");

  auto* gen_vcd = gen_cmd->add_subcommand("vc-disks", "Unit disk gadget of a vertex cover instance");
  gen_vcd->add_option("--graph", graph, "Built-in graph name or graph JSON file");
  gen_vcd->add_option("-k", gp.k, "Vertex cover budget");
  gen_vcd->add_option("--delta", gp.delta_sep, "Gap inside degree-3 triples");
  gen_vcd->add_option("--disks", gp.edge_disks, "Disk count per edge (odd, >= 3; 0 = automatic)");

  auto* bench_cmd = app.add_subcommand("bench", "Approximation ratios on random instances");
  std::size_t trials = 20;
  std::size_t threads = 4;
  bench_cmd->add_option("-n", count, "Disks per instance");
  bench_cmd->add_option("-k", gen_k, "Centers");
  bench_cmd->add_option("--trials", trials, "Number of instances");
  bench_cmd->add_option("--threads", threads, "Concurrent instances")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--epsilon", epsilon, "Size PTAS slack");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*decide_cmd) {
      const auto inst = load_instance(input);
      const auto balls = balls_of(inst);
      const auto v = decide(balls, k_or(inst, k_override), radius, g.tolerance);
      Json j;
      j["verdict"] = v.feasible() ? "cover" : "infeasible";
      j["radius"] = radius;
      j["centers_needed"] = v.centers_needed;
      if (v.feasible()) {
        Solution sol;
        sol.centers = v.cover->centers;
        sol.radius = cover_radius(balls, sol.centers);
        sol.algorithm = "decider";
        j["centers"] = to_json(sol)["centers"];
        j["cover_radius"] = sol.radius;
        if (!g.svg.empty()) write_text(g.svg, render_svg(inst, &sol));
      }
      std::ostringstream text;
      text << j["verdict"].get<std::string>() << " (" << v.centers_needed << " centers)\n";
      emit(g, j, text.str());
      return v.feasible() ? 0 : kExitInfeasible;
    }
    if (*solve_cmd) {
      const auto inst = load_instance(input);
      const auto balls = balls_of(inst);
      const int k = k_or(inst, k_override);
      const bool planar = inst.dimension == 2;
      if (alg == "disks" && !planar) throw InputError("--alg disks needs planar disks");
      const auto sol = (alg == "disks" || (alg == "auto" && planar))
                           ? solve_disks(balls, k)
                           : solve_balls_dd(balls, k, epsilon);
      emit_solution(g, inst, sol);
      return 0;
    }
    if (*oned_cmd) {
      const auto inst = load_instance(input);
      emit_solution(g, inst, solve_1d(intervals_of(inst), k_or(inst, k_override)));
      return 0;
    }
    if (*size_cmd) {
      const auto inst = load_instance(input);
      emit_solution(g, inst, solve_size(balls_of(inst), k_or(inst, k_override), epsilon, swap));
      return 0;
    }
    if (*fptas_cmd) {
      const auto inst = load_instance(input);
      fcfg.mode = mode == "exact" ? KCenterMode::exact_candidates
                  : mode == "grid" ? KCenterMode::grid
                                   : KCenterMode::automatic;
      emit_solution(g, inst, solve_unit_disks_small_k(balls_of(inst), k_or(inst, k_override), fcfg));
      return 0;
    }
    if (*oracle_cmd) {
      auto inst = load_instance(input);
      if (k_override > 0) inst.k = k_override;
      Solution sol;
      if (method == "canonical") sol = brute_force_opt(inst);
      else if (method == "partition") sol = partition_opt(inst.objects, inst.k);
      else sol = grid_opt(inst.objects, inst.k, step);
      emit_solution(g, inst, sol);
      return 0;
    }
    if (*cand_cmd) {
      const auto inst = load_instance(input);
      const auto sets = canonical_candidates(balls_of(inst));
      std::ostringstream text;
      text << "points " << sets.points.size() << "\nradii " << sets.radii.size() << "\n";
      emit(g, to_json(sets), text.str());
      return 0;
    }
    if (*gen_disks) {
      Instance inst;
      inst.dimension = dim;
      inst.k = gen_k;
      if (unit) {
        dopt.min_radius = 1;
        dopt.max_radius = 1;
      }
      inst.objects = to_objects(random_balls(count, dim, g.seed, dopt));
      emit_instance(g, inst);
      return 0;
    }
    if (*gen_iv) {
      Instance inst;
      inst.dimension = 1;
      inst.k = gen_k;
      inst.objects = to_objects(random_intervals(count, g.seed, span, max_len));
      emit_instance(g, inst);
      return 0;
    }
    if (*gen_seg) {
      gp.graph = load_graph(graph);
      const auto gadget = gen_vc_segments(gp);
      Instance inst;
      inst.k = gadget.k;
      for (const auto& s : gadget.segments) inst.objects.emplace_back(s);
      emit_instance(g, inst);
      return 0;
    }
    if (*gen_vcd) {
      gp.graph = load_graph(graph);
      const auto gadget = gen_vc_disks(gp);
      Instance inst;
      inst.k = gadget.kappa;
      inst.objects = to_objects(gadget.disks);
      emit_instance(g, inst);
      return 0;
    }
    if (*bench_cmd) {
      std::vector<BenchRow> rows(trials);
      for (std::size_t start = 0; start < trials; start += threads) {
        std::vector<std::future<BenchRow>> batch;
        for (std::size_t t = start; t < std::min(trials, start + threads); ++t)
          batch.push_back(std::async(std::launch::async, bench_one, count, gen_k, g.seed + t, epsilon));
        for (std::size_t t = 0; t < batch.size(); ++t) rows[start + t] = batch[t].get();
      }
      Json j;
      j["n"] = count;
      j["k"] = gen_k;
      j["trials"] = trials;
      std::vector<double> ratios;
      double worst = 0;
      double ms = 0;
      std::size_t size_over = 0;
      for (const auto& r : rows) {
        ratios.push_back(r.disks_ratio);
        worst = std::max(worst, r.disks_ratio);
        ms += r.disks_ms;
        if (r.size_ptas_centers > static_cast<std::size_t>(gen_k)) ++size_over;
      }
      std::sort(ratios.begin(), ratios.end());
      j["disks_ratio_median"] = ratios.empty() ? 0.0 : ratios[ratios.size() / 2];
      j["disks_ratio_max"] = worst;
      j["disks_mean_ms"] = trials ? ms / static_cast<double>(trials) : 0.0;
      j["size_ptas_runs_above_k"] = size_over;
      std::ostringstream text;
      text << "median ratio " << j["disks_ratio_median"].get<double>() << ", max " << worst << "\n";
      emit(g, j, text.str());
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
