// aqpath: command-line front end.
// Exit status: 0 success, 1 verification failure or refuted claim,
// 2 usage or resource-guard error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "aqpath/acceptance.hpp"
#include "aqpath/construct.hpp"
#include "aqpath/cube.hpp"
#include "aqpath/flow.hpp"
#include "aqpath/graph.hpp"
#include "aqpath/oracle.hpp"
#include "aqpath/parallel.hpp"
#include "aqpath/verify.hpp"

using namespace aqpath;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

int cmd_gen(int n, const std::string& out_path) {
  const AugmentedCube cube(n);
  if (out_path.empty()) {
    write_cube_text(std::cout, cube);
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    write_cube_text(out, cube);
  }
  return kOk;
}

int cmd_neighbors(int n, const std::string& v) {
  const AugmentedCube cube(n);
  const Vertex x = cube.parse(v);
  for (const auto& m : cube.masks()) {
    std::cout << cube.format(x ^ m.word) << ' ' << m.label() << '\n';
  }
  return kOk;
}

int cmd_construct(int n, const std::string& triple, bool trace) {
  const AugmentedCube cube(n);
  const Triple d = parse_triple(cube, triple);
  const auto f = construct(n, d);
  const auto verdict = check_family(CubeView::whole(cube), d, f.paths);
  write_family_text(std::cout, cube, d, f.paths,
                    trace ? f.trace_lines() : std::vector<std::string>{});
  std::cout << render(verdict) << '\n';
  return accepted(verdict) ? kOk : kRefuted;
}

int cmd_verify(int n, const std::string& path) {
  const AugmentedCube cube(n);
  auto in = open_input(path);
  const auto text = read_family_text(in, n);
  if (text.wrong_graph) {
    std::cout << "VIOLATION WrongGraph " << *text.wrong_graph << '\n';
    return kRefuted;
  }
  const auto verdict =
      check_family(CubeView::whole(cube), text.terminals, text.paths);
  std::cout << render(verdict) << '\n';
  return accepted(verdict) ? kOk : kRefuted;
}

std::unique_ptr<Graph> load_graph(const std::string& path) {
  auto in = open_input(path);
  return read_graph_text(in);
}

int cmd_oracle(const std::string& graph_path, int n, const std::string& triple,
               std::uint64_t budget) {
  std::unique_ptr<Graph> g;
  if (!graph_path.empty()) {
    g = load_graph(graph_path);
  } else {
    g = std::make_unique<CubeView>(CubeView::whole(AugmentedCube(n)));
  }
  const AugmentedCube labels(g->label_bits());
  const Triple d = parse_triple(labels, triple);
  const auto r = max_dpaths(*g, d, budget);
  const std::string t = format_triple(labels, d);
  if (!r.exact()) {
    std::cout << "ORACLE " << t << " budget-exhausted best=" << r.count
              << " upper=" << r.upper << " nodes=" << r.nodes << '\n';
    return kUsage;
  }
  std::cout << "ORACLE " << t << ' ' << r.count << " profile=" << r.profile.a
            << ',' << r.profile.b << ',' << r.profile.c << '\n';
  return kOk;
}

int cmd_pi3(const std::string& graph_path, int n, const std::string& mode,
            std::optional<std::uint64_t> seed, std::size_t count,
            std::uint64_t budget, int jobs) {
  std::unique_ptr<Graph> g;
  std::string name;
  if (!graph_path.empty()) {
    g = load_graph(graph_path);
    name = graph_path;
  } else {
    g = std::make_unique<CubeView>(CubeView::whole(AugmentedCube(n)));
    name = "AQ_" + std::to_string(n);
  }
  Pi3Options opt;
  opt.budget = budget;
  opt.jobs = jobs;
  if (mode == "sampled") {
    if (!seed) throw UsageError("sampled mode needs --seed");
    if (count == 0) throw UsageError("sampled mode needs --count >= 1");
    opt.mode = Pi3Options::Mode::Sampled;
    opt.seed = *seed;
    opt.count = count;
  }
  const auto r = pi3_exact(*g, opt);
  const AugmentedCube labels(g->label_bits());
  if (r.status != OracleStatus::Exact) {
    std::cout << "PI3 " << name << " budget-exhausted "
              << format_triple(labels, r.argmin) << '\n';
    return kUsage;
  }
  std::cout << "PI3 " << name << ' ' << r.value << ' '
            << format_triple(labels, r.argmin) << '\n';
  return kOk;
}

int cmd_bounds(int n) {
  if (n < 4) throw InvalidArgument("bounds needs n >= 4");
  std::cout << "BOUND " << n << ' ' << lemma6_bound(n) << '\n';
  std::cout << "TARGET " << n << ' ' << target_count(n) << '\n';
  return lemma6_bound(n) == target_count(n) ? kOk : kRefuted;
}

int cmd_witness(int n, bool printed) {
  const AugmentedCube cube(n);
  const auto w = witness_triple(n, printed);
  std::cout << "WITNESS " << format_triple(cube, w.d) << '\n';
  std::cout << "COMMON " << w.common.size();
  for (Vertex v : w.common) std::cout << ' ' << cube.format(v);
  std::cout << '\n';
  for (const auto& a : w.certificate) {
    std::cout << "ADJ " << cube.format(a.terminal) << ' '
              << cube.format(a.neighbor) << ' '
              << (a.adjacent ? a.mask : std::string("-")) << '\n';
  }
  if (!w.holds) {
    std::cout << "DEVIATION z with an uncomplemented suffix shares "
              << w.common.size()
              << " neighbours; the complemented suffix restores all four\n";
    return kRefuted;
  }
  return kOk;
}

int cmd_report(int nmax, int jobs, std::uint64_t seed) {
  AcceptanceOptions opt;
  opt.nmax = nmax;
  opt.jobs = jobs;
  opt.seed = seed;
  int pass = 0, fail = 0, skip = 0;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const auto r = run_criterion(id, opt);
    std::cout << format_result(r) << '\n' << std::flush;
    pass += r.outcome == Outcome::Pass;
    fail += r.outcome == Outcome::Fail;
    skip += r.outcome == Outcome::Skip;
  }
  std::cout << "SUMMARY pass=" << pass << " fail=" << fail << " skip=" << skip
            << '\n';
  return fail == 0 ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disjoint D-paths in augmented cubes"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = default_jobs();
  app.add_option("--jobs", jobs, "worker threads (default AQPATH_JOBS)")
      ->check(CLI::PositiveNumber);

  int n = 0;
  std::string out_path, vertex, triple, family, graph, mode = "exhaustive";
  bool trace = false, printed = false;
  std::uint64_t budget = kDefaultNodeBudget;
  std::optional<std::uint64_t> seed;
  std::size_t count = 0;
  int nmax = 6;
  std::uint64_t report_seed = AcceptanceOptions{}.seed;

  auto* gen = app.add_subcommand("gen", "emit the graph text of AQ_n");
  gen->add_option("--n", n)->required();
  gen->add_option("--out", out_path);

  auto* nb = app.add_subcommand("neighbors", "list neighbours with masks");
  nb->add_option("--n", n)->required();
  nb->add_option("--v", vertex)->required();

  auto* con = app.add_subcommand("construct", "build and verify a family");
  con->add_option("--n", n)->required();
  con->add_option("--triple", triple)->required();
  con->add_flag("--trace", trace);

  auto* ver = app.add_subcommand("verify", "referee a family file");
  ver->add_option("--n", n)->required();
  ver->add_option("--family", family)->required();

  auto* ora = app.add_subcommand("oracle", "exact pi_G(D)");
  auto* og = ora->add_option("--graph", graph);
  auto* on = ora->add_option("--n", n);
  og->excludes(on);
  ora->add_option("--triple", triple)->required();
  ora->add_option("--budget", budget);

  auto* pi3 = app.add_subcommand("pi3", "pi_3 by exhaustive or sampled sweep");
  auto* pg = pi3->add_option("--graph", graph);
  auto* pn = pi3->add_option("--n", n);
  pg->excludes(pn);
  pi3->add_option("--mode", mode)
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  pi3->add_option("--seed", seed);
  pi3->add_option("--count", count);
  pi3->add_option("--budget", budget);

  auto* bnd = app.add_subcommand("bounds", "counting bound and target count");
  bnd->add_option("--n", n)->required();

  auto* wit = app.add_subcommand("witness", "four-common-neighbour triple");
  wit->add_option("--n", n)->required();
  wit->add_flag("--printed-variant", printed);

  auto* rep = app.add_subcommand("report", "run the acceptance criteria");
  rep->add_option("--nmax", nmax);
  rep->add_option("--seed", report_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(n, out_path);
    if (*nb) return cmd_neighbors(n, vertex);
    if (*con) return cmd_construct(n, triple, trace);
    if (*ver) return cmd_verify(n, family);
    if (*ora) {
      if (graph.empty() && n == 0) throw UsageError("oracle needs --graph or --n");
      return cmd_oracle(graph, n, triple, budget);
    }
    if (*pi3) {
      if (graph.empty() && n == 0) throw UsageError("pi3 needs --graph or --n");
      return cmd_pi3(graph, n, mode, seed, count, budget, jobs);
    }
    if (*bnd) return cmd_bounds(n);
    if (*wit) return cmd_witness(n, printed);
    if (*rep) return cmd_report(nmax, jobs, report_seed);
  } catch (const UsageError& e) {
    std::cerr << "aqpath: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "aqpath: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "aqpath: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "aqpath: " << e.what() << '\n';
    return kRefuted;
  }
  return kUsage;
}
