// Command-line front end: hull, diameter, generators, zonotope, bounds,
// search2d, prune, verify.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latdiam/bounds.hpp"
#include "latdiam/graph.hpp"
#include "latdiam/io.hpp"
#include "latdiam/lemmas.hpp"
#include "latdiam/search.hpp"
#include "latdiam/zonotope.hpp"

using namespace latdiam;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

struct Streams {
  std::string input, output;
  std::ifstream fin;
  std::ofstream fout;

  std::istream& in() {
    if (input.empty() || input == "-") return std::cin;
    fin.open(input);
    if (!fin) throw std::runtime_error("cannot open input file '" + input + "'");
    return fin;
  }

  std::ostream& out() {
    if (output.empty() || output == "-") return std::cout;
    if (!fout.is_open()) {
      fout.open(output);
      if (!fout) throw std::runtime_error("cannot open output file '" + output + "'");
    }
    return fout;
  }
};

void add_io(CLI::App* cmd, Streams& io, bool with_input = true) {
  if (with_input) cmd->add_option("-i,--input", io.input, "Input file (default stdin)");
  cmd->add_option("-o,--output", io.output, "Output file (default stdout)");
}

LatticePolytope read_polytope(std::istream& in) {
  const auto ps = read_points(in);
  return relative_convex_hull(ps.points, ps.d, ps.k);
}

std::uint64_t seed_or_env(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  if (const char* env = std::getenv("LATDIAM_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("LATDIAM_SEED is not an unsigned integer: '") + env + "'");
  }
  throw std::invalid_argument("no seed: pass --seed or set LATDIAM_SEED");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice polytope diameters: hulls, graph diameters, zonotopes, bounds and searches"};
  app.require_subcommand(1);
  Streams io;

  auto* hull = app.add_subcommand("hull", "Point file to polytope file (vertices only)");
  add_io(hull, io);

  auto* diam = app.add_subcommand("diameter", "Graph diameter and a witness pair of a polytope file");
  unsigned diam_workers = 1;
  diam->add_option("--workers", diam_workers, "Threads")->check(CLI::Range(1u, 256u));
  add_io(diam, io);

  auto* gens = app.add_subcommand("generators", "Primitive generators of H1(d,p) as a generator file");
  int gen_dim = 0, gen_p = 0;
  gens->add_option("--dim", gen_dim, "Dimension")->required();
  gens->add_option("--p", gen_p, "1-norm bound")->required();
  add_io(gens, io, false);

  auto* zono = app.add_subcommand("zonotope", "Generator file to the zonotope's polytope file");
  add_io(zono, io);

  auto* bnds = app.add_subcommand("bounds", "JSON report of known bounds on delta(d,k)");
  int dmax = 0, kmax = 0;
  bnds->add_option("--dmax", dmax, "Largest d")->required();
  bnds->add_option("--kmax", kmax, "Largest k")->required();
  add_io(bnds, io, false);

  auto* s2d = app.add_subcommand("search2d", "Exact delta(2,k) with all maximizers as a certificate store");
  int s2d_k = 0;
  std::string strategy = "auto";
  double s2d_budget = 600;
  s2d->add_option("--k", s2d_k, "Box size")->required();
  s2d->add_option("--strategy", strategy, "auto, subsets or edges")
      ->check(CLI::IsMember({"auto", "subsets", "edges"}));
  s2d->add_option("--budget", s2d_budget, "Seconds");
  add_io(s2d, io, false);

  auto* prune = app.add_subcommand("prune", "Pruned search for a polytope of diameter >= target");
  int pr_dim = 0, pr_k = 0, pr_target = 0;
  double pr_budget = 60;
  std::uint64_t pr_nodes = UINT64_MAX;
  std::string resume, save_resume;
  prune->add_option("--dim", pr_dim, "Dimension")->required();
  prune->add_option("--k", pr_k, "Box size")->required();
  prune->add_option("--target", pr_target, "Diameter to reach")->required();
  prune->add_option("--budget", pr_budget, "Seconds");
  prune->add_option("--nodes", pr_nodes, "Node limit");
  prune->add_option("--resume", resume, "Digest file of already examined candidates");
  prune->add_option("--save-resume", save_resume, "Write examined digests here");
  add_io(prune, io, false);

  auto* verify = app.add_subcommand("verify", "Randomized lemma suite, JSON summary");
  std::string suite;
  std::size_t n = 1000;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  bool details = false;
  verify->add_option("--suite", suite, "lemma1, lemma2, lemma3, lemma4 or step")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", n, "Instances");
  verify->add_option("--seed", seed, "Seed (fallback LATDIAM_SEED)");
  verify->add_option("--workers", workers, "Threads")->check(CLI::Range(1u, 256u));
  verify->add_flag("--details", details, "Include every report");
  add_io(verify, io, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (hull->parsed()) {
      write_polytope(io.out(), read_polytope(io.in()));
    } else if (diam->parsed()) {
      const auto P = read_polytope(io.in());
      const auto r = diameter(P, diam_workers);
      auto& out = io.out();
      out << r.value << "\n# witness\n";
      for (auto i : {r.witness.first, r.witness.second}) {
        const auto& v = P.vertices[i];
        for (std::size_t c = 0; c < v.size(); ++c) out << (c ? " " : "") << v[c];
        out << '\n';
      }
    } else if (gens->parsed()) {
      write_generators(io.out(), primitive_generators(gen_dim, gen_p));
    } else if (zono->parsed()) {
      write_polytope(io.out(), zonotope_vertices(read_generators(io.in())));
    } else if (bnds->parsed()) {
      io.out() << to_json(bounds_report(dmax, kmax)).dump(2) << '\n';
    } else if (s2d->parsed()) {
      const auto st = strategy == "subsets" ? PlaneStrategy::Subsets
                      : strategy == "edges" ? PlaneStrategy::EdgeVectors
                                            : PlaneStrategy::Auto;
      const auto r = enumerate_max_diameter_2d(s2d_k, st, s2d_budget);
      auto& out = io.out();
      out << "# value " << r.value << "\n# maximizers " << r.maximizers.size() << "\n# polygons "
          << r.polygons_examined << '\n';
      write_certificates(out, r.maximizers);
    } else if (prune->parsed()) {
      std::unordered_set<std::string> seen;
      if (!resume.empty()) {
        std::ifstream rf(resume);
        if (!rf) throw std::runtime_error("cannot open resume file '" + resume + "'");
        seen = read_digests(rf);
      }
      const auto o = pruned_search(pr_dim, pr_k, pr_target, {pr_budget, pr_nodes}, resume.empty() ? nullptr : &seen);
      auto& out = io.out();
      out << "# " << describe(o, pr_dim, pr_k, pr_target) << '\n';
      out << "# status " << to_string(o.status) << "\n# nodes " << o.nodes << '\n';
      for (const auto& a : o.assumptions) out << "# assumption: " << a << '\n';
      if (o.certificate) write_certificates(out, {*o.certificate});
      if (!save_resume.empty()) {
        std::ofstream sf(save_resume);
        if (!sf) throw std::runtime_error("cannot open '" + save_resume + "'");
        write_digests(sf, o.examined);
      }
      if (o.status == SearchStatus::BudgetExceeded) return kBudget;
    } else if (verify->parsed()) {
      const auto s = run_suite(suite, n, seed_or_env(seed), workers);
      auto j = to_json(s);
      if (!details) {
        auto bad = nlohmann::ordered_json::array();
        for (const auto& r : s.reports)
          if (r.status == CheckStatus::Violated) bad.push_back(to_json(r));
        j["reports"] = std::move(bad);
      }
      io.out() << j.dump(2) << '\n';
      if (s.violated > 0) return kViolation;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "latdiam: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "latdiam: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
