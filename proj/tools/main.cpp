#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "segdepth/bounds.hpp"
#include "segdepth/errors.hpp"
#include "segdepth/campaign.hpp"
#include "segdepth/hull.hpp"
#include "segdepth/io.hpp"
#include "segdepth/lift.hpp"
#include "segdepth/predicates.hpp"

using namespace segdepth;

namespace {

// Exit taxonomy: 0 ok, 1 usage, 2 input/degeneracy, 3 theorem violation
// (a bug somewhere), 4 conjecture violation (a genuine finding).
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitTheorem = 3;
constexpr int kExitConjecture = 4;

GenKind kind_from_flag(const std::string& name) {
  // short forms for the command line; the persisted names stay canonical
  if (name == "planar") return GenKind::random_planar;
  if (name == "lifted") return GenKind::lifted_random;
  if (name == "sphere") return GenKind::sphere_convex;
  if (name == "construction") return GenKind::paper_construction;
  return gen_kind_from_name(name);
}

const std::vector<std::string> kKindNames = {
    "planar", "lifted", "sphere", "construction",
    "random-planar", "lifted-random", "sphere-convex", "paper-construction"};

void emit(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    write_text_file(path, text);
}

/// Loads a set for the 3D commands; planar input rides the lifting
/// correspondence (circular depth of the source pair = segment depth of the
/// lifted pair).
PointSet load_spatial(const std::string& path) {
  LoadedSet loaded = read_point_set(path);
  if (loaded.set.dimension() == 2) {
    std::cerr << path << ": planar set lifted to the paraboloid\n";
    return lift_set(loaded.set).lifted;
  }
  return loaded.set;
}

struct GenArgs {
  std::string kind = "lifted";
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  std::int64_t grid = 1'000'000;
  std::int64_t den = 1'000'000;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  GenSpec spec;
  spec.kind = kind_from_flag(a.kind);
  if (a.n > 0 && a.m > 0) {
    std::cerr << "give --n or --m, not both\n";
    return kExitUsage;
  }
  spec.count = a.n > 0 ? a.n : a.m;
  if (spec.count <= 0) {
    std::cerr << "a positive --n (or --m for the construction) is required\n";
    return kExitUsage;
  }
  spec.seed = a.seed;
  spec.grid = a.grid;
  spec.perturb_den = a.den;
  PointSet set = generate(spec);

  std::string status = "n=" + std::to_string(set.size());
  status += set.position_check().general ? " general-position" : " degenerate";
  if (set.dimension() == 3) {
    status += check_convex_position(set).convex ? " convex-position" : " non-convex";
  }
  const std::string doc = point_set_to_json(set, spec);
  if (a.out.empty()) {
    std::cout << doc;
    std::cerr << status << "\n";
  } else {
    write_text_file(a.out, doc);
    std::cout << status << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string file;
  std::string json_out;
  std::string text_out;
};

int cmd_verify(const VerifyArgs& a) {
  PointSet set = load_spatial(a.file);
  BoundReport report = verify_set(set);
  report.set_hash = set_hash(set);
  if (!a.json_out.empty()) write_text_file(a.json_out, report_to_json(report));
  if (!a.text_out.empty()) write_text_file(a.text_out, report.to_text());
  if (a.json_out.empty() && a.text_out.empty()) std::cout << report.to_text();
  if (report.any_theorem_violation()) return kExitTheorem;
  if (report.any_conjecture_violation()) return kExitConjecture;
  return kExitOk;
}

struct DepthArgs {
  std::string file;
  std::string pairs = "all";
  std::string algorithm = "sweep";
  std::string out;
};

int cmd_depth(const DepthArgs& a) {
  PointSet set = load_spatial(a.file);
  const int n = set.size();

  std::vector<std::pair<int, int>> wanted;
  if (a.pairs == "all") {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) wanted.emplace_back(p, q);
  } else {
    int p = -1, q = -1;
    char comma = 0;
    std::istringstream in(a.pairs);
    if (!(in >> p >> comma >> q) || comma != ',' || !in.eof()) {
      std::cerr << "--pairs takes 'all' or 'i,j'\n";
      return kExitUsage;
    }
    if (p > q) std::swap(p, q);
    if (p < 0 || q >= n || p == q) {
      std::cerr << "pair " << p << "," << q << " out of range for n=" << n << "\n";
      return kExitInput;
    }
    wanted.emplace_back(p, q);
  }

  const bool run_sweep = a.algorithm == "sweep" || a.algorithm == "both";
  const bool run_brute = a.algorithm == "brute" || a.algorithm == "both";
  if (!run_sweep && !run_brute) {
    std::cerr << "--algorithm takes sweep, brute, or both\n";
    return kExitUsage;
  }

  using clock = std::chrono::steady_clock;
  AllDepths result;
  result.records.reserve(wanted.size());
  double sweep_s = 0, brute_s = 0;
  {
    const auto t0 = clock::now();
    if (run_sweep)
      for (auto [p, q] : wanted) result.records.push_back(segment_depth_sweep(set, p, q));
    sweep_s = std::chrono::duration<double>(clock::now() - t0).count();
  }
  if (run_brute) {
    const auto t0 = clock::now();
    std::vector<DepthRecord> brute;
    brute.reserve(wanted.size());
    for (auto [p, q] : wanted) brute.push_back(segment_depth_bruteforce(set, p, q));
    brute_s = std::chrono::duration<double>(clock::now() - t0).count();
    if (!run_sweep) {
      result.records = std::move(brute);
    } else {
      for (std::size_t i = 0; i < wanted.size(); ++i) {
        if (result.records[i].depth != brute[i].depth) {
          std::cerr << "depth mismatch at pair " << result.records[i].p << ","
                    << result.records[i].q << ": sweep " << result.records[i].depth
                    << " vs brute " << brute[i].depth << "\n";
          return kExitTheorem;  // the two oracles disagreeing is a bug, full stop
        }
      }
      std::cerr << "sweep " << sweep_s << "s, brute " << brute_s
                << "s, depths agree on " << wanted.size() << " pairs\n";
    }
  }
  emit(a.out, depth_records_csv(result));
  return kExitOk;
}

struct FileOut {
  std::string file;
  std::string out;
};

int cmd_facets(const FileOut& a) {
  PointSet set = load_spatial(a.file);
  emit(a.out, facet_histogram_csv(build_facet_histogram(set)));
  return kExitOk;
}

int cmd_hull(const FileOut& a) {
  PointSet set = load_spatial(a.file);
  emit(a.out, convex_hull_3d(set).to_text());
  return kExitOk;
}

struct CampaignArgs {
  std::string kind = "lifted";
  int trials = 100;
  int n_lo = 8;
  int n_hi = 24;
  std::uint64_t seed = 0;
  std::int64_t grid = 1'000'000;
  std::int64_t den = 1'000'000;
  std::string journal;
  std::string out_dir;
  bool stop_on_finding = false;
};

int cmd_campaign(const CampaignArgs& a) {
  CampaignSpec spec;
  spec.kind = kind_from_flag(a.kind);
  spec.trials = a.trials;
  spec.n_lo = a.n_lo;
  spec.n_hi = a.n_hi;
  spec.base_seed = a.seed;
  spec.grid = a.grid;
  spec.perturb_den = a.den;
  spec.journal_path = a.journal;
  spec.out_dir = a.out_dir;
  spec.stop_on_finding = a.stop_on_finding;
  CampaignResult r = run_campaign(spec);
  std::cout << r.to_text();
  std::cerr << "wall time " << r.wall_seconds << "s\n";
  if (r.theorem_violations > 0) return kExitTheorem;
  if (r.conjecture_violations > 0) return kExitConjecture;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("SEGDEPTH_THREADS")) {
    const int t = std::atoi(threads);
    if (t > 0) omp_set_num_threads(t);
  }

  CLI::App app{"exact segment-depth and j-facet toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* c_gen = app.add_subcommand("gen", "generate a point set");
  c_gen->add_option("--kind", gen.kind, "generator kind")
      ->check(CLI::IsMember(kKindNames));
  c_gen->add_option("--n", gen.n, "number of points");
  c_gen->add_option("--m", gen.m, "arc length for the construction (n = 4m)");
  c_gen->add_option("--seed", gen.seed, "random seed");
  c_gen->add_option("--grid", gen.grid, "coordinate bound / grid denominator");
  c_gen->add_option("--den", gen.den, "construction grid denominator");
  c_gen->add_option("-o,--out", gen.out, "output file (default: stdout)");

  VerifyArgs verify;
  CLI::App* c_verify = app.add_subcommand("verify", "audit a set against every bound");
  c_verify->add_option("file", verify.file, "point-set JSON")->required();
  c_verify->add_option("--json", verify.json_out, "write the JSON report here");
  c_verify->add_option("--text", verify.text_out, "write the text report here");

  DepthArgs depth;
  CLI::App* c_depth = app.add_subcommand("depth", "per-pair segment depth");
  c_depth->add_option("file", depth.file, "point-set JSON")->required();
  c_depth->add_option("--pairs", depth.pairs, "all (default) or i,j");
  c_depth->add_option("--algorithm", depth.algorithm, "sweep (default), brute, or both")
      ->check(CLI::IsMember({"sweep", "brute", "both"}));
  c_depth->add_option("-o,--out", depth.out, "CSV file (default: stdout)");

  FileOut facets;
  CLI::App* c_facets = app.add_subcommand("facets", "j-facet histogram");
  c_facets->add_option("file", facets.file, "point-set JSON")->required();
  c_facets->add_option("-o,--out", facets.out, "CSV file (default: stdout)");

  FileOut hull;
  CLI::App* c_hull = app.add_subcommand("hull", "convex hull graph");
  c_hull->add_option("file", hull.file, "point-set JSON")->required();
  c_hull->add_option("-o,--out", hull.out, "text file (default: stdout)");

  CampaignArgs campaign;
  CLI::App* c_campaign = app.add_subcommand("campaign", "seeded falsification sweep");
  c_campaign->add_option("--kind", campaign.kind, "generator kind")
      ->check(CLI::IsMember(kKindNames));
  c_campaign->add_option("--trials", campaign.trials, "trial count");
  c_campaign->add_option("--n-lo", campaign.n_lo, "smallest size (m for the construction)");
  c_campaign->add_option("--n-hi", campaign.n_hi, "largest size, inclusive");
  c_campaign->add_option("--seed", campaign.seed, "base seed");
  c_campaign->add_option("--grid", campaign.grid, "coordinate grid denominator");
  c_campaign->add_option("--den", campaign.den, "construction grid denominator");
  c_campaign->add_option("--journal", campaign.journal, "append-only trial journal");
  c_campaign->add_option("--out-dir", campaign.out_dir, "where violation instances go");
  c_campaign->add_flag("--stop-on-finding", campaign.stop_on_finding,
                       "stop launching trials after a conjecture violation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_gen->parsed()) return cmd_gen(gen);
    if (c_verify->parsed()) return cmd_verify(verify);
    if (c_depth->parsed()) return cmd_depth(depth);
    if (c_facets->parsed()) return cmd_facets(facets);
    if (c_hull->parsed()) return cmd_hull(hull);
    if (c_campaign->parsed()) return cmd_campaign(campaign);
  } catch (const GeomError& e) {
    std::cerr << e.what();
    if (!e.witness().empty()) {
      std::cerr << " (witness:";
      for (int i : e.witness()) std::cerr << " " << i;
      std::cerr << ")";
    }
    std::cerr << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
