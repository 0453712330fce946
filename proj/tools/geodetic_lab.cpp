// geodetic-lab: build flag graphs of finite planes, verify their claimed
// properties, analyze 2-cuts, and scan graph corpora for geodetic blocks.
//
// Exit codes: 0 success, 1 a verified claim failed or a counterexample was
// found, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "geodetic/census.hpp"
#include "geodetic/cut_analysis.hpp"
#include "geodetic/enumerate.hpp"
#include "geodetic/export.hpp"
#include "geodetic/flag_graph.hpp"
#include "geodetic/graph6.hpp"
#include "geodetic/parallel.hpp"

namespace {

using namespace geodetic;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string target;     // construct target
  std::string kind;       // affine | projective
  int q = 0;
  std::string out;
  std::string format = "g6";
  std::string in;
  std::string checker = "both";
  bool json = false;
  bool all_roots = false;
  int x = -1, y = -1;
  int enumerate_n = 0;
  std::string predicate;
  int min_degree = 3;
  int jobs = 0;
  int max_n = 10;
};

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

PlaneKind parse_kind(const std::string& kind) {
  if (kind == "affine") return PlaneKind::affine;
  if (kind == "projective") return PlaneKind::projective;
  throw CLI::ValidationError("--kind must be affine or projective");
}

int cmd_construct(const Options& opt) {
  IncidenceStructure s =
      parse_kind(opt.kind) == PlaneKind::affine ? affine_plane(opt.q) : projective_plane(opt.q);
  std::ofstream file;
  std::ostream& out = open_out(file, opt.out);
  if (opt.target == "plane") {
    if (opt.format != "json") {
      std::cerr << "construct plane supports only --format json\n";
      return kExitUsage;
    }
    out << plane_to_json(s).dump(2) << "\n";
    return kExitOk;
  }
  LabeledGraph lg = opt.target == "levi" ? levi_graph(s) : flag_graph(s);
  if (opt.format == "g6")
    out << emit_graph6(lg.graph) << "\n";
  else if (opt.format == "dot")
    out << to_dot(lg);
  else
    out << labeled_graph_to_json(lg).dump(2) << "\n";
  return kExitOk;
}

int cmd_check(const Options& opt) {
  Graph6FileSource source(opt.in);
  json lines = json::array();
  bool disagreement = false;
  int index = 0;
  while (auto sg = source.next()) {
    const Graph& g = sg->graph;
    json rec;
    rec["index"] = index++;
    rec["n"] = g.vertex_count();
    rec["m"] = g.edge_count();
    if (!is_connected(g)) {
      rec["error"] = "disconnected";
      lines.push_back(std::move(rec));
      continue;
    }
    std::optional<bool> sigma_verdict, vertical_verdict;
    if (opt.checker == "sigma" || opt.checker == "both") {
      GeodeticVerdict v = is_geodetic_sigma(g);
      sigma_verdict = v.geodetic;
      rec["sigma"] = verdict_to_json(v);
    }
    if (opt.checker == "vertical" || opt.checker == "both") {
      vertical_verdict = is_geodetic_vertical(g);
      rec["vertical"] = *vertical_verdict;
    }
    if (sigma_verdict && vertical_verdict && *sigma_verdict != *vertical_verdict) {
      rec["checkers_agree"] = false;
      disagreement = true;
    } else if (sigma_verdict && vertical_verdict) {
      rec["checkers_agree"] = true;
    }
    rec["geodetic"] = sigma_verdict.value_or(vertical_verdict.value_or(false));
    GraphMetrics m = metrics(g);
    rec["diameter"] = m.diameter;
    rec["radius"] = m.radius;
    rec["girth"] = m.girth == kInf ? json("infinity") : json(m.girth);
    rec["min_degree"] = m.min_degree;
    rec["connectivity"] = m.connectivity;
    lines.push_back(std::move(rec));
  }
  if (opt.json) {
    std::cout << lines.dump(2) << "\n";
  } else {
    for (const auto& rec : lines) {
      std::cout << "graph " << rec["index"] << ": n=" << rec["n"] << " m=" << rec["m"];
      if (rec.contains("error")) {
        std::cout << " error=" << rec["error"].get<std::string>() << "\n";
        continue;
      }
      std::cout << " geodetic=" << (rec["geodetic"].get<bool>() ? "yes" : "no")
                << " diameter=" << rec["diameter"] << " girth=" << rec["girth"]
                << " connectivity=" << rec["connectivity"];
      if (rec.contains("checkers_agree"))
        std::cout << " checkers=" << (rec["checkers_agree"].get<bool>() ? "agree" : "DISAGREE");
      std::cout << "\n";
    }
  }
  if (source.skipped() > 0)
    std::cerr << "skipped " << source.skipped() << " malformed line(s)\n";
  return disagreement ? kExitClaimFailure : kExitOk;
}

int cmd_verify_claims(const Options& opt) {
  ClaimReport r = verify_flag_claims(parse_kind(opt.kind), opt.q, opt.all_roots);
  if (opt.json) {
    std::cout << claim_report_to_json(r).dump(2) << "\n";
  } else {
    std::cout << "Flag(" << opt.kind << ", q=" << opt.q << ")\n";
    for (const auto& c : r.checks)
      std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": expected "
                << c.expected << ", measured " << c.measured << "\n";
  }
  return r.all_pass() ? kExitOk : kExitClaimFailure;
}

int cmd_analyze_cut(const Options& opt) {
  Graph6FileSource source(opt.in);
  auto sg = source.next();
  if (!sg) {
    std::cerr << "no graph in input\n";
    return kExitUsage;
  }
  const Graph& g = sg->graph;
  int x = opt.x, y = opt.y;
  if (x < 0 || y < 0) {
    auto cut = min_distance_two_cut(g);
    if (!cut) {
      if (opt.json)
        std::cout << R"({"two_cut": null})" << "\n";
      else
        std::cout << "no 2-cut (graph is 3-connected or too small)\n";
      return kExitOk;
    }
    x = cut->x;
    y = cut->y;
  }
  CutProfile profile = cut_profile(g, x, y);
  LemmaCheckReport report = check_cut_lemmas(g, profile);
  if (opt.json) {
    json j;
    j["profile"] = cut_profile_to_json(profile);
    j["lemmas"] = lemma_report_to_json(report);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cut {" << x << "," << y << "} with ell=" << profile.ell
              << (profile.non_geodetic_basis ? " (non-geodetic basis)" : "") << "\n";
    std::cout << diagonal_grid(profile);
    for (const auto& c : report.checks) {
      std::cout << "  " << c.lemma << ": "
                << (c.status == LemmaStatus::holds ? "holds" : "VIOLATED");
      if (c.status != LemmaStatus::holds) std::cout << " (" << c.witness << ")";
      std::cout << "\n";
    }
  }
  return kExitOk;
}

std::unique_ptr<GraphSource> make_scan_source(const Options& opt) {
  if (!opt.in.empty()) return std::make_unique<Graph6FileSource>(opt.in);
  EnumerateConstraints cons;
  cons.connected = true;
  std::vector<SourcedGraph> items;
  for (const Graph& g : enumerate_graphs(opt.enumerate_n, cons))
    items.push_back({g, "enumerated:n=" + std::to_string(opt.enumerate_n)});
  return std::make_unique<VectorSource>(std::move(items));
}

int cmd_scan(const Options& opt) {
  int jobs = opt.jobs > 0 ? opt.jobs
                          : std::max(1u, std::thread::hardware_concurrency());
  std::unique_ptr<GraphSource> source = make_scan_source(opt);

  if (opt.predicate == "theorem1") {
    // one JSON line per graph, then a summary on stderr
    struct Rec {
      json j;
      bool counterexample = false;
    };
    int64_t counterexamples = 0, seen = 0;
    scan_ordered<SourcedGraph, Rec>(
        [&]() { return source->next(); },
        [&](const SourcedGraph& sg) {
          Rec rec;
          const Graph& g = sg.graph;
          if (!is_connected(g)) {
            rec.j["provenance"] = sg.provenance;
            rec.j["error"] = "disconnected";
            return rec;
          }
          GraphMetrics m = metrics(g);
          bool geo = is_geodetic_sigma(g).geodetic;
          rec.j["canonical"] = canonical_graph6(g);
          rec.j["n"] = g.vertex_count();
          rec.j["connectivity"] = m.connectivity;
          rec.j["min_degree"] = m.min_degree;
          rec.j["diameter"] = m.diameter;
          rec.j["girth"] = m.girth == kInf ? json("infinity") : json(m.girth);
          rec.j["geodetic"] = geo;
          rec.counterexample = geo && m.connectivity == 2 && m.min_degree >= 3;
          if (rec.counterexample) rec.j["counterexample"] = true;
          return rec;
        },
        [&](Rec rec) {
          ++seen;
          if (rec.counterexample) ++counterexamples;
          std::cout << rec.j.dump() << "\n";
        },
        jobs);
    std::cerr << "scanned " << seen << " graph(s), " << counterexamples
              << " counterexample(s), " << source->skipped() << " skipped\n";
    return counterexamples > 0 ? kExitClaimFailure : kExitOk;
  }

  if (opt.predicate == "cubic-geodetic-census") {
    CubicCensus census = cubic_geodetic_census(*source, jobs);
    for (const auto& rec : census.records)
      std::cout << census_record_to_json(rec).dump() << "\n";
    std::cerr << "scanned " << census.scanned << " graph(s), "
              << census.skipped_ineligible << " ineligible, " << source->skipped()
              << " malformed\n";
    return kExitOk;
  }

  if (opt.predicate == "diameter-girth") {
    DiameterGirthSurvey survey = diameter_girth_survey(*source, opt.min_degree, jobs);
    std::cout << "diameter\tgirth\tcount\n";
    for (const auto& [key, count] : survey.histogram)
      std::cout << key.first << "\t" << key.second << "\t" << count << "\n";
    std::cerr << "scanned " << survey.scanned << ", qualifying " << survey.qualifying
              << ", max diameter " << survey.max_diameter << "\n";
    for (const auto& g6 : survey.max_diameter_exemplars)
      std::cerr << "exemplar " << g6 << "\n";
    return kExitOk;
  }
  std::cerr << "unknown predicate: " << opt.predicate << "\n";
  return kExitUsage;
}

int cmd_census(const Options& opt) {
  if (opt.max_n > 10) {
    std::cerr << "census --max-n is limited to 10 (the internal enumerator cap); "
                 "scan an ingested corpus for larger orders\n";
    return kExitUsage;
  }
  std::vector<SourcedGraph> items;
  for (int n = 4; n <= opt.max_n; n += 2) {
    EnumerateConstraints cons;
    cons.connected = true;
    cons.regular_degree = 3;
    for (const Graph& g : enumerate_graphs(n, cons))
      items.push_back({g, "enumerated:n=" + std::to_string(n)});
  }
  VectorSource source(std::move(items));
  CubicCensus census = cubic_geodetic_census(source);
  for (const auto& rec : census.records)
    std::cout << census_record_to_json(rec).dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodetic-lab: geodetic graphs, flag graphs of finite planes, and scans"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* construct = app.add_subcommand("construct", "build a plane, Levi or flag graph");
  construct->add_option("target", opt.target, "plane | levi | flag")
      ->required()
      ->check(CLI::IsMember({"plane", "levi", "flag"}));
  construct->add_option("--kind", opt.kind, "affine | projective")
      ->required()
      ->check(CLI::IsMember({"affine", "projective"}));
  construct->add_option("--q", opt.q, "plane order (prime power)")->required();
  construct->add_option("--out", opt.out, "output path (default stdout)");
  construct->add_option("--format", opt.format, "g6 | dot | json")
      ->check(CLI::IsMember({"g6", "dot", "json"}));
  construct->callback([&] {
    if (opt.target == "plane" && construct->count("--format") == 0) opt.format = "json";
  });

  CLI::App* check = app.add_subcommand("check", "geodeticity and metrics of graph6 input");
  check->add_option("--in", opt.in, "graph6 file")->required();
  check->add_option("--checker", opt.checker, "sigma | vertical | both")
      ->check(CLI::IsMember({"sigma", "vertical", "both"}));
  check->add_flag("--json", opt.json, "JSON output");

  CLI::App* verify = app.add_subcommand("verify-claims", "check the flag-graph claims");
  verify->add_option("--kind", opt.kind)->required()->check(
      CLI::IsMember({"affine", "projective"}));
  verify->add_option("--q", opt.q)->required();
  verify->add_flag("--all-roots", opt.all_roots, "check profiles on every root");
  verify->add_flag("--json", opt.json, "JSON output");

  CLI::App* analyze = app.add_subcommand("analyze-cut", "2-cut profile and lemma checks");
  analyze->add_option("--in", opt.in, "graph6 file")->required();
  analyze->add_option("--x", opt.x, "first cut vertex");
  analyze->add_option("--y", opt.y, "second cut vertex");
  analyze->add_flag("--json", opt.json, "JSON output");

  CLI::App* scan = app.add_subcommand("scan", "run a predicate over a corpus");
  scan->add_option("--in", opt.in, "graph6 file");
  scan->add_option("--enumerate", opt.enumerate_n, "enumerate connected graphs on N vertices");
  scan->add_option("--predicate", opt.predicate,
                   "theorem1 | cubic-geodetic-census | diameter-girth")
      ->required();
  scan->add_option("--min-degree", opt.min_degree, "degree threshold for diameter-girth");
  scan->add_option("--jobs", opt.jobs, "worker threads (default: hardware)");

  CLI::App* census = app.add_subcommand("census", "cubic geodetic census via the enumerator");
  census->add_option("--max-n", opt.max_n, "largest order to enumerate (<= 10)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(opt);
    if (check->parsed()) return cmd_check(opt);
    if (verify->parsed()) return cmd_verify_claims(opt);
    if (analyze->parsed()) return cmd_analyze_cut(opt);
    if (scan->parsed()) {
      if (opt.in.empty() == (opt.enumerate_n == 0)) {
        std::cerr << "scan needs exactly one of --in or --enumerate\n";
        return kExitUsage;
      }
      return cmd_scan(opt);
    }
    if (census->parsed()) return cmd_census(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
