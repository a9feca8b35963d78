// fiedler: command-line front end.
//
//   fiedler analyze  (-i FILE | FAMILY PARAMS...) [--format json|dot] [--strict|--relaxed]
//   fiedler game     [exact|simulate] (-i FILE | FAMILY...) --from S --to T [--k K]
//   fiedler hit      (-i FILE | FAMILY...) --target V [--target V ...]
//   fiedler check    (-i FILE | FAMILY...) [--path 0,1,2,...] [--strict|--relaxed]
//   fiedler gen      FAMILY PARAMS... [-o FILE] [--format edgelist|graph6]
//   fiedler enumerate --n N [--format code|graph6|edgelist]
//   fiedler survey   --n N [--csv FILE] [-o JSON] [--checkpoint FILE --resume]
//
// Exit codes: 0 ok, 1 property does not hold, 2 usage / input / solver error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fiedler/admissibility.hpp"
#include "fiedler/enumeration.hpp"
#include "fiedler/errors.hpp"
#include "fiedler/game.hpp"
#include "fiedler/generators.hpp"
#include "fiedler/hitting.hpp"
#include "fiedler/json_io.hpp"
#include "fiedler/spectral.hpp"

namespace {

using namespace fiedler;

constexpr std::uint64_t kDefaultSeed = 20240601;

enum Exit { kOk = 0, kPropertyFails = 1, kUsage = 2 };

struct Source {
  std::string input;
  std::vector<std::string> family;

  void attach(CLI::App* app) {
    auto* in = app->add_option("-i,--input", input, "edge-list or graph6 file ('-' for stdin)");
    auto* fam = app->add_option("graph", family, "graph family and parameters, e.g. P_10 or rose-on-path 9 3 12");
    in->excludes(fam);
  }

  Graph load() const {
    if (!input.empty()) return read_graph(input);
    if (family.empty()) throw CLI::RequiredError("an input graph (-i FILE or FAMILY PARAMS...)");
    return generate(parse_family(joined()));
  }

  std::string joined() const {
    std::string text = family.front();
    for (std::size_t i = 1; i < family.size(); ++i) text += ':' + family[i];
    return text;
  }

  static Graph read_graph(const std::string& path) {
    std::string text;
    if (path == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw Error("cannot open " + path);
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    const bool g6 = text.starts_with(">>graph6<<") || path.ends_with(".g6");
    if (g6) {
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
      return decode_graph6(text);
    }
    return parse_edge_list(text);
  }
};

struct Output {
  std::string path;

  void attach(CLI::App* app) { app->add_option("-o,--output", path, "output file (default stdout)"); }

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error("cannot write " + path);
  }
};

int default_parallelism() {
  if (const char* env = std::getenv("FIEDLER_PARALLELISM")) {
    try {
      const int p = std::stoi(env);
      if (p >= 1) return p;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct PropertyFlags {
  bool strict = false;
  bool relaxed = false;

  void attach(CLI::App* app) {
    auto* s = app->add_flag("--strict", strict, "exit 1 unless the strict extrema property holds");
    auto* r = app->add_flag("--relaxed", relaxed, "exit 1 unless the relaxed extrema property holds");
    s->excludes(r);
  }

  int exit_code(const ExtremaVerdict& v) const {
    if (strict && !v.strict) return kPropertyFails;
    if (relaxed && !v.relaxed) return kPropertyFails;
    return kOk;
  }
};

std::string quantized(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string to_dot(const Graph& g, const std::vector<double>& phi) {
  std::string out = "graph fiedler {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + ": " + quantized(phi[v]) + "\"];\n";
  }
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw CLI::ValidationError("--path", "bad vertex '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fiedler vectors of trees: eigenpairs, payoff game, hitting times, census"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fiedler 0.1.0");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "eigenpair, bounds and extrema verdict of a graph");
  Source analyze_src;
  Output analyze_out;
  PropertyFlags analyze_flags;
  std::string analyze_format = "json";
  analyze_src.attach(analyze);
  analyze_out.attach(analyze);
  analyze_flags.attach(analyze);
  analyze->add_option("--format", analyze_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  // game
  auto* game = app.add_subcommand("game", "payoff game: exact value or Monte-Carlo estimate");
  game->fallthrough();
  game->require_subcommand(0, 1);
  Source game_src;
  Output game_out;
  int game_from = -1, game_to = -1, game_k = 2;
  SimulationOptions sim;
  sim.seed = kDefaultSeed;
  sim.parallelism = default_parallelism();
  game_src.attach(game);
  game_out.attach(game);
  game->add_option("--from", game_from, "start vertex")->required();
  game->add_option("--to", game_to, "target vertex")->required();
  game->add_option("--k", game_k, "eigenpair index (1-based, default 2)");
  game->add_option("--samples", sim.samples, "Monte-Carlo samples")->check(CLI::PositiveNumber);
  game->add_option("--seed", sim.seed, "random seed");
  game->add_option("--max-steps", sim.max_steps, "step cap per sample")->check(CLI::PositiveNumber);
  game->add_option("--parallelism", sim.parallelism, "worker threads")->check(CLI::PositiveNumber);
  auto* game_exact = game->add_subcommand("exact", "solve the absorbing system only");
  game->add_subcommand("simulate", "simulate (default)");

  // hit
  auto* hit = app.add_subcommand("hit", "expected hitting times to a target set");
  Source hit_src;
  Output hit_out;
  std::vector<int> hit_targets;
  hit_src.attach(hit);
  hit_out.attach(hit);
  hit->add_option("--target", hit_targets, "target vertex (repeatable)")->required();

  // check
  auto* check = app.add_subcommand("check", "admissibility of the path decomposition and extrema verdict");
  Source check_src;
  Output check_out;
  PropertyFlags check_flags;
  std::string check_path;
  check_src.attach(check);
  check_out.attach(check);
  check_flags.attach(check);
  check->add_option("--path", check_path, "comma-separated longest path (required for graphs with cycles)");

  // gen
  auto* gen = app.add_subcommand("gen", "write a generated graph");
  std::vector<std::string> gen_family;
  Output gen_out;
  std::string gen_format = "edgelist";
  gen->add_option("family", gen_family, "family and parameters")->required();
  gen_out.attach(gen);
  gen->add_option("--format", gen_format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
  gen->footer(family_usage());

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list the free trees on n vertices");
  int enum_n = 0;
  Output enum_out;
  std::string enum_format = "code";
  enumerate->add_option("--n", enum_n, "number of vertices")->required();
  enum_out.attach(enumerate);
  enumerate->add_option("--format", enum_format, "code, graph6 or edgelist")
      ->check(CLI::IsMember({"code", "graph6", "edgelist"}));

  // survey
  auto* survey = app.add_subcommand("survey", "extrema census over all free trees on n vertices");
  SurveyOptions survey_opts;
  survey_opts.parallelism = default_parallelism();
  std::string survey_csv, survey_ckpt, survey_g6;
  Output survey_json;
  survey->add_option("--n", survey_opts.n, "number of vertices")->required();
  survey->add_option("--parallelism", survey_opts.parallelism, "worker threads")->check(CLI::PositiveNumber);
  survey->add_option("--csv", survey_csv, "per-tree CSV records");
  survey->add_option("--graph6", survey_g6, "per-tree graph6 lines");
  survey_json.attach(survey);
  survey->add_option("--checkpoint", survey_ckpt, "checkpoint file");
  survey->add_option("--checkpoint-interval", survey_opts.checkpoint_interval, "trees between checkpoints");
  survey->add_flag("--resume", survey_opts.resume, "continue from the checkpoint");
  survey->add_flag("--include-degenerate", survey_opts.include_degenerate,
                   "count trees with a repeated lambda_2 in the failure fractions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) {
      const Graph g = analyze_src.load();
      const EigenPair pair = fiedler_pair(g);
      const ExtremaVerdict verdict = extrema_verdict(g, pair);
      if (analyze_format == "dot") {
        analyze_out.write(to_dot(g, pair.phi));
      } else {
        Json j{{"n", g.vertex_count()}, {"edges", g.edge_count()}, {"tree", is_tree(g)}};
        j["eigenpair"] = to_json(pair);
        j["bounds"] = to_json(bounds_report(g, pair));
        j["extrema"] = to_json(verdict);
        j["fiedler_connected"] = verify_fiedler_connectivity(g, pair);
        j["monotonicity"] = is_tree(g) ? to_json(verify_monotonicity(g, pair)) : Json(nullptr);
        analyze_out.write(dump_json(j) + "\n");
      }
      return analyze_flags.exit_code(verdict);
    }

    if (*game) {
      const Graph g = game_src.load();
      const EigenPair pair = game_k == 2 ? fiedler_pair(g) : eigenpair_k(g, game_k);
      const GameSpec spec{g, pair, game_from, game_to};
      spec.validate();
      Json j{{"k", pair.k}, {"lambda", pair.lambda}, {"start", game_from}, {"target", game_to}};
      if (*game_exact) {
        j["exact"] = exact_payoff(spec);
        j["phi_difference"] = pair.phi[game_from] - pair.phi[game_to];
      } else {
        const Json estimate = to_json(simulate_payoff(spec, sim));
        for (auto it = estimate.begin(); it != estimate.end(); ++it) j[it.key()] = it.value();
      }
      game_out.write(dump_json(j) + "\n");
      return kOk;
    }

    if (*hit) {
      const Graph g = hit_src.load();
      hit_out.write(dump_json(to_json(hitting_times(g, hit_targets))) + "\n");
      return kOk;
    }

    if (*check) {
      const Graph g = check_src.load();
      AdmissibilityReport report;
      if (!check_path.empty()) {
        report = check_theorem2(g, parse_vertex_list(check_path));
      } else if (is_tree(g)) {
        report = check_theorem2(g);
      } else {
        throw UnsupportedInputError("graph has cycles; pass the longest path with --path");
      }
      const ExtremaVerdict verdict = extrema_verdict(g, fiedler_pair(g));
      Json j;
      j["admissibility"] = to_json(report);
      j["extrema"] = to_json(verdict);
      check_out.write(dump_json(j) + "\n");
      PropertyFlags flags = check_flags;
      if (!flags.strict) flags.relaxed = true;
      return flags.exit_code(verdict);
    }

    if (*gen) {
      std::string text = gen_family.front();
      for (std::size_t i = 1; i < gen_family.size(); ++i) text += ':' + gen_family[i];
      const Graph g = generate(parse_family(text));
      gen_out.write(gen_format == "graph6" ? encode_graph6(g) + "\n" : to_edge_list(g));
      return kOk;
    }

    if (*enumerate) {
      std::string text;
      std::uint64_t index = 0;
      for_each_free_tree(enum_n, [&](std::span<const int> levels) {
        if (enum_format == "code") {
          text += level_code(levels) + "\n";
        } else if (enum_format == "graph6") {
          text += encode_graph6(tree_from_level_sequence(levels)) + "\n";
        } else {
          text += "# tree " + std::to_string(index) + " " + level_code(levels) + "\n";
          text += to_edge_list(tree_from_level_sequence(levels)) + "\n";
        }
        ++index;
      });
      enum_out.write(text);
      return kOk;
    }

    if (*survey) {
      if (!survey_csv.empty()) survey_opts.csv_path = survey_csv;
      if (!survey_ckpt.empty()) survey_opts.checkpoint_path = survey_ckpt;
      std::ofstream g6;
      if (!survey_g6.empty()) {
        g6.open(survey_g6, std::ios::binary | std::ios::trunc);
        if (!g6) throw Error("cannot open " + survey_g6);
        survey_opts.on_record = [&](const SurveyRecord& r) {
          g6 << encode_graph6(tree_from_level_sequence(parse_level_code(r.code))) << '\n';
        };
      }
      const SurveyAggregate agg = run_survey(survey_opts);
      const std::string text = dump_json(to_json(agg)) + "\n";
      if (!survey_json.path.empty()) survey_json.write(text);
      std::cout << text;
      return agg.census_ok ? kOk : kPropertyFails;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "fiedler: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
