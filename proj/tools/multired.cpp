// SPDX-License-Identifier: MIT
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "multired/harness.hpp"

using namespace multired;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kInconclusive = 2, kError = 3 };

struct Common {
  std::string preset = "A2tilde";
  std::string presentation_file;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--preset", c.preset, "Preset presentation name")->capture_default_str();
  app->add_option("--presentation", c.presentation_file, "Presentation file (overrides --preset)");
  app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

Presentation load_presentation(const Common& c) {
  if (c.presentation_file.empty()) return preset(c.preset);
  std::ifstream in(c.presentation_file);
  if (!in) throw std::runtime_error("cannot open " + c.presentation_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

HarnessCaps harness_caps_from_env() {
  HarnessCaps caps;
  if (const char* env = std::getenv("MULTIRED_CAPS")) {
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq != std::string::npos && item.substr(0, eq) == "node_cap")
        caps.node_cap = std::stoul(item.substr(eq + 1));
    }
  }
  return caps;
}

json moves_json(const Monoid& M, const std::vector<Move>& moves) {
  json j = json::array();
  for (auto& m : moves) j.push_back(to_json(M, m));
  return j;
}

Direction parse_side(const std::string& s) { return s == "right" ? Direction::Right : Direction::Left; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multired: multifraction reduction toolkit"};
  app.require_subcommand(1);

  Common common;
  std::string input, strategy = "low_lex", side = "left", granularity = "atomic";
  bool dot = false, fixpoint = false;
  std::size_t depth = 4, length = 20, trials = 100, jobs = 1, maxlen = 2, p = 1;
  std::uint64_t seed = 1;
  std::string conj, log_path, dump_dir, preset_action, preset_name;

  auto* preset_cmd = app.add_subcommand("preset", "List or show preset presentations");
  preset_cmd->add_option("action", preset_action, "list or show")
      ->required()
      ->check(CLI::IsMember({"list", "show"}));
  preset_cmd->add_option("name", preset_name, "Preset to show");
  preset_cmd->add_option("--format", common.format)->check(CLI::IsMember({"text", "json"}));

  auto add_input = [&](CLI::App* sub, const char* what) {
    add_common(sub, common);
    sub->add_option("input", input, what)->required();
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "Left reduce a multifraction");
  auto* rreduce_cmd = app.add_subcommand("rreduce", "Right reduce a multifraction");
  for (auto* sub : {reduce_cmd, rreduce_cmd}) {
    add_input(sub, "Multifraction, e.g. ac/ca/ba");
    sub->add_option("--strategy", strategy, "low_lex, low_antilex, high_lex or high_antilex")
        ->capture_default_str();
  }
  auto* derdiv_cmd = app.add_subcommand("derdiv", "Maximal divisions from the top level down");
  add_input(derdiv_cmd, "Multifraction");
  auto* redtame_cmd = app.add_subcommand("redtame", "Greatest tame reductions along u(n)");
  add_input(redtame_cmd, "Multifraction");
  redtame_cmd->add_flag("--fixpoint", fixpoint, "Iterate until stable");

  auto* graph_cmd = app.add_subcommand("graph", "Reduct graph");
  add_input(graph_cmd, "Multifraction");
  graph_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}))->capture_default_str();
  graph_cmd->add_option("--granularity", granularity)
      ->check(CLI::IsMember({"atomic", "maximal"}))
      ->capture_default_str();
  graph_cmd->add_flag("--dot", dot, "Emit DOT");

  auto* irr_cmd = app.add_subcommand("irr", "Irreducible reducts");
  add_input(irr_cmd, "Multifraction");
  irr_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}))->capture_default_str();

  auto* wp_cmd = app.add_subcommand("wordproblem", "Decide whether a signed word represents 1");
  add_input(wp_cmd, "Signed word; uppercase or name^-1 for inverse letters");

  auto* conj_cmd = app.add_subcommand("conjecture", "Run a conjecture campaign");
  add_common(conj_cmd, common);
  conj_cmd->add_option("name", conj, "A, B, C, Cunif or depth4")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C", "Cunif", "depth4"}));
  conj_cmd->add_option("--depth", depth)->capture_default_str();
  conj_cmd->add_option("--length", length)->capture_default_str();
  conj_cmd->add_option("--trials", trials)->capture_default_str();
  conj_cmd->add_option("--seed", seed)->capture_default_str();
  conj_cmd->add_option("--jobs", jobs)->capture_default_str();
  conj_cmd->add_option("--log", log_path, "JSON-lines trial log");
  conj_cmd->add_option("--dump", dump_dir, "Counterexample dump directory");

  auto* vk_cmd = app.add_subcommand("vankampen", "van Kampen diagram of a unital multifraction");
  add_input(vk_cmd, "Multifraction of even depth");
  vk_cmd->add_flag("--dot", dot, "Emit DOT");

  auto* basics_cmd = app.add_subcommand("basics", "Basic elements");
  add_common(basics_cmd, common);
  basics_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}))->capture_default_str();

  auto* ore_cmd = app.add_subcommand("threeore", "Scan for 3-Ore violations");
  add_common(ore_cmd, common);
  ore_cmd->add_option("--maxlen", maxlen)->capture_default_str();
  ore_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}))->capture_default_str();

  auto* cycle_cmd = app.add_subcommand("cycleprobe", "Iterate the six-move mixed cycle");
  add_common(cycle_cmd, common);
  cycle_cmd->add_option("--p", p, "Iterations")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (preset_cmd->parsed()) {
      if (preset_action == "list") {
        if (common.json()) std::cout << json(preset_names()).dump(2) << "\n";
        else
          for (auto& n : preset_names()) std::cout << n << "\n";
        return kOk;
      }
      if (preset_name.empty()) throw CLI::ValidationError("preset show needs a name");
      Presentation P = preset(preset_name);
      if (common.json()) {
        json rels = json::array();
        for (auto& r : P.relations()) rels.push_back({P.format_word(r.lhs), P.format_word(r.rhs)});
        json j{{"name", P.name()}, {"atoms", P.atom_names()}, {"relations", rels}};
        if (auto fc = is_fc_type(P)) j["fc"] = *fc;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << format_presentation(P);
      }
      return kOk;
    }

    Monoid M(load_presentation(common), caps_from_env());
    const HarnessCaps hcaps = harness_caps_from_env();
    auto F = [&](const Multifraction& a) { return format_multifraction(M, a); };

    if (reduce_cmd->parsed() || rreduce_cmd->parsed()) {
      auto s = strategy_from_name(strategy);
      if (!s) throw CLI::ValidationError("unknown strategy " + strategy);
      Multifraction a = parse_multifraction(M, input);
      ReductionTrace t = reduce(M, a, *s, reduce_cmd->parsed() ? Direction::Left : Direction::Right);
      if (common.json()) {
        std::cout << json{{"start", F(t.start)}, {"moves", moves_json(M, t.moves)}, {"end", F(t.end)},
                          {"trivial", t.end.is_trivial()}}
                         .dump(2)
                  << "\n";
      } else {
        Multifraction cur = t.start;
        std::cout << F(cur) << "\n";
        for (auto& m : t.moves) {
          cur = *apply_move(M, cur, m);
          std::cout << "  " << format_move(M, m) << " -> " << F(cur) << "\n";
        }
        std::cout << "end: " << F(t.end) << "\n";
      }
      return kOk;
    }
    if (derdiv_cmd->parsed() || redtame_cmd->parsed()) {
      Multifraction a = parse_multifraction(M, input);
      std::size_t passes = 1;
      Multifraction r = derdiv_cmd->parsed() ? derdiv(M, a)
                        : fixpoint           ? red_tame_fixpoint(M, a, &passes)
                                             : red_tame(M, a);
      if (common.json()) {
        json j{{"input", F(a)}, {"result", F(r)}};
        if (fixpoint) j["passes"] = passes;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << F(r) << "\n";
      }
      return kOk;
    }
    if (graph_cmd->parsed()) {
      Multifraction a = parse_multifraction(M, input);
      ReductGraph G = reduct_graph(M, a, parse_side(side),
                                   granularity == "maximal" ? Granularity::Maximal : Granularity::Atomic,
                                   hcaps.node_cap);
      if (dot) std::cout << to_dot(M, G);
      else if (common.json()) std::cout << to_json(M, G).dump(2) << "\n";
      else {
        std::cout << "nodes: " << G.nodes.size() << "\nedges: " << G.edges.size()
                  << "\ncomplete: " << (G.complete ? "yes" : "no") << "\nirreducible:";
        for (auto k : G.sinks()) std::cout << " " << F(G.nodes[k]);
        std::cout << "\n";
      }
      return G.complete ? kOk : kInconclusive;
    }
    if (irr_cmd->parsed()) {
      Multifraction a = parse_multifraction(M, input);
      auto irr = irreducible_reducts(M, a, parse_side(side), hcaps.node_cap);
      if (common.json()) {
        json j = json::array();
        for (auto& x : irr) j.push_back(F(x));
        std::cout << j.dump(2) << "\n";
      } else {
        for (auto& x : irr) std::cout << F(x) << "\n";
      }
      return kOk;
    }
    if (wp_cmd->parsed()) {
      SignedWord w = parse_signed_word(M.presentation(), input);
      WordProblemResult r = word_problem(M, w, hcaps);
      if (common.json()) {
        std::cout << json{{"word", format_signed_word(M.presentation(), w)},
                          {"multifraction", F(r.evaluated)},
                          {"represents_one", tri_name(r.represents_one)},
                          {"conditional", r.conditional},
                          {"verdict", r.detail},
                          {"trace", moves_json(M, r.trace)},
                          {"graph_nodes", r.graph_nodes}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << r.detail << "\n";
      }
      return r.represents_one == Tri::Inconclusive ? kInconclusive : kOk;
    }
    if (conj_cmd->parsed()) {
      CampaignConfig cfg;
      cfg.conjecture = *conjecture_from_name(conj);
      cfg.depth = depth;
      cfg.length = length;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.jobs = jobs;
      cfg.caps = hcaps;
      cfg.log_path = log_path;
      cfg.dump_dir = dump_dir;
      CampaignReport rep = run_campaign(M, cfg);
      json j = to_json(rep);
      j["conjecture"] = conj;
      j["preset"] = M.presentation().name();
      j["depth"] = depth;
      j["length"] = length;
      if (common.json()) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "conjecture " << conj << " on " << M.presentation().name() << ": " << rep.trials
                  << " trials, " << rep.confirmed << " confirmed, " << rep.counterexamples
                  << " counterexamples, " << rep.inconclusive << " inconclusive (seed " << seed << ")\n";
        if (rep.counterexample) std::cout << "counterexample: " << rep.counterexample->dump() << "\n";
      }
      if (rep.counterexamples) return kCounterexample;
      return rep.inconclusive ? kInconclusive : kOk;
    }
    if (vk_cmd->parsed()) {
      Multifraction a = parse_multifraction(M, input);
      ReductionTrace t = reduce(M, a);
      VanKampenResult r = van_kampen(M, a, t.moves);
      if (!r.ok) {
        std::cerr << "no diagram: " << r.error << "\n";
        return kInconclusive;
      }
      if (dot) std::cout << to_dot(M, r.diagram);
      else if (common.json()) std::cout << to_json(M, r.diagram).dump(2) << "\n";
      else {
        std::cout << "vertices: " << r.diagram.vertices << "\nedges: " << r.diagram.edges.size()
                  << "\nfaces: " << r.diagram.faces.size() << "\nreducers:";
        for (auto& x : r.reducers) std::cout << " " << M.format(x);
        std::cout << "\nvalid: yes\n";
      }
      return kOk;
    }
    if (basics_cmd->parsed()) {
      const BasicTable& T = M.basics(side == "left" ? Side::Left : Side::Right);
      if (common.json()) {
        json j = json::array();
        for (auto& b : T.basics) j.push_back(M.format(b));
        std::cout << json{{"side", side}, {"count", T.basics.size()}, {"C", T.C}, {"basics", j}}.dump(2)
                  << "\n";
      } else {
        std::cout << T.basics.size() << " basics (C = " << T.C << "):";
        for (auto& b : T.basics) std::cout << " " << M.format(b);
        std::cout << "\n";
      }
      return kOk;
    }
    if (ore_cmd->parsed()) {
      ThreeOreReport r = three_ore_scan(M, maxlen, side == "left" ? Side::Left : Side::Right);
      if (common.json()) {
        json v = json::array();
        for (auto& t : r.violations) v.push_back({M.format(t[0]), M.format(t[1]), M.format(t[2])});
        std::cout << json{{"triples", r.triples}, {"violations", v}, {"inconclusive", r.inconclusive}}.dump(2)
                  << "\n";
      } else {
        std::cout << r.triples << " triples, " << r.violations.size() << " violations, " << r.inconclusive
                  << " inconclusive\n";
        for (auto& t : r.violations)
          std::cout << "  (" << M.format(t[0]) << ", " << M.format(t[1]) << ", " << M.format(t[2]) << ")\n";
      }
      return r.inconclusive ? kInconclusive : kOk;
    }
    if (cycle_cmd->parsed()) {
      MixedCycleReport r = mixed_cycle_probe(M, p);
      if (common.json()) {
        std::cout << json{{"p", p}, {"result", F(r.result)}, {"matches", r.matches}, {"detail", r.detail}}.dump(2)
                  << "\n";
      } else {
        std::cout << F(r.result) << (r.matches ? " (matches)" : " (MISMATCH)") << "\n";
      }
      return r.matches ? kOk : kError;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const CapExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
