// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "multired/reduction.hpp"
#include "multired/signedwords.hpp"

namespace multired {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);
// Per-trial seed obtained by counter hashing of the master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter);

// ---- generators ----

Element gen_element(const Monoid& M, std::size_t length, std::uint64_t seed);
Element random_element(const Monoid& M, std::size_t length, Rng& rng);
// Entries with random lengths summing to at most total_length.
Multifraction random_multifraction(const Monoid& M, std::size_t depth, std::size_t total_length,
                                   Rng& rng, Sign first = Sign::Pos);

struct CentralCross {
  std::vector<Element> x;
};

// Entries a_i = x_i x_{i+1} (i positive) or x_{i+1} x_i (i negative), x_{n+1} = x_1.
Multifraction assemble_cross(const Monoid& M, const CentralCross& c, Sign first = Sign::Pos);
bool is_central_cross(const Monoid& M, const Multifraction& a, const CentralCross& c);

struct BrownianConfig {
  double p_insert = 0.5;
  double p_transform = 0.4;
  double p_delete = 0.1;
  // Extra transformation-only steps once the target length is reached.
  std::size_t mixing_steps = 8;
  std::size_t max_steps = 100000;
};

struct BrownianOp {
  bool insert = false;
  // Insertion: the pair (letter, inverse letter) placed at position.
  std::size_t position = 0;
  SignedLetter letter;
  WordStep step;
};

struct UnitalCertificate {
  enum class Kind { BrownianTrace, CentralCrossSeed, LcmExpansionChain, ExplicitTraceToOne };
  Kind kind = Kind::ExplicitTraceToOne;
  std::vector<BrownianOp> brownian;
  CentralCross cross;
  Sign cross_sign = Sign::Pos;
  // Left divisors chosen at each expansion round.
  std::vector<std::vector<Element>> expansion_choices;
  std::vector<Move> trace;
  Multifraction trace_start;
  // Trailing trivial entries appended after generation.
  std::size_t pad = 0;
};

const char* certificate_kind_name(UnitalCertificate::Kind k);
nlohmann::json to_json(const Monoid& M, const UnitalCertificate& c);
// Rebuilds the witnessed multifraction and checks it equals a.
bool replay_certificate(const Monoid& M, const Multifraction& a, const UnitalCertificate& c);

struct Generated {
  Multifraction a;
  UnitalCertificate certificate;
};

Generated gen_unital_brownian(const Monoid& M, std::size_t target_length, std::uint64_t seed,
                              const BrownianConfig& cfg = {});
struct CrossGenerated {
  Multifraction a;
  CentralCross cross;
};
CrossGenerated gen_central_cross(const Monoid& M, std::size_t depth, std::size_t ray_length,
                                 std::uint64_t seed, Sign first = Sign::Pos);
CrossGenerated gen_central_cross_rays(const Monoid& M, const std::vector<std::size_t>& ray_lengths,
                                      Rng& rng, Sign first = Sign::Pos);
// Absent when a prescribed lcm does not exist.
std::optional<Multifraction> lcm_expand(const Monoid& M, const Multifraction& a,
                                        const std::vector<Element>& left_divisors);
std::optional<Multifraction> lcm_expand(const Monoid& M, const Multifraction& a, std::uint64_t seed,
                                        std::vector<Element>* choices = nullptr);
// Mixed generator: central crosses, lcm expansions and brownian walks, padded to depth.
Generated gen_unital(const Monoid& M, std::size_t depth, std::size_t max_length, std::uint64_t seed);

// ---- verdicts ----

enum class VerdictStatus { Confirmed, Counterexample, Inconclusive };
const char* verdict_name(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::string detail;
  std::vector<Move> trace;
  std::optional<Multifraction> witness;
  std::size_t graph_nodes = 0;
  double millis = 0;
  nlohmann::json evidence = nlohmann::json::object();
};

struct HarnessCaps {
  std::size_t node_cap = 200000;
};

Verdict test_conjecture_A(const Monoid& M, const Multifraction& a, const UnitalCertificate& cert,
                          const HarnessCaps& caps = {});
Verdict test_conjecture_B(const Monoid& M, const Multifraction& a, const UnitalCertificate& cert);
Verdict test_cross_confluence_pair(const Monoid& M, const Multifraction& b, const Multifraction& c,
                                   const Multifraction& a, const HarnessCaps& caps = {});
// Common left reducts of b and c, sorted.
std::vector<Multifraction> common_left_reducts(const Monoid& M, const Multifraction& b,
                                               const Multifraction& c, const HarnessCaps& caps = {});

struct CUniformReport {
  Verdict verdict;
  std::vector<Multifraction> witnesses;
  std::size_t right_reducts = 0;
  Multifraction red_t;
  bool red_t_is_witness = false;
  std::vector<Multifraction> irreducibles;
  std::optional<Multifraction> latest_common_ancestor;
  bool ancestor_is_witness = false;
};
CUniformReport test_conjecture_C_uniform(const Monoid& M, const Multifraction& a,
                                         const HarnessCaps& caps = {});

struct FourStrategyReport {
  Verdict verdict;
  std::vector<Multifraction> right_ends, left_ends;
  bool exists_k = false;
  bool all_pairs = false;
};
FourStrategyReport four_strategy_C_probe(const Monoid& M, const Multifraction& a,
                                         const HarnessCaps& caps = {});

// ---- depth-4 machinery ----

std::optional<CentralCross> has_central_cross(const Monoid& M, const Multifraction& a);
// Exhaustive search over divisors of a_1; any even depth.
std::optional<CentralCross> find_central_cross(const Monoid& M, const Multifraction& a);

struct Depth4Report {
  Tri reduces_to_one = Tri::Inconclusive;
  bool red_tame_one = false;
  bool has_cross = false;
  bool agree = false;
};
Depth4Report check_depth4_equivalences(const Monoid& M, const Multifraction& a,
                                       const HarnessCaps& caps = {});

struct UniqueFractionReport {
  bool coprime_case = false;
  bool holds = false;
  Element x, y;
  std::string detail;
};
UniqueFractionReport unique_fraction_probe(const Monoid& M, const Element& a, const Element& b,
                                           const Element& c, const Element& d);

struct ThreeOreReport {
  std::size_t triples = 0;
  std::vector<std::array<Element, 3>> violations;
  std::size_t inconclusive = 0;
};
ThreeOreReport three_ore_scan(const Monoid& M, std::size_t max_len, Side side = Side::Right);

// ---- word problem ----

struct WordProblemResult {
  Tri represents_one = Tri::Inconclusive;
  bool conditional = false;
  Multifraction evaluated;
  std::vector<Move> trace;
  std::size_t graph_nodes = 0;
  std::string detail;
};
WordProblemResult word_problem(const Monoid& M, const SignedWord& w, const HarnessCaps& caps = {});

// ---- van Kampen diagrams ----

struct VanKampenDiagram {
  struct Edge {
    std::size_t from = 0, to = 0;
    Element label;
  };
  // Two directed paths with common endpoints whose label products agree.
  struct Face {
    std::vector<std::size_t> path1, path2;
  };
  std::size_t n = 0;
  Sign sign = Sign::Pos;
  std::size_t vertices = 0;
  std::size_t base = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> boundary;
  std::vector<Face> faces;
};

struct VanKampenResult {
  bool ok = false;
  std::string error;
  VanKampenDiagram diagram;
  // Per-annulus reducers actually used, following u(n).
  std::vector<Element> reducers;
};

// The trace is aligned with the levels of u(n) down to depth 4, missing levels
// meaning a trivial reducer; when it does not fit, greatest tame reducers are used.
VanKampenResult van_kampen(const Monoid& M, const Multifraction& a,
                           const std::vector<Move>& trace = {});
bool validate_van_kampen(const Monoid& M, const VanKampenDiagram& d, const Multifraction& a,
                         std::string* why = nullptr);
nlohmann::json to_json(const Monoid& M, const VanKampenDiagram& d);
std::string to_dot(const Monoid& M, const VanKampenDiagram& d);

// ---- probes ----

struct MixedCycleReport {
  std::size_t p = 0;
  Multifraction result;
  bool matches = false;
  std::string detail;
};
// Ã2 only: the six-move mixed cycle from 1/a/bc/1 iterated p times.
MixedCycleReport mixed_cycle_probe(const Monoid& M, std::size_t p);

struct Semi4Case {
  Multifraction a;
  std::vector<Move> moves;
  bool reaches_one = false;
};
// Unital 5-multifraction built from a central cross and its prescribed move sequence.
Semi4Case semi4_case(const Monoid& M, std::size_t ray_length, std::uint64_t seed,
                     Sign first = Sign::Pos);

// ---- campaigns ----

enum class Conjecture { A, B, C, Cunif, Depth4 };
const char* conjecture_name(Conjecture c);
std::optional<Conjecture> conjecture_from_name(const std::string& s);

struct CampaignConfig {
  Conjecture conjecture = Conjecture::A;
  std::size_t depth = 4;
  std::size_t length = 20;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  HarnessCaps caps;
  // JSON-lines log path; empty disables logging.
  std::string log_path;
  // Directory for counterexample dumps; empty disables dumping.
  std::string dump_dir;
};

struct CampaignReport {
  std::size_t trials = 0, confirmed = 0, counterexamples = 0, inconclusive = 0;
  std::size_t min_moves = 0, max_moves = 0;
  double mean_moves = 0;
  double millis = 0;
  std::uint64_t seed = 0;
  std::vector<nlohmann::json> records;
  std::optional<nlohmann::json> counterexample;
};

CampaignReport run_campaign(const Monoid& M, const CampaignConfig& cfg);
nlohmann::json to_json(const CampaignReport& r);

}  // namespace multired
