// SPDX-License-Identifier: MIT
#include "multired/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

namespace multired {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Multifraction pad_to(Multifraction a, std::size_t pad) {
  a.entries.insert(a.entries.end(), pad, Element{});
  return a;
}

std::size_t total_length(const Multifraction& a) {
  std::size_t s = 0;
  for (auto& e : a.entries) s += e.length();
  return s;
}

// Splits total into parts nonnegative pieces uniformly at random.
std::vector<std::size_t> random_split(std::size_t total, std::size_t parts, Rng& rng) {
  std::vector<std::size_t> out(parts, 0);
  if (parts == 0) return out;
  std::uniform_int_distribution<std::size_t> pick(0, parts - 1);
  for (std::size_t k = 0; k < total; ++k) ++out[pick(rng)];
  return out;
}

std::vector<Move> path_to(const ReductGraph& G, std::size_t target) {
  std::vector<long> parent_edge(G.nodes.size(), -1);
  std::vector<char> seen(G.nodes.size(), 0);
  std::vector<std::vector<std::size_t>> out(G.nodes.size());
  for (std::size_t k = 0; k < G.edges.size(); ++k) out[G.edges[k].from].push_back(k);
  std::deque<std::size_t> q{0};
  seen[0] = 1;
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop_front();
    if (u == target) break;
    for (std::size_t k : out[u]) {
      std::size_t v = G.edges[k].to;
      if (seen[v]) continue;
      seen[v] = 1;
      parent_edge[v] = static_cast<long>(k);
      q.push_back(v);
    }
  }
  std::vector<Move> moves;
  for (std::size_t v = target; parent_edge[v] >= 0;) {
    const auto& e = G.edges[static_cast<std::size_t>(parent_edge[v])];
    moves.push_back(e.move);
    v = e.from;
  }
  std::reverse(moves.begin(), moves.end());
  return moves;
}

std::vector<Multifraction> left_reduct_set(const Monoid& M, const Multifraction& a,
                                           const HarnessCaps& caps, bool* complete) {
  ReductGraph G = reduct_graph(M, a, Direction::Left, Granularity::Atomic, caps.node_cap);
  if (complete) *complete = *complete && G.complete;
  return G.nodes;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
  return splitmix64(splitmix64(master) ^ (counter * 0xd1b54a32d192ed03ULL));
}

Element random_element(const Monoid& M, std::size_t length, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, M.rank() - 1);
  Word w;
  for (std::size_t k = 0; k < length; ++k) w.push_back(static_cast<char>(pick(rng)));
  return M.canonical(w);
}

Element gen_element(const Monoid& M, std::size_t length, std::uint64_t seed) {
  Rng rng(seed);
  return random_element(M, length, rng);
}

Multifraction random_multifraction(const Monoid& M, std::size_t depth, std::size_t total,
                                   Rng& rng, Sign first) {
  std::uniform_int_distribution<std::size_t> pick_total(0, total);
  auto lengths = random_split(pick_total(rng), depth, rng);
  Multifraction a;
  a.first_sign = first;
  for (auto l : lengths) a.entries.push_back(random_element(M, l, rng));
  return a;
}

Multifraction assemble_cross(const Monoid& M, const CentralCross& c, Sign first) {
  const std::size_t n = c.x.size();
  Multifraction a;
  a.first_sign = first;
  for (std::size_t i = 1; i <= n; ++i) {
    const Element& xi = c.x[i - 1];
    const Element& xn = c.x[i % n];
    a.entries.push_back(a.sign_at(i) == Sign::Pos ? M.multiply(xi, xn) : M.multiply(xn, xi));
  }
  return a;
}

bool is_central_cross(const Monoid& M, const Multifraction& a, const CentralCross& c) {
  if (c.x.size() != a.depth() || a.depth() % 2 != 0 || a.empty()) return false;
  return assemble_cross(M, c, a.first_sign) == a;
}

const char* certificate_kind_name(UnitalCertificate::Kind k) {
  switch (k) {
    case UnitalCertificate::Kind::BrownianTrace: return "brownian_trace";
    case UnitalCertificate::Kind::CentralCrossSeed: return "central_cross_seed";
    case UnitalCertificate::Kind::LcmExpansionChain: return "lcm_expansion_chain";
    case UnitalCertificate::Kind::ExplicitTraceToOne: return "explicit_trace_to_1";
  }
  return "?";
}

nlohmann::json to_json(const Monoid& M, const UnitalCertificate& c) {
  nlohmann::json j;
  j["kind"] = certificate_kind_name(c.kind);
  j["pad"] = c.pad;
  const Presentation& P = M.presentation();
  switch (c.kind) {
    case UnitalCertificate::Kind::BrownianTrace: {
      j["ops"] = nlohmann::json::array();
      for (auto& op : c.brownian) {
        if (op.insert) {
          j["ops"].push_back({{"op", "insert"},
                              {"position", op.position},
                              {"letter", format_signed_word(P, {op.letter})}});
        } else {
          j["ops"].push_back({{"op", transform_name(op.step.kind)},
                              {"position", op.step.position},
                              {"length", op.step.length},
                              {"replacement", format_signed_word(P, op.step.replacement)}});
        }
      }
      break;
    }
    case UnitalCertificate::Kind::CentralCrossSeed:
    case UnitalCertificate::Kind::LcmExpansionChain: {
      j["cross"] = nlohmann::json::array();
      for (auto& x : c.cross.x) j["cross"].push_back(M.format(x));
      j["sign"] = c.cross_sign == Sign::Pos ? "+" : "-";
      j["expansions"] = nlohmann::json::array();
      for (auto& round : c.expansion_choices) {
        nlohmann::json r = nlohmann::json::array();
        for (auto& e : round) r.push_back(M.format(e));
        j["expansions"].push_back(r);
      }
      break;
    }
    case UnitalCertificate::Kind::ExplicitTraceToOne: {
      j["start"] = format_multifraction(M, c.trace_start);
      j["moves"] = nlohmann::json::array();
      for (auto& m : c.trace) j["moves"].push_back(to_json(M, m));
      break;
    }
  }
  return j;
}

namespace {

std::optional<SignedWord> replay_brownian(const Monoid& M, const std::vector<BrownianOp>& ops) {
  SignedWord w;
  for (auto& op : ops) {
    if (op.insert) {
      if (op.position > w.size()) return std::nullopt;
      SignedLetter inv{op.letter.atom, !op.letter.inv};
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(op.position), {op.letter, inv});
    } else {
      try {
        w = apply_step(M.presentation(), w, op.step);
      } catch (const StepNotApplicable&) {
        return std::nullopt;
      }
    }
  }
  return w;
}

}  // namespace

bool replay_certificate(const Monoid& M, const Multifraction& a, const UnitalCertificate& c) {
  try {
    switch (c.kind) {
      case UnitalCertificate::Kind::BrownianTrace: {
        auto w = replay_brownian(M, c.brownian);
        if (!w || !free_reduce(*w).empty()) {
          // Special transformations preserve the group element but not the
          // free reduction, so only the replay itself is required.
          if (!w) return false;
        }
        return pad_to(from_signed_word(M, *w), c.pad) == a;
      }
      case UnitalCertificate::Kind::CentralCrossSeed:
      case UnitalCertificate::Kind::LcmExpansionChain: {
        if (c.cross.x.empty() || c.cross.x.size() % 2) return false;
        Multifraction b = assemble_cross(M, c.cross, c.cross_sign);
        for (auto& round : c.expansion_choices) {
          auto e = lcm_expand(M, b, round);
          if (!e) return false;
          b = std::move(*e);
        }
        return pad_to(b, c.pad) == a;
      }
      case UnitalCertificate::Kind::ExplicitTraceToOne: {
        if (c.trace_start != a) return false;
        return replay(M, a, c.trace).is_trivial();
      }
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

Generated gen_unital_brownian(const Monoid& M, std::size_t target_length, std::uint64_t seed,
                              const BrownianConfig& cfg) {
  Rng rng(seed);
  const Presentation& P = M.presentation();
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick_atom(0, M.rank() - 1);
  Generated g;
  g.certificate.kind = UnitalCertificate::Kind::BrownianTrace;
  SignedWord w;
  std::size_t mixing = 0;
  const double total = cfg.p_insert + cfg.p_transform + cfg.p_delete;
  for (std::size_t step = 0; step < cfg.max_steps; ++step) {
    const bool reached = w.size() >= target_length;
    if (reached && (mixing >= cfg.mixing_steps || w.empty())) break;
    double r = coin(rng) * total;
    if (reached) r = cfg.p_insert;
    BrownianOp op;
    if (r < cfg.p_insert) {
      op.insert = true;
      op.position = std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
      op.letter = {static_cast<AtomId>(pick_atom(rng)), coin(rng) < 0.5};
      SignedLetter inv{op.letter.atom, !op.letter.inv};
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(op.position), {op.letter, inv});
    } else {
      auto steps = applicable_steps(P, w);
      const bool want_delete = r >= cfg.p_insert + cfg.p_transform;
      std::vector<WordStep> pool;
      for (auto& s : steps)
        if ((s.kind == TransformKind::FreeDelete) == want_delete) pool.push_back(s);
      if (reached) ++mixing;
      if (pool.empty()) continue;
      op.step = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      w = apply_step(P, w, op.step);
    }
    g.certificate.brownian.push_back(op);
  }
  g.a = from_signed_word(M, w);
  return g;
}

CrossGenerated gen_central_cross_rays(const Monoid& M, const std::vector<std::size_t>& ray_lengths,
                                      Rng& rng, Sign first) {
  if (ray_lengths.empty() || ray_lengths.size() % 2)
    throw std::invalid_argument("central cross depth must be even and positive");
  CrossGenerated g;
  for (auto l : ray_lengths) g.cross.x.push_back(random_element(M, l, rng));
  g.a = assemble_cross(M, g.cross, first);
  return g;
}

CrossGenerated gen_central_cross(const Monoid& M, std::size_t depth, std::size_t ray_length,
                                 std::uint64_t seed, Sign first) {
  Rng rng(seed);
  return gen_central_cross_rays(M, std::vector<std::size_t>(depth, ray_length), rng, first);
}

std::optional<Multifraction> lcm_expand(const Monoid& M, const Multifraction& a,
                                        const std::vector<Element>& left_divisors) {
  const std::size_t n = a.depth();
  if (n == 0 || n % 2) throw std::invalid_argument("lcm expansion needs even depth");
  if (left_divisors.size() != n) throw std::invalid_argument("one divisor per entry required");
  std::vector<Element> ap(n + 1), app(n + 1), bp(n + 1), bpp(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    auto q = M.divides(left_divisors[i - 1], a.at(i), Side::Left);
    if (!q) throw std::invalid_argument("chosen element is not a left divisor");
    ap[i] = left_divisors[i - 1];
    app[i] = *q;
  }
  auto prev = [n](std::size_t i) { return i == 1 ? n : i - 1; };
  auto next = [n](std::size_t i) { return i == n ? 1 : i + 1; };
  for (std::size_t i = 1; i <= n; ++i) {
    if (a.positive_at(i)) {
      LcmResult r = M.lcm(app[i], app[next(i)], Side::Left);
      if (r.status != Tri::Yes) return std::nullopt;
      bp[prev(i)] = r.compB;
      bp[i] = r.compA;
    } else {
      LcmResult r = M.lcm(ap[i], ap[next(i)], Side::Right);
      if (r.status != Tri::Yes) return std::nullopt;
      bpp[prev(i)] = r.compB;
      bpp[i] = r.compA;
    }
  }
  Multifraction b;
  b.first_sign = a.first_sign;
  for (std::size_t i = 1; i <= n; ++i) b.entries.push_back(M.multiply(bp[i], bpp[i]));
  return b;
}

std::optional<Multifraction> lcm_expand(const Monoid& M, const Multifraction& a, std::uint64_t seed,
                                        std::vector<Element>* choices) {
  Rng rng(seed);
  std::vector<Element> divs;
  for (auto& e : a.entries) {
    auto all = M.divisors(e, Side::Left);
    divs.push_back(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
  }
  if (choices) *choices = divs;
  return lcm_expand(M, a, divs);
}

Generated gen_unital(const Monoid& M, std::size_t depth, std::size_t max_length, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::size_t core = depth % 2 ? depth - 1 : depth;
  auto cross_case = [&](std::size_t budget) {
    Generated g;
    std::size_t rays_total = std::uniform_int_distribution<std::size_t>(0, budget / 2)(rng);
    auto c = gen_central_cross_rays(M, random_split(rays_total, core, rng), rng);
    g.a = pad_to(c.a, depth - core);
    g.certificate.kind = UnitalCertificate::Kind::CentralCrossSeed;
    g.certificate.cross = c.cross;
    g.certificate.pad = depth - core;
    return g;
  };
  if (core == 0) {
    Generated g;
    g.a = unit(static_cast<int>(depth));
    g.certificate.kind = UnitalCertificate::Kind::ExplicitTraceToOne;
    g.certificate.trace_start = g.a;
    return g;
  }
  const double r = coin(rng);
  if (r < 0.4) return cross_case(max_length);
  if (r < 0.8) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      Generated g = cross_case(max_length / 2 + 1);
      Multifraction b = pad_to(assemble_cross(M, g.certificate.cross, Sign::Pos), 0);
      const int rounds = coin(rng) < 0.5 ? 1 : 2;
      bool ok = true;
      std::vector<std::vector<Element>> chain;
      for (int k = 0; k < rounds && ok; ++k) {
        std::vector<Element> choices;
        auto e = lcm_expand(M, b, rng(), &choices);
        if (!e) {
          ok = false;
          break;
        }
        b = std::move(*e);
        chain.push_back(std::move(choices));
      }
      if (!ok || total_length(b) > max_length) continue;
      g.certificate.kind = UnitalCertificate::Kind::LcmExpansionChain;
      g.certificate.expansion_choices = std::move(chain);
      g.a = pad_to(b, depth - core);
      return g;
    }
    return cross_case(max_length);
  }
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::size_t target = std::uniform_int_distribution<std::size_t>(2, std::max<std::size_t>(max_length, 2))(rng);
    Generated g = gen_unital_brownian(M, target, rng());
    if (g.a.depth() > depth || total_length(g.a) > max_length) continue;
    g.certificate.pad = depth - g.a.depth();
    g.a = pad_to(g.a, g.certificate.pad);
    return g;
  }
  return cross_case(max_length);
}

const char* verdict_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Confirmed: return "confirmed";
    case VerdictStatus::Counterexample: return "counterexample";
    case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict test_conjecture_A(const Monoid& M, const Multifraction& a, const UnitalCertificate& cert,
                          const HarnessCaps& caps) {
  auto t0 = Clock::now();
  if (!replay_certificate(M, a, cert))
    throw std::invalid_argument("unitality certificate does not replay");
  Verdict v;
  try {
    ReductionTrace t = reduce(M, a);
    if (t.end.is_trivial() || a.empty()) {
      v.status = VerdictStatus::Confirmed;
      v.trace = t.moves;
      v.detail = "default strategy reaches 1";
    } else {
      ReductGraph G = reduct_graph(M, a, Direction::Left, Granularity::Atomic, caps.node_cap);
      v.graph_nodes = G.nodes.size();
      auto target = G.find(unit(static_cast<int>(a.depth())));
      if (target) {
        v.status = VerdictStatus::Confirmed;
        v.trace = path_to(G, *target);
        v.detail = "exhaustive search reaches 1";
      } else if (G.complete) {
        v.status = VerdictStatus::Counterexample;
        v.detail = "complete reduct graph without the trivial multifraction";
        v.evidence["irreducible"] = nlohmann::json::array();
        for (auto k : G.sinks()) v.evidence["irreducible"].push_back(format_multifraction(M, G.nodes[k]));
        v.evidence["dot"] = to_dot(M, G);
      } else {
        v.status = VerdictStatus::Inconclusive;
        v.detail = "reduct graph has undecided moves";
      }
    }
  } catch (const CapExceeded& e) {
    v.status = VerdictStatus::Inconclusive;
    v.detail = e.what();
  }
  v.millis = millis_since(t0);
  return v;
}

Verdict test_conjecture_B(const Monoid& M, const Multifraction& a, const UnitalCertificate& cert) {
  auto t0 = Clock::now();
  if (!replay_certificate(M, a, cert))
    throw std::invalid_argument("unitality certificate does not replay");
  Verdict v;
  try {
    Multifraction r = red_tame(M, a);
    std::size_t passes = 0;
    Multifraction fix = red_tame_fixpoint(M, a, &passes);
    v.evidence["red_t"] = format_multifraction(M, r);
    v.evidence["fixpoint"] = format_multifraction(M, fix);
    v.evidence["passes"] = passes;
    v.witness = r;
    if (r.is_trivial() || a.empty()) {
      v.status = VerdictStatus::Confirmed;
      v.detail = "red_t(a) = 1";
    } else {
      v.status = VerdictStatus::Counterexample;
      v.detail = "red_t(a) is not trivial for a certified unital input";
    }
  } catch (const CapExceeded& e) {
    v.status = VerdictStatus::Inconclusive;
    v.detail = e.what();
  }
  v.millis = millis_since(t0);
  return v;
}

std::vector<Multifraction> common_left_reducts(const Monoid& M, const Multifraction& b,
                                               const Multifraction& c, const HarnessCaps& caps) {
  auto sb = left_reduct_set(M, b, caps, nullptr);
  auto sc = left_reduct_set(M, c, caps, nullptr);
  std::unordered_set<Multifraction, MultifractionHash> in_c(sc.begin(), sc.end());
  std::vector<Multifraction> out;
  for (auto& x : sb)
    if (in_c.count(x)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

Verdict test_cross_confluence_pair(const Monoid& M, const Multifraction& b, const Multifraction& c,
                                   const Multifraction& a, const HarnessCaps& caps) {
  auto t0 = Clock::now();
  Verdict v;
  v.evidence["source"] = format_multifraction(M, a);
  try {
    bool complete = true;
    auto sb = left_reduct_set(M, b, caps, &complete);
    auto sc = left_reduct_set(M, c, caps, &complete);
    std::unordered_set<Multifraction, MultifractionHash> in_c(sc.begin(), sc.end());
    std::vector<Multifraction> common;
    for (auto& x : sb)
      if (in_c.count(x)) common.push_back(x);
    v.graph_nodes = sb.size() + sc.size();
    v.evidence["common"] = common.size();
    if (!common.empty()) {
      v.status = VerdictStatus::Confirmed;
      v.witness = common.front();
      v.detail = "common left reduct found";
    } else if (complete) {
      v.status = VerdictStatus::Counterexample;
      v.detail = "complete left reduct graphs share no node";
    } else {
      v.status = VerdictStatus::Inconclusive;
      v.detail = "left reduct graphs have undecided moves";
    }
  } catch (const CapExceeded& e) {
    v.status = VerdictStatus::Inconclusive;
    v.detail = e.what();
  }
  v.millis = millis_since(t0);
  return v;
}

CUniformReport test_conjecture_C_uniform(const Monoid& M, const Multifraction& a,
                                         const HarnessCaps& caps) {
  auto t0 = Clock::now();
  CUniformReport rep;
  try {
    ReductGraph R = reduct_graph(M, a, Direction::Right, Granularity::Atomic, caps.node_cap);
    rep.right_reducts = R.nodes.size();
    bool complete = R.complete;
    ReductGraph L = reduct_graph(M, a, Direction::Left, Granularity::Atomic, caps.node_cap);
    complete = complete && L.complete;
    std::vector<Multifraction> cand = L.nodes;
    for (std::size_t k = 1; k < R.nodes.size() && !cand.empty(); ++k) {
      auto s = left_reduct_set(M, R.nodes[k], caps, &complete);
      std::unordered_set<Multifraction, MultifractionHash> in(s.begin(), s.end());
      std::vector<Multifraction> keep;
      for (auto& x : cand)
        if (in.count(x)) keep.push_back(x);
      cand = std::move(keep);
    }
    std::sort(cand.begin(), cand.end());
    rep.witnesses = cand;
    std::unordered_set<Multifraction, MultifractionHash> wset(cand.begin(), cand.end());
    rep.red_t = red_tame(M, a);
    rep.red_t_is_witness = wset.count(rep.red_t) != 0;

    const auto sinks = L.sinks();
    for (auto k : sinks) rep.irreducibles.push_back(L.nodes[k]);
    std::vector<std::vector<std::size_t>> out(L.nodes.size());
    for (auto& e : L.edges) out[e.from].push_back(e.to);
    std::vector<std::vector<bool>> reach(L.nodes.size());
    std::vector<char> done(L.nodes.size(), 0);
    std::function<void(std::size_t)> visit = [&](std::size_t u) {
      if (done[u]) return;
      done[u] = 1;
      reach[u].assign(L.nodes.size(), false);
      reach[u][u] = true;
      for (auto v : out[u]) {
        visit(v);
        for (std::size_t k = 0; k < L.nodes.size(); ++k)
          if (reach[v][k]) reach[u][k] = true;
      }
    };
    if (L.nodes.size() <= 4000) {
      visit(0);
      std::vector<std::size_t> ancestors;
      for (std::size_t u = 0; u < L.nodes.size(); ++u) {
        if (!done[u]) visit(u);
        bool all = std::all_of(sinks.begin(), sinks.end(), [&](std::size_t s) { return reach[u][s]; });
        if (all) ancestors.push_back(u);
      }
      std::vector<std::size_t> latest;
      for (auto u : ancestors) {
        bool is_latest = std::none_of(ancestors.begin(), ancestors.end(),
                                      [&](std::size_t w) { return w != u && reach[u][w]; });
        if (is_latest) latest.push_back(u);
      }
      if (latest.size() == 1) {
        rep.latest_common_ancestor = L.nodes[latest.front()];
        rep.ancestor_is_witness = wset.count(*rep.latest_common_ancestor) != 0;
      }
    }
    Verdict& v = rep.verdict;
    v.evidence["witnesses"] = cand.size();
    v.evidence["right_reducts"] = rep.right_reducts;
    if (!cand.empty()) {
      v.status = VerdictStatus::Confirmed;
      v.witness = cand.front();
      v.detail = "uniform witness found";
    } else if (complete) {
      v.status = VerdictStatus::Counterexample;
      v.detail = "no common left reduct of all right reducts";
    } else {
      v.status = VerdictStatus::Inconclusive;
      v.detail = "undecided moves";
    }
  } catch (const CapExceeded& e) {
    rep.verdict.status = VerdictStatus::Inconclusive;
    rep.verdict.detail = e.what();
  }
  rep.verdict.millis = millis_since(t0);
  return rep;
}

FourStrategyReport four_strategy_C_probe(const Monoid& M, const Multifraction& a,
                                         const HarnessCaps& caps) {
  auto t0 = Clock::now();
  FourStrategyReport rep;
  try {
    for (Strategy s : all_strategies()) {
      rep.right_ends.push_back(reduce(M, a, s, Direction::Right).end);
      rep.left_ends.push_back(reduce(M, a, s, Direction::Left).end);
    }
    bool complete = true;
    std::vector<std::unordered_set<Multifraction, MultifractionHash>> sets;
    for (auto& b : rep.right_ends) {
      auto s = left_reduct_set(M, b, caps, &complete);
      sets.emplace_back(s.begin(), s.end());
    }
    rep.all_pairs = true;
    for (std::size_t k = 0; k < rep.left_ends.size(); ++k) {
      bool all_j = std::all_of(sets.begin(), sets.end(),
                               [&](const auto& s) { return s.count(rep.left_ends[k]) != 0; });
      if (all_j) rep.exists_k = true;
      else rep.all_pairs = false;
    }
    Verdict& v = rep.verdict;
    v.evidence["all_pairs"] = rep.all_pairs;
    if (rep.exists_k) {
      v.status = VerdictStatus::Confirmed;
      v.detail = rep.all_pairs ? "every strategy pair confluent" : "some left strategy end is common";
    } else if (complete) {
      v.status = VerdictStatus::Counterexample;
      v.detail = "no left strategy end is a common reduct of the right strategy ends";
    } else {
      v.status = VerdictStatus::Inconclusive;
    }
  } catch (const CapExceeded& e) {
    rep.verdict.status = VerdictStatus::Inconclusive;
    rep.verdict.detail = e.what();
  }
  rep.verdict.millis = millis_since(t0);
  return rep;
}

std::optional<CentralCross> has_central_cross(const Monoid& M, const Multifraction& a) {
  if (a.depth() != 4) throw std::invalid_argument("has_central_cross expects depth 4");
  const Side side = a.first_sign == Sign::Pos ? Side::Right : Side::Left;
  Element g = M.gcd(a.at(1), a.at(2), side);
  Element h = M.gcd(a.at(3), a.at(4), side);
  auto x = M.divides(g, a.at(1), side);
  auto y = M.divides(g, a.at(2), side);
  if (!x || !y) return std::nullopt;
  auto join = [&](const Element& u, const Element& hh) {
    return side == Side::Right ? M.multiply(u, hh) : M.multiply(hh, u);
  };
  if (join(*y, h) != a.at(3) || join(*x, h) != a.at(4)) return std::nullopt;
  return CentralCross{{*x, g, *y, h}};
}

std::optional<CentralCross> find_central_cross(const Monoid& M, const Multifraction& a) {
  const std::size_t n = a.depth();
  if (n == 0 || n % 2) return std::nullopt;
  // For a positive first entry a_1 = x_1 x_2, otherwise a_1 = x_2 x_1.
  const Side first_side = a.positive_at(1) ? Side::Left : Side::Right;
  for (const Element& x1 : M.divisors(a.at(1), first_side)) {
    std::vector<Element> x{x1};
    bool ok = true;
    for (std::size_t i = 1; i <= n && ok; ++i) {
      if (i == 1) {
        x.push_back(*M.divides(x1, a.at(1), first_side));
        continue;
      }
      const Element& xi = x[i - 1];
      // a_i = x_i x_{i+1} when positive, x_{i+1} x_i when negative.
      auto q = M.divides(xi, a.at(i), a.positive_at(i) ? Side::Left : Side::Right);
      if (!q) ok = false;
      else x.push_back(*q);
    }
    if (!ok || x.back() != x.front()) continue;
    x.pop_back();
    CentralCross c{x};
    if (is_central_cross(M, a, c)) return c;
  }
  return std::nullopt;
}

Depth4Report check_depth4_equivalences(const Monoid& M, const Multifraction& a,
                                       const HarnessCaps& caps) {
  Depth4Report r;
  try {
    if (reduce(M, a).end.is_trivial()) {
      r.reduces_to_one = Tri::Yes;
    } else {
      ReductGraph G = reduct_graph(M, a, Direction::Left, Granularity::Atomic, caps.node_cap);
      if (G.contains(unit(4 * (a.first_sign == Sign::Pos ? 1 : -1)))) r.reduces_to_one = Tri::Yes;
      else r.reduces_to_one = G.complete ? Tri::No : Tri::Inconclusive;
    }
  } catch (const CapExceeded&) {
    r.reduces_to_one = Tri::Inconclusive;
  }
  r.red_tame_one = red_tame(M, a).is_trivial();
  r.has_cross = has_central_cross(M, a).has_value();
  r.agree = r.reduces_to_one != Tri::Inconclusive &&
            (r.reduces_to_one == Tri::Yes) == r.red_tame_one && r.red_tame_one == r.has_cross;
  return r;
}

UniqueFractionReport unique_fraction_probe(const Monoid& M, const Element& a, const Element& b,
                                           const Element& c, const Element& d) {
  UniqueFractionReport r;
  Element g1 = M.gcd(a, b, Side::Right), g2 = M.gcd(c, d, Side::Right);
  r.coprime_case = g1.is_one() && g2.is_one();
  r.x = *M.divides(g1, a, Side::Right);
  r.y = *M.divides(g1, b, Side::Right);
  if (r.coprime_case) {
    r.holds = a == c && b == d;
    r.detail = r.holds ? "coprime fractions coincide" : "distinct coprime expressions";
  } else {
    r.holds = M.multiply(r.x, g2) == c && M.multiply(r.y, g2) == d;
    r.detail = r.holds ? "common x, y factorization" : "factorization fails";
  }
  return r;
}

ThreeOreReport three_ore_scan(const Monoid& M, std::size_t max_len, Side side) {
  ThreeOreReport rep;
  std::vector<Element> elems;
  for (std::size_t l = 1; l <= max_len; ++l)
    for (auto& e : M.elements_of_length(l)) elems.push_back(e);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      for (std::size_t k = j + 1; k < elems.size(); ++k) {
        ++rep.triples;
        const Element &x = elems[i], &y = elems[j], &z = elems[k];
        LcmResult xy = M.lcm(x, y, side), yz = M.lcm(y, z, side), xz = M.lcm(x, z, side);
        if (xy.status == Tri::Inconclusive || yz.status == Tri::Inconclusive ||
            xz.status == Tri::Inconclusive) {
          ++rep.inconclusive;
          continue;
        }
        if (!xy || !yz || !xz) continue;
        LcmResult all = M.lcm(xy.m, z, side);
        if (all.status == Tri::Inconclusive) ++rep.inconclusive;
        else if (!all) rep.violations.push_back({x, y, z});
      }
  return rep;
}

WordProblemResult word_problem(const Monoid& M, const SignedWord& w, const HarnessCaps& caps) {
  WordProblemResult r;
  r.evaluated = from_signed_word(M, w);
  try {
    ReductionTrace t = reduce(M, r.evaluated);
    if (t.end.is_trivial()) {
      r.represents_one = Tri::Yes;
      r.trace = t.moves;
      r.detail = "represents 1";
      return r;
    }
    ReductGraph G = reduct_graph(M, r.evaluated, Direction::Left, Granularity::Atomic, caps.node_cap);
    r.graph_nodes = G.nodes.size();
    if (auto k = G.find(unit(static_cast<int>(r.evaluated.depth())))) {
      r.represents_one = Tri::Yes;
      r.trace = path_to(G, *k);
      r.detail = "represents 1";
    } else if (G.complete) {
      r.represents_one = Tri::No;
      r.conditional = !is_fc_type(M.presentation()).value_or(false);
      r.detail = r.conditional ? "nontrivial (conditional on Conjecture A)"
                               : "nontrivial (unconditional)";
    } else {
      r.detail = "inconclusive: undecided moves";
    }
  } catch (const CapExceeded& e) {
    r.represents_one = Tri::Inconclusive;
    r.detail = std::string("inconclusive: ") + e.what();
  }
  return r;
}

namespace {

struct DiagramBuilder {
  VanKampenDiagram d;
  std::vector<std::size_t> parent;

  std::size_t vertex() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  }
  std::size_t root(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void merge(std::size_t u, std::size_t v) {
    u = root(u);
    v = root(v);
    if (u != v) parent[std::max(u, v)] = std::min(u, v);
  }
  std::size_t edge(std::size_t from, std::size_t to, const Element& label) {
    d.edges.push_back({from, to, label});
    return d.edges.size() - 1;
  }
  void face(std::vector<std::size_t> p1, std::vector<std::size_t> p2) {
    d.faces.push_back({std::move(p1), std::move(p2)});
  }
};

// Levels of u(n) handled by annuli, down to depth 4.
std::vector<std::size_t> annulus_levels(std::size_t n) {
  std::vector<std::size_t> lv;
  for (std::size_t m = n; m >= 6; m -= 2)
    for (std::size_t i = 1; i < m; ++i) lv.push_back(i);
  return lv;
}

std::optional<std::vector<Element>> align_trace(const Monoid& M, const Multifraction& a,
                                                const std::vector<Move>& trace) {
  auto merged = merge_moves(M, a, trace);
  auto levels = annulus_levels(a.depth());
  std::vector<Element> xs;
  std::size_t k = 0;
  for (std::size_t lv : levels) {
    if (k < merged.size() && merged[k].kind != MoveKind::Right && merged[k].level == lv) {
      xs.push_back(merged[k].x);
      ++k;
    } else {
      xs.push_back(M.one());
    }
  }
  for (; k < merged.size(); ++k)
    if (merged[k].level >= 4) return std::nullopt;
  return xs;
}

}  // namespace

VanKampenResult van_kampen(const Monoid& M, const Multifraction& a, const std::vector<Move>& trace) {
  VanKampenResult res;
  const std::size_t n = a.depth();
  if (n == 0 || n % 2) {
    res.error = "depth must be even and positive";
    return res;
  }
  std::optional<std::vector<Element>> given;
  if (!trace.empty()) given = align_trace(M, a, trace);
  bool derive = !given;

  DiagramBuilder B;
  B.d.n = n;
  B.d.sign = a.first_sign;
  std::vector<std::size_t> L(n + 1), E(n + 1);
  for (std::size_t j = 0; j < n; ++j) L[j] = B.vertex();
  L[n] = L[0];
  for (std::size_t j = 1; j <= n; ++j) {
    E[j] = a.positive_at(j) ? B.edge(L[j - 1], L[j], a.at(j)) : B.edge(L[j], L[j - 1], a.at(j));
    B.d.boundary.push_back(E[j]);
  }

  auto attempt = [&](bool use_given) -> bool {
    B.d.faces.clear();
    B.d.edges.resize(n);
    B.parent.resize(n);
    for (std::size_t k = 0; k < n; ++k) B.parent[k] = k;
    for (std::size_t j = 0; j < n; ++j) L[j] = j;
    L[n] = L[0];
    for (std::size_t j = 1; j <= n; ++j) E[j] = j - 1;
    res.reducers.clear();
    Multifraction cur = a;
    std::size_t cursor = 0;
    for (std::size_t m = n; m >= 6; m -= 2) {
      for (std::size_t i = 1; i < m; ++i) {
        Element x = use_given ? (*given)[cursor++] : greatest_tame_reducer(M, cur, i);
        res.reducers.push_back(x);
        MoveOutcome out{cur, M.one()};
        if (!x.is_one()) {
          auto o = apply_left_ex(M, cur, i, x);
          if (!o) {
            res.error = "reducer at level " + std::to_string(i) + " does not apply";
            return false;
          }
          out = std::move(*o);
        }
        const Multifraction& b = out.b;
        const Element& xp = out.carried;
        const bool neg = !cur.positive_at(i);
        std::size_t p = B.vertex();
        if (i == 1) {
          if (neg) {
            std::size_t ex = B.edge(L[1], p, x), e0 = B.edge(p, L[0], b.at(1)),
                        e2 = B.edge(p, L[2], b.at(2));
            B.face({ex, e0}, {E[1]});
            B.face({ex, e2}, {E[2]});
            E[1] = e0;
            E[2] = e2;
          } else {
            std::size_t ex = B.edge(p, L[1], x), e0 = B.edge(L[0], p, b.at(1)),
                        e2 = B.edge(L[2], p, b.at(2));
            B.face({e0, ex}, {E[1]});
            B.face({e2, ex}, {E[2]});
            E[1] = e0;
            E[2] = e2;
          }
          L[1] = p;
        } else {
          std::size_t q = B.vertex();
          if (neg) {
            std::size_t ex = B.edge(L[i], p, x), etop = B.edge(p, L[i + 1], b.at(i + 1));
            B.face({ex, etop}, {E[i + 1]});
            std::size_t exp = B.edge(L[i - 1], q, xp), ebi = B.edge(p, q, b.at(i));
            B.face({E[i], exp}, {ex, ebi});
            std::size_t elow = B.edge(L[i - 2], q, b.at(i - 1));
            B.face({E[i - 1], exp}, {elow});
            E[i - 1] = elow;
            E[i] = ebi;
            E[i + 1] = etop;
          } else {
            std::size_t ex = B.edge(p, L[i], x), etop = B.edge(L[i + 1], p, b.at(i + 1));
            B.face({etop, ex}, {E[i + 1]});
            std::size_t exp = B.edge(q, L[i - 1], xp), ebi = B.edge(q, p, b.at(i));
            B.face({exp, E[i]}, {ebi, ex});
            std::size_t elow = B.edge(q, L[i - 2], b.at(i - 1));
            B.face({exp, E[i - 1]}, {elow});
            E[i - 1] = elow;
            E[i] = ebi;
            E[i + 1] = etop;
          }
          L[i - 1] = q;
          L[i] = p;
        }
        cur = b;
      }
      if (!cur.at(m).is_one() || !cur.at(m - 1).is_one()) {
        res.error = "annulus at depth " + std::to_string(m) + " leaves nontrivial top entries";
        return false;
      }
      B.merge(L[m - 2], L[0]);
      B.merge(L[m - 1], L[0]);
      cur.entries.resize(m - 2);
      L[m - 2] = L[0];
    }
    if (n == 2) {
      if (cur.at(1) != cur.at(2)) {
        res.error = "depth-2 entries differ";
        return false;
      }
      std::size_t h = B.vertex();
      if (cur.positive_at(1)) {
        std::size_t e1 = B.edge(L[0], h, cur.at(1)), e2 = B.edge(h, L[1], M.one());
        B.face({e1, e2}, {E[1]});
        B.face({e1, e2}, {E[2]});
      } else {
        std::size_t e1 = B.edge(h, L[0], M.one()), e2 = B.edge(L[1], h, cur.at(1));
        B.face({e2, e1}, {E[1]});
        B.face({e2, e1}, {E[2]});
      }
      return true;
    }
    auto cross = has_central_cross(M, cur);
    if (!cross) {
      res.error = "depth-4 stage admits no central cross";
      return false;
    }
    const auto& x = cross->x;
    std::size_t h = B.vertex();
    if (cur.first_sign == Sign::Pos) {
      std::size_t e1 = B.edge(L[0], h, x[0]), e2 = B.edge(h, L[1], x[1]),
                  e3 = B.edge(L[2], h, x[2]), e4 = B.edge(h, L[3], x[3]);
      B.face({e1, e2}, {E[1]});
      B.face({e3, e2}, {E[2]});
      B.face({e3, e4}, {E[3]});
      B.face({e1, e4}, {E[4]});
    } else {
      std::size_t e1 = B.edge(h, L[0], x[0]), e2 = B.edge(L[1], h, x[1]),
                  e3 = B.edge(h, L[2], x[2]), e4 = B.edge(L[3], h, x[3]);
      B.face({e2, e1}, {E[1]});
      B.face({e2, e3}, {E[2]});
      B.face({e4, e3}, {E[3]});
      B.face({e4, e1}, {E[4]});
    }
    return true;
  };

  bool ok = false;
  try {
    ok = !derive && attempt(true);
    if (!ok) {
      res.error.clear();
      ok = attempt(false);
    }
  } catch (const CapExceeded& e) {
    res.error = e.what();
    ok = false;
  }
  if (!ok) return res;

  std::vector<long> id(B.parent.size(), -1);
  std::size_t count = 0;
  for (std::size_t v = 0; v < B.parent.size(); ++v) {
    std::size_t r = B.root(v);
    if (id[r] < 0) id[r] = static_cast<long>(count++);
  }
  for (auto& e : B.d.edges) {
    e.from = static_cast<std::size_t>(id[B.root(e.from)]);
    e.to = static_cast<std::size_t>(id[B.root(e.to)]);
  }
  B.d.vertices = count;
  B.d.base = static_cast<std::size_t>(id[B.root(0)]);
  res.diagram = std::move(B.d);
  std::string why;
  res.ok = validate_van_kampen(M, res.diagram, a, &why);
  if (!res.ok) res.error = "validation failed: " + why;
  return res;
}

bool validate_van_kampen(const Monoid& M, const VanKampenDiagram& d, const Multifraction& a,
                         std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (d.boundary.size() != a.depth()) return fail("boundary length differs from depth");
  std::size_t at = d.base;
  for (std::size_t j = 1; j <= a.depth(); ++j) {
    const auto& e = d.edges.at(d.boundary[j - 1]);
    if (e.label != a.at(j)) return fail("boundary label " + std::to_string(j) + " differs");
    if (a.positive_at(j)) {
      if (e.from != at) return fail("boundary orientation broken at " + std::to_string(j));
      at = e.to;
    } else {
      if (e.to != at) return fail("boundary orientation broken at " + std::to_string(j));
      at = e.from;
    }
  }
  if (at != d.base) return fail("boundary does not close");
  for (std::size_t f = 0; f < d.faces.size(); ++f) {
    const auto& face = d.faces[f];
    auto walk = [&](const std::vector<std::size_t>& path, std::size_t& s, std::size_t& t,
                    Element& prod) {
      if (path.empty()) return false;
      s = d.edges.at(path.front()).from;
      std::size_t cur = s;
      prod = M.one();
      for (auto k : path) {
        const auto& e = d.edges.at(k);
        if (e.from != cur) return false;
        cur = e.to;
        prod = M.multiply(prod, e.label);
      }
      t = cur;
      return true;
    };
    std::size_t s1, t1, s2, t2;
    Element p1, p2;
    if (!walk(face.path1, s1, t1, p1) || !walk(face.path2, s2, t2, p2))
      return fail("face " + std::to_string(f) + " has a broken path");
    if (s1 != s2 || t1 != t2) return fail("face " + std::to_string(f) + " endpoints differ");
    if (p1 != p2) return fail("face " + std::to_string(f) + " does not commute");
  }
  return true;
}

nlohmann::json to_json(const Monoid& M, const VanKampenDiagram& d) {
  nlohmann::json j;
  j["depth"] = d.n;
  j["sign"] = d.sign == Sign::Pos ? "+" : "-";
  j["vertices"] = d.vertices;
  j["base"] = d.base;
  j["edges"] = nlohmann::json::array();
  for (auto& e : d.edges) j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"label", M.format(e.label)}});
  j["boundary"] = d.boundary;
  j["faces"] = nlohmann::json::array();
  for (auto& f : d.faces) j["faces"].push_back({{"path1", f.path1}, {"path2", f.path2}});
  return j;
}

std::string to_dot(const Monoid& M, const VanKampenDiagram& d) {
  std::string out = "digraph van_kampen {\n  node [shape=point];\n";
  out += "  v" + std::to_string(d.base) + " [shape=doublecircle, label=\"*\"];\n";
  std::unordered_set<std::size_t> outer(d.boundary.begin(), d.boundary.end());
  for (std::size_t k = 0; k < d.edges.size(); ++k) {
    const auto& e = d.edges[k];
    out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=\"" +
           M.format(e.label) + "\"" + (outer.count(k) ? ", penwidth=2" : "") + "];\n";
  }
  out += "}\n";
  return out;
}

MixedCycleReport mixed_cycle_probe(const Monoid& M, std::size_t p) {
  MixedCycleReport r;
  r.p = p;
  const Presentation& P = M.presentation();
  if (!P.find_atom("a") || !P.find_atom("b") || !P.find_atom("c") || P.rank() != 3) {
    r.detail = "requires the three-atom presentation with atoms a, b, c";
    return r;
  }
  auto E = [&](const char* s) { return M.parse(s); };
  const std::vector<Move> cycle{{MoveKind::Left, 2, E("b")},  {MoveKind::Right, 3, E("a")},
                                {MoveKind::Left, 2, E("c")},  {MoveKind::Right, 3, E("b")},
                                {MoveKind::Left, 2, E("a")},  {MoveKind::Right, 3, E("c")}};
  Multifraction cur = parse_multifraction(M, "1/a/bc/1");
  try {
    for (std::size_t k = 0; k < p; ++k) cur = replay(M, cur, cycle);
  } catch (const std::exception& e) {
    r.detail = e.what();
    return r;
  }
  r.result = cur;
  Element left = M.one(), right = M.one();
  for (std::size_t k = 0; k < p; ++k) {
    left = M.multiply(left, E("bacbac"));
    right = M.multiply(right, E("acbacb"));
  }
  Multifraction expected = make_multifraction(M, Sign::Pos, std::vector<Element>{left, E("a"), E("bc"), right});
  r.matches = cur == expected;
  r.detail = "expected " + format_multifraction(M, expected);
  return r;
}

Semi4Case semi4_case(const Monoid& M, std::size_t ray_length, std::uint64_t seed, Sign first) {
  Rng rng(seed);
  std::vector<Element> x;
  for (int k = 0; k < 4; ++k) x.push_back(random_element(M, ray_length, rng));
  Semi4Case c;
  Element a1, a5, x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  if (first == Sign::Pos) {
    Element prod = M.multiply(x1, x2);
    auto divs = M.divisors(prod, Side::Right);
    a1 = divs[std::uniform_int_distribution<std::size_t>(0, divs.size() - 1)(rng)];
    a5 = *M.divides(a1, prod, Side::Right);
    c.a = make_multifraction(M, Sign::Pos, std::vector<Element>{a1, M.multiply(x3, x2), M.multiply(x3, x4),
                                                                M.multiply(x1, x4), a5});
  } else {
    Element prod = M.multiply(x2, x1);
    auto divs = M.divisors(prod, Side::Left);
    a1 = divs[std::uniform_int_distribution<std::size_t>(0, divs.size() - 1)(rng)];
    a5 = *M.divides(a1, prod, Side::Left);
    c.a = make_multifraction(M, Sign::Neg, std::vector<Element>{a1, M.multiply(x2, x3), M.multiply(x4, x3),
                                                                M.multiply(x4, x1), a5});
  }
  const std::vector<Move> all{{MoveKind::Division, 2, x3}, {MoveKind::Division, 3, x4},
                              {MoveKind::Left, 3, x1},     {MoveKind::Left, 4, a5},
                              {MoveKind::Division, 1, a1}, {MoveKind::Division, 2, a5}};
  for (auto& m : all)
    if (!m.x.is_one()) c.moves.push_back(m);
  try {
    c.reaches_one = replay(M, c.a, c.moves).is_trivial();
  } catch (const std::exception&) {
    c.reaches_one = false;
  }
  return c;
}

const char* conjecture_name(Conjecture c) {
  switch (c) {
    case Conjecture::A: return "A";
    case Conjecture::B: return "B";
    case Conjecture::C: return "C";
    case Conjecture::Cunif: return "Cunif";
    case Conjecture::Depth4: return "depth4";
  }
  return "?";
}

std::optional<Conjecture> conjecture_from_name(const std::string& s) {
  for (Conjecture c : {Conjecture::A, Conjecture::B, Conjecture::C, Conjecture::Cunif, Conjecture::Depth4})
    if (s == conjecture_name(c)) return c;
  return std::nullopt;
}

namespace {

struct TrialOutcome {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::size_t moves = 0;
  nlohmann::json record;
  nlohmann::json dump;
};

TrialOutcome run_trial(const Monoid& M, const CampaignConfig& cfg, std::uint64_t seed) {
  auto t0 = Clock::now();
  TrialOutcome out;
  Rng rng(seed);
  nlohmann::json rec{{"seed", seed}};
  switch (cfg.conjecture) {
    case Conjecture::A:
    case Conjecture::B: {
      Generated g = gen_unital(M, cfg.depth, cfg.length, seed);
      rec["input"] = format_multifraction(M, g.a);
      rec["generator"] = certificate_kind_name(g.certificate.kind);
      Verdict v = cfg.conjecture == Conjecture::A ? test_conjecture_A(M, g.a, g.certificate, cfg.caps)
                                                  : test_conjecture_B(M, g.a, g.certificate);
      out.status = v.status;
      if (cfg.conjecture == Conjecture::A) {
        out.moves = v.trace.size();
        rec["moves"] = nlohmann::json::array();
        for (auto& m : v.trace) rec["moves"].push_back(format_move(M, m));
      } else {
        out.moves = 0;
        rec["moves"] = v.evidence;
      }
      if (v.status == VerdictStatus::Counterexample) {
        out.dump["certificate"] = to_json(M, g.certificate);
        out.dump["input"] = rec["input"];
        out.dump["detail"] = v.detail;
        out.dump["evidence"] = v.evidence;
      }
      break;
    }
    case Conjecture::Depth4: {
      Multifraction a;
      if (rng() % 2) a = gen_unital(M, 4, cfg.length, rng()).a;
      else a = random_multifraction(M, 4, cfg.length, rng);
      rec["input"] = format_multifraction(M, a);
      Depth4Report r = check_depth4_equivalences(M, a, cfg.caps);
      rec["moves"] = {{"reduces_to_one", tri_name(r.reduces_to_one)},
                      {"red_t_one", r.red_tame_one},
                      {"cross", r.has_cross}};
      out.status = r.reduces_to_one == Tri::Inconclusive ? VerdictStatus::Inconclusive
                   : r.agree                             ? VerdictStatus::Confirmed
                                                         : VerdictStatus::Counterexample;
      if (out.status == VerdictStatus::Counterexample) out.dump = rec;
      break;
    }
    case Conjecture::C: {
      Multifraction a = random_multifraction(M, cfg.depth, cfg.length, rng);
      rec["input"] = format_multifraction(M, a);
      try {
        ReductGraph R = reduct_graph(M, a, Direction::Right, Granularity::Atomic, cfg.caps.node_cap);
        std::uniform_int_distribution<std::size_t> pick(0, R.nodes.size() - 1);
        const Multifraction b = R.nodes[pick(rng)], c = R.nodes[pick(rng)];
        Verdict v = test_cross_confluence_pair(M, b, c, a, cfg.caps);
        rec["moves"] = {{"b", format_multifraction(M, b)}, {"c", format_multifraction(M, c)}};
        if (v.witness) rec["moves"]["d"] = format_multifraction(M, *v.witness);
        out.status = v.status;
        if (v.status == VerdictStatus::Counterexample) out.dump = rec;
      } catch (const CapExceeded& e) {
        out.status = VerdictStatus::Inconclusive;
        rec["moves"] = e.what();
      }
      break;
    }
    case Conjecture::Cunif: {
      Multifraction a = random_multifraction(M, cfg.depth, cfg.length, rng);
      rec["input"] = format_multifraction(M, a);
      CUniformReport r = test_conjecture_C_uniform(M, a, cfg.caps);
      out.status = r.verdict.status;
      rec["moves"] = {{"right_reducts", r.right_reducts},
                      {"witnesses", r.witnesses.size()},
                      {"red_t_is_witness", r.red_t_is_witness}};
      if (out.status == VerdictStatus::Counterexample) out.dump = rec;
      break;
    }
  }
  rec["verdict"] = verdict_name(out.status);
  rec["millis"] = millis_since(t0);
  out.record = std::move(rec);
  return out;
}

}  // namespace

CampaignReport run_campaign(const Monoid& M, const CampaignConfig& cfg) {
  auto t0 = Clock::now();
  CampaignReport rep;
  rep.seed = cfg.seed;
  std::vector<std::optional<TrialOutcome>> results(cfg.trials);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&]() {
    while (!stop) {
      std::size_t k = next++;
      if (k >= cfg.trials) break;
      results[k] = run_trial(M, cfg, derive_seed(cfg.seed, k));
      if (results[k]->status == VerdictStatus::Counterexample) stop = true;
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, cfg.trials));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::ofstream log;
  if (!cfg.log_path.empty()) log.open(cfg.log_path);
  std::vector<std::size_t> moves;
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (!results[k]) continue;
    const TrialOutcome& o = *results[k];
    ++rep.trials;
    switch (o.status) {
      case VerdictStatus::Confirmed: ++rep.confirmed; break;
      case VerdictStatus::Counterexample: ++rep.counterexamples; break;
      case VerdictStatus::Inconclusive: ++rep.inconclusive; break;
    }
    moves.push_back(o.moves);
    rep.records.push_back(o.record);
    if (log) log << o.record.dump() << "\n";
    if (o.status == VerdictStatus::Counterexample) {
      if (!rep.counterexample) {
        rep.counterexample = o.dump;
        if (!cfg.dump_dir.empty()) {
          std::filesystem::create_directories(cfg.dump_dir);
          std::ofstream f(cfg.dump_dir + "/counterexample_" + std::to_string(k) + ".json");
          f << o.dump.dump(2) << "\n";
          if (o.dump.contains("evidence") && o.dump["evidence"].contains("dot")) {
            std::ofstream g(cfg.dump_dir + "/counterexample_" + std::to_string(k) + ".dot");
            g << o.dump["evidence"]["dot"].get<std::string>();
          }
        }
      }
      break;
    }
  }
  if (!moves.empty()) {
    rep.min_moves = *std::min_element(moves.begin(), moves.end());
    rep.max_moves = *std::max_element(moves.begin(), moves.end());
    rep.mean_moves = static_cast<double>(std::accumulate(moves.begin(), moves.end(), std::size_t{0})) /
                     static_cast<double>(moves.size());
  }
  rep.millis = millis_since(t0);
  return rep;
}

nlohmann::json to_json(const CampaignReport& r) {
  nlohmann::json j{{"trials", r.trials},       {"confirmed", r.confirmed},
                   {"counterexamples", r.counterexamples}, {"inconclusive", r.inconclusive},
                   {"min_moves", r.min_moves}, {"max_moves", r.max_moves},
                   {"mean_moves", r.mean_moves}, {"millis", r.millis},
                   {"seed", r.seed}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

}  // namespace multired
