// SPDX-License-Identifier: MIT
#include "multired/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace multired {

namespace {

void require_conclusive(const LcmResult& r) {
  if (r.status == Tri::Inconclusive)
    throw CapExceeded(CapExceeded::Kind::Reversing, "lcm undecided within caps");
}

// x*y on the left, y*x on the right: extends x away from the divided entry.
Element extend(const Monoid& M, const Element& x, const Element& y, Side side) {
  return side == Side::Left ? M.multiply(x, y) : M.multiply(y, x);
}

void check_element(const Element& x) {
  if (x.is_one()) throw std::invalid_argument("reducer must be nontrivial");
}

}  // namespace

std::string format_move(const Monoid& M, const Move& m, bool unicode) {
  std::string k = m.kind == MoveKind::Left ? "R" : m.kind == MoveKind::Division ? "D"
                                                  : (unicode ? "R\xcc\x83" : "R~");
  return k + "(" + std::to_string(m.level) + "," + M.format(m.x) + ")";
}

nlohmann::json to_json(const Monoid& M, const Move& m) {
  return {{"kind", m.kind == MoveKind::Left ? "left" : m.kind == MoveKind::Right ? "right" : "division"},
          {"level", m.level},
          {"x", M.format(m.x)}};
}

std::optional<MoveOutcome> apply_left_ex(const Monoid& M, const Multifraction& a, std::size_t i,
                                         const Element& x) {
  const std::size_t n = a.depth();
  if (i < 1 || i >= n) throw std::invalid_argument("left reduction level out of range");
  check_element(x);
  const Side side = due_side(a, i);
  auto top = M.divides(x, a.at(i + 1), side);
  if (!top) return std::nullopt;
  MoveOutcome out{a, M.one()};
  out.b.at(i + 1) = *top;
  if (i == 1) {
    auto bottom = M.divides(x, a.at(1), side);
    if (!bottom) return std::nullopt;
    out.b.at(1) = *bottom;
    return out;
  }
  const Side lside = opposite(side);
  LcmResult r = M.lcm(x, a.at(i), lside);
  require_conclusive(r);
  if (!r) return std::nullopt;
  out.b.at(i) = r.compB;
  out.carried = r.compA;
  out.b.at(i - 1) = lside == Side::Right ? M.multiply(a.at(i - 1), r.compA)
                                         : M.multiply(r.compA, a.at(i - 1));
  return out;
}

std::optional<MoveOutcome> apply_right_ex(const Monoid& M, const Multifraction& a, std::size_t i,
                                          const Element& x) {
  const std::size_t n = a.depth();
  if (i < 1 || i > n) throw std::invalid_argument("right reduction level out of range");
  check_element(x);
  if (i == 1) return std::nullopt;
  const Side side = opposite(due_side(a, i));
  auto low = M.divides(x, a.at(i - 1), side);
  if (!low) return std::nullopt;
  MoveOutcome out{a, M.one()};
  out.b.at(i - 1) = *low;
  if (i == n) {
    auto last = M.divides(x, a.at(n), side);
    if (!last) return std::nullopt;
    out.b.at(n) = *last;
    return out;
  }
  const Side lside = opposite(side);
  LcmResult r = M.lcm(x, a.at(i), lside);
  require_conclusive(r);
  if (!r) return std::nullopt;
  out.b.at(i) = r.compB;
  out.carried = r.compA;
  out.b.at(i + 1) = lside == Side::Right ? M.multiply(a.at(i + 1), r.compA)
                                         : M.multiply(r.compA, a.at(i + 1));
  return out;
}

std::optional<Multifraction> apply_left(const Monoid& M, const Multifraction& a, std::size_t i,
                                        const Element& x) {
  auto r = apply_left_ex(M, a, i, x);
  if (!r) return std::nullopt;
  return std::move(r->b);
}

std::optional<Multifraction> apply_right(const Monoid& M, const Multifraction& a, std::size_t i,
                                         const Element& x) {
  auto r = apply_right_ex(M, a, i, x);
  if (!r) return std::nullopt;
  return std::move(r->b);
}

std::optional<Multifraction> apply_division(const Monoid& M, const Multifraction& a,
                                            std::size_t i, const Element& x) {
  const std::size_t n = a.depth();
  if (i < 1 || i >= n) throw std::invalid_argument("division level out of range");
  check_element(x);
  const Side side = due_side(a, i);
  auto qi = M.divides(x, a.at(i), side);
  if (!qi) return std::nullopt;
  auto qn = M.divides(x, a.at(i + 1), side);
  if (!qn) return std::nullopt;
  Multifraction b = a;
  b.at(i) = *qi;
  b.at(i + 1) = *qn;
  return b;
}

std::optional<Multifraction> apply_move(const Monoid& M, const Multifraction& a, const Move& m) {
  switch (m.kind) {
    case MoveKind::Left: return apply_left(M, a, m.level, m.x);
    case MoveKind::Right: return apply_right(M, a, m.level, m.x);
    case MoveKind::Division: return apply_division(M, a, m.level, m.x);
  }
  return std::nullopt;
}

namespace {

bool others_unchanged(const Multifraction& a, const Multifraction& b, std::size_t lo,
                      std::size_t hi) {
  if (a.depth() != b.depth() || a.first_sign != b.first_sign) return false;
  for (std::size_t k = 1; k <= a.depth(); ++k)
    if ((k < lo || k > hi) && a.at(k) != b.at(k)) return false;
  return true;
}

}  // namespace

bool verify_left(const Monoid& M, const Multifraction& a, std::size_t i, const Element& x,
                 const MoveOutcome& out) {
  const Multifraction& b = out.b;
  const Side side = due_side(a, i);
  if (extend(M, x, b.at(i + 1), side) != a.at(i + 1)) return false;
  if (i == 1) return extend(M, x, b.at(1), side) == a.at(1) && others_unchanged(a, b, 1, 2);
  const Side lside = opposite(side);
  const Element& xp = out.carried;
  if (lside == Side::Right) {
    if (M.multiply(x, b.at(i)) != M.multiply(a.at(i), xp)) return false;
    if (b.at(i - 1) != M.multiply(a.at(i - 1), xp)) return false;
  } else {
    if (M.multiply(b.at(i), x) != M.multiply(xp, a.at(i))) return false;
    if (b.at(i - 1) != M.multiply(xp, a.at(i - 1))) return false;
  }
  return others_unchanged(a, b, i - 1, i + 1);
}

bool verify_right(const Monoid& M, const Multifraction& a, std::size_t i, const Element& x,
                  const MoveOutcome& out) {
  const Multifraction& b = out.b;
  const std::size_t n = a.depth();
  const Side side = opposite(due_side(a, i));
  if (extend(M, x, b.at(i - 1), side) != a.at(i - 1)) return false;
  if (i == n) return extend(M, x, b.at(n), side) == a.at(n) && others_unchanged(a, b, n - 1, n);
  const Side lside = opposite(side);
  const Element& xp = out.carried;
  if (lside == Side::Right) {
    if (M.multiply(x, b.at(i)) != M.multiply(a.at(i), xp)) return false;
    if (b.at(i + 1) != M.multiply(a.at(i + 1), xp)) return false;
  } else {
    if (M.multiply(b.at(i), x) != M.multiply(xp, a.at(i))) return false;
    if (b.at(i + 1) != M.multiply(xp, a.at(i + 1))) return false;
  }
  return others_unchanged(a, b, i - 1, i + 1);
}

namespace {

bool reducer_applies(const Monoid& M, const Multifraction& a, std::size_t i, const Element& x,
                     Side side) {
  if (!M.divides(x, a.at(i + 1), side)) return false;
  if (i == 1) return M.divides(x, a.at(1), side).has_value();
  LcmResult r = M.lcm(x, a.at(i), opposite(side));
  require_conclusive(r);
  return r.status == Tri::Yes;
}

}  // namespace

std::vector<Element> reducers(const Monoid& M, const Multifraction& a, std::size_t i,
                              ReducerFilter filter) {
  if (i < 1 || i >= a.depth()) throw std::invalid_argument("reducer level out of range");
  const Side side = due_side(a, i);
  std::vector<Element> out;
  if (filter == ReducerFilter::Atomic) {
    for (AtomId s : M.atom_divisors(a.at(i + 1), side))
      if (reducer_applies(M, a, i, M.atom(s), side)) out.push_back(M.atom(s));
    return out;
  }
  std::vector<Element> all;
  for (auto& d : M.divisors(a.at(i + 1), side))
    if (!d.is_one() && reducer_applies(M, a, i, d, side)) all.push_back(d);
  if (filter == ReducerFilter::All) return all;
  std::set<Element> members(all.begin(), all.end());
  std::vector<Element> maximal;
  for (auto& x : all) {
    bool is_max = true;
    for (std::size_t s = 0; s < M.rank() && is_max; ++s)
      if (members.count(extend(M, x, M.atom(static_cast<AtomId>(s)), side))) is_max = false;
    if (is_max) maximal.push_back(x);
  }
  if (filter == ReducerFilter::Maximal) return maximal;
  for (auto& x : all) {
    bool tame = std::all_of(maximal.begin(), maximal.end(),
                            [&](const Element& m) { return M.divides(x, m, side).has_value(); });
    if (tame) out.push_back(x);
  }
  return out;
}

std::vector<Element> right_reducers(const Monoid& M, const Multifraction& a, std::size_t i,
                                    ReducerFilter filter) {
  const std::size_t n = a.depth();
  if (i < 1 || i > n) throw std::invalid_argument("right reducer level out of range");
  if (i == 1) return {};
  return reducers(M, inverse(a), n + 1 - i, filter);
}

Element greatest_tame_reducer(const Monoid& M, const Multifraction& a, std::size_t i) {
  auto maximal = reducers(M, a, i, ReducerFilter::Maximal);
  if (maximal.empty()) return M.one();
  const Side side = due_side(a, i);
  Element g = maximal.front();
  for (std::size_t k = 1; k < maximal.size(); ++k) g = M.gcd(g, maximal[k], side);
  return g;
}

Multifraction div_max(const Monoid& M, const Multifraction& a, std::size_t i) {
  if (i < 1 || i >= a.depth()) throw std::invalid_argument("division level out of range");
  Element g = M.gcd(a.at(i), a.at(i + 1), due_side(a, i));
  if (g.is_one()) return a;
  return *apply_division(M, a, i, g);
}

Multifraction derdiv(const Monoid& M, const Multifraction& a) {
  Multifraction b = a;
  for (std::size_t i = a.depth(); i-- > 1;) b = div_max(M, b, i);
  return b;
}

std::vector<std::size_t> universal_sequence(std::size_t n) {
  std::vector<std::size_t> u;
  while (n >= 2) {
    for (std::size_t i = 1; i < n; ++i) u.push_back(i);
    n -= 2;
  }
  return u;
}

Multifraction red_tame(const Monoid& M, const Multifraction& a) {
  Multifraction b = a;
  for (std::size_t i : universal_sequence(a.depth())) {
    Element x = greatest_tame_reducer(M, b, i);
    if (!x.is_one()) b = *apply_left(M, b, i, x);
  }
  return b;
}

Multifraction red_tame_fixpoint(const Monoid& M, const Multifraction& a, std::size_t* passes) {
  Multifraction cur = a;
  std::size_t k = 0;
  while (true) {
    Multifraction next = red_tame(M, cur);
    if (next == cur) break;
    cur = std::move(next);
    ++k;
  }
  if (passes) *passes = k;
  return cur;
}

bool is_prime(const Monoid& M, const Multifraction& a) {
  for (std::size_t i = 1; i < a.depth(); ++i)
    if (!M.gcd(a.at(i), a.at(i + 1), due_side(a, i)).is_one()) return false;
  return true;
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::LowLex: return "low_lex";
    case Strategy::LowAntilex: return "low_antilex";
    case Strategy::HighLex: return "high_lex";
    case Strategy::HighAntilex: return "high_antilex";
  }
  return "?";
}

std::optional<Strategy> strategy_from_name(const std::string& s) {
  for (Strategy t : all_strategies())
    if (s == strategy_name(t)) return t;
  return std::nullopt;
}

const std::vector<Strategy>& all_strategies() {
  static const std::vector<Strategy> v{Strategy::LowLex, Strategy::LowAntilex, Strategy::HighLex,
                                       Strategy::HighAntilex};
  return v;
}

namespace {

std::vector<std::size_t> move_levels(std::size_t n, Direction dir) {
  std::vector<std::size_t> lv;
  if (dir == Direction::Left) {
    for (std::size_t i = 1; i + 1 <= n; ++i) lv.push_back(i);
  } else {
    for (std::size_t i = 2; i <= n; ++i) lv.push_back(i);
  }
  return lv;
}

}  // namespace

ReductionTrace reduce(const Monoid& M, const Multifraction& a, Strategy strategy, Direction dir) {
  ReductionTrace t{a, {}, a};
  const std::size_t n = a.depth();
  auto levels = move_levels(n, dir);
  if (strategy == Strategy::HighLex || strategy == Strategy::HighAntilex)
    std::reverse(levels.begin(), levels.end());
  std::vector<AtomId> atoms;
  for (std::size_t s = 0; s < M.rank(); ++s) atoms.push_back(static_cast<AtomId>(s));
  if (strategy == Strategy::LowAntilex || strategy == Strategy::HighAntilex)
    std::reverse(atoms.begin(), atoms.end());
  StepBound bound = step_bound(M, dir == Direction::Left ? a : inverse(a));
  Multifraction cur = a;
  while (true) {
    bool moved = false;
    for (std::size_t i : levels) {
      for (AtomId s : atoms) {
        auto next = dir == Direction::Left ? apply_left(M, cur, i, M.atom(s))
                                           : apply_right(M, cur, i, M.atom(s));
        if (!next) continue;
        t.moves.push_back({dir == Direction::Left ? MoveKind::Left : MoveKind::Right, i, M.atom(s)});
        cur = std::move(*next);
        moved = true;
        break;
      }
      if (moved) break;
    }
    if (!moved) break;
    if (!bound.at_least(t.moves.size()))
      throw std::logic_error("reduction exceeded the step bound");
  }
  t.end = cur;
  return t;
}

std::vector<Move> merge_moves(const Monoid& M, const Multifraction& start,
                              const std::vector<Move>& moves) {
  std::vector<Move> out;
  for (const Move& m : moves) {
    if (!out.empty() && out.back().kind == m.kind && out.back().level == m.level) {
      Side side = due_side(start, m.level);
      if (m.kind == MoveKind::Right) side = opposite(side);
      out.back().x = extend(M, out.back().x, m.x, side);
    } else {
      out.push_back(m);
    }
  }
  return out;
}

Multifraction replay(const Monoid& M, const Multifraction& start, const std::vector<Move>& moves) {
  Multifraction cur = start;
  for (const Move& m : moves) {
    auto next = apply_move(M, cur, m);
    if (!next) throw std::invalid_argument("move " + format_move(M, m) + " does not apply");
    cur = std::move(*next);
  }
  return cur;
}

std::optional<std::size_t> ReductGraph::find(const Multifraction& a) const {
  auto it = index.find(a);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> ReductGraph::sinks() const {
  std::vector<char> has_out(nodes.size(), 0);
  for (auto& e : edges) has_out[e.from] = 1;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (!has_out[k]) out.push_back(k);
  return out;
}

ReductGraph reduct_graph(const Monoid& M, const Multifraction& a, Direction dir, Granularity g,
                         std::size_t node_cap) {
  ReductGraph G;
  G.dir = dir;
  G.nodes.push_back(a);
  G.index.emplace(a, 0);
  const MoveKind kind = dir == Direction::Left ? MoveKind::Left : MoveKind::Right;
  const auto levels = move_levels(a.depth(), dir);
  for (std::size_t k = 0; k < G.nodes.size(); ++k) {
    const Multifraction u = G.nodes[k];
    for (std::size_t i : levels) {
      std::vector<Element> xs;
      try {
        if (g == Granularity::Atomic) {
          for (std::size_t s = 0; s < M.rank(); ++s) xs.push_back(M.atom(static_cast<AtomId>(s)));
        } else {
          xs = dir == Direction::Left ? reducers(M, u, i, ReducerFilter::Maximal)
                                      : right_reducers(M, u, i, ReducerFilter::Maximal);
        }
      } catch (const CapExceeded&) {
        ++G.unknown;
        G.complete = false;
        continue;
      }
      for (const Element& x : xs) {
        std::optional<Multifraction> v;
        try {
          v = dir == Direction::Left ? apply_left(M, u, i, x) : apply_right(M, u, i, x);
        } catch (const CapExceeded&) {
          ++G.unknown;
          G.complete = false;
          continue;
        }
        if (!v) continue;
        auto it = G.index.find(*v);
        std::size_t to;
        if (it == G.index.end()) {
          if (G.nodes.size() >= node_cap)
            throw CapExceeded(CapExceeded::Kind::Nodes,
                              "reduct graph exceeds " + std::to_string(node_cap) + " nodes");
          to = G.nodes.size();
          G.index.emplace(*v, to);
          G.nodes.push_back(std::move(*v));
        } else {
          to = it->second;
        }
        G.edges.push_back({k, to, {kind, i, x}});
      }
    }
  }
  return G;
}

std::vector<Multifraction> irreducible_reducts(const Monoid& M, const Multifraction& a,
                                               Direction dir, std::size_t node_cap) {
  ReductGraph G = reduct_graph(M, a, dir, Granularity::Atomic, node_cap);
  std::vector<Multifraction> out;
  for (std::size_t k : G.sinks()) out.push_back(G.nodes[k]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_dot(const Monoid& M, const ReductGraph& g) {
  std::string out = g.dir == Direction::Left ? "digraph left_reducts {\n" : "digraph right_reducts {\n";
  out += "  node [shape=box];\n";
  auto sinks = g.sinks();
  std::unordered_set<std::size_t> sink_set(sinks.begin(), sinks.end());
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    out += "  n" + std::to_string(k) + " [label=\"" + format_multifraction(M, g.nodes[k]) + "\"";
    if (k == 0) out += ", style=bold";
    if (sink_set.count(k)) out += ", peripheries=2";
    out += "];\n";
  }
  for (auto& e : g.edges)
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
           format_move(M, e.move, true) + "\"];\n";
  out += "}\n";
  return out;
}

nlohmann::json to_json(const Monoid& M, const ReductGraph& g) {
  nlohmann::json j;
  j["direction"] = g.dir == Direction::Left ? "left" : "right";
  j["root"] = format_multifraction(M, g.root());
  j["nodes"] = nlohmann::json::array();
  for (auto& n : g.nodes) j["nodes"].push_back(format_multifraction(M, n));
  j["edges"] = nlohmann::json::array();
  for (auto& e : g.edges)
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"move", to_json(M, e.move)}});
  j["irreducible"] = nlohmann::json::array();
  for (auto k : g.sinks()) j["irreducible"].push_back(format_multifraction(M, g.nodes[k]));
  j["unknown"] = g.unknown;
  j["complete"] = g.complete;
  return j;
}

StepBound step_bound_values(const std::vector<std::size_t>& lengths, std::size_t C,
                            std::size_t max_bits) {
  StepBound b;
  if (lengths.empty()) {
    b.value = 0;
    b.text = "0";
    return b;
  }
  auto show = [](const mpz_class& v) {
    std::string s = v.get_str();
    return s.size() <= 60 ? s : "<" + std::to_string(s.size()) + "-digit integer>";
  };
  b.value = lengths.back() + 2;
  b.text = show(b.value);
  const double log2C = std::log2(static_cast<double>(std::max<std::size_t>(C, 1)));
  for (std::size_t k = lengths.size() - 1; k-- > 0;) {
    const std::string factor = std::to_string(lengths[k] + 1);
    if (b.exact && C <= 1) {
      b.value = lengths[k] + 1;
    } else if (b.exact && b.value.fits_ulong_p() &&
               static_cast<double>(b.value.get_ui()) * log2C <= static_cast<double>(max_bits)) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), C, b.value.get_ui());
      b.value = mpz_class(static_cast<unsigned long>(lengths[k] + 1)) * p;
    } else {
      b.exact = false;
    }
    if (b.exact) {
      b.text = show(b.value);
    } else {
      b.text = factor + "*" + std::to_string(C) + "^(" + b.text + ")";
      b.value = 0;
    }
  }
  return b;
}

StepBound step_bound(const Monoid& M, const Multifraction& a, std::size_t max_bits) {
  std::vector<std::size_t> lengths;
  for (auto& e : a.entries) lengths.push_back(e.length());
  return step_bound_values(lengths, M.C(), max_bits);
}

std::optional<std::vector<ZigzagStep>> connect_by_maximal_zigzag(
    const Monoid& M, const Multifraction& b, const Multifraction& c, std::size_t budget,
    const std::optional<Multifraction>& source) {
  if (b == c) return std::vector<ZigzagStep>{};
  if (budget == 0) return std::nullopt;
  std::vector<Multifraction> universe;
  std::unordered_map<Multifraction, std::size_t, MultifractionHash> idx;
  auto absorb = [&](const Multifraction& root) {
    ReductGraph G = reduct_graph(M, root, Direction::Left, Granularity::Atomic);
    for (auto& n : G.nodes)
      if (idx.emplace(n, universe.size()).second) universe.push_back(n);
  };
  if (source) {
    absorb(*source);
  } else {
    absorb(b);
    absorb(c);
  }
  if (!idx.count(b) || !idx.count(c)) return std::nullopt;
  struct Arc {
    std::size_t to;
    Move move;
    bool forward;
  };
  std::vector<std::vector<Arc>> adj(universe.size());
  for (std::size_t k = 0; k < universe.size(); ++k) {
    const Multifraction& u = universe[k];
    for (std::size_t i = 1; i < u.depth(); ++i) {
      for (auto& x : reducers(M, u, i, ReducerFilter::Maximal)) {
        auto v = apply_left(M, u, i, x);
        if (!v) continue;
        auto it = idx.find(*v);
        if (it == idx.end()) continue;
        Move m{MoveKind::Left, i, x};
        adj[k].push_back({it->second, m, true});
        adj[it->second].push_back({k, m, false});
      }
    }
  }
  const std::size_t from = idx.at(b), target = idx.at(c);
  std::vector<long> parent(universe.size(), -1);
  std::vector<const Arc*> via(universe.size(), nullptr);
  std::vector<char> seen(universe.size(), 0);
  std::deque<std::size_t> queue{from};
  seen[from] = 1;
  std::size_t expanded = 0;
  while (!queue.empty() && expanded < budget) {
    std::size_t u = queue.front();
    queue.pop_front();
    ++expanded;
    for (const Arc& arc : adj[u]) {
      if (seen[arc.to]) continue;
      seen[arc.to] = 1;
      parent[arc.to] = static_cast<long>(u);
      via[arc.to] = &arc;
      if (arc.to == target) {
        std::vector<ZigzagStep> path;
        for (std::size_t v = target; v != from; v = static_cast<std::size_t>(parent[v])) {
          const Arc* a = via[v];
          std::size_t p = static_cast<std::size_t>(parent[v]);
          path.push_back({universe[p], universe[v], a->move, a->forward});
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(arc.to);
    }
  }
  return std::nullopt;
}

}  // namespace multired
