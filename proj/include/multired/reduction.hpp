// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "multired/multifraction.hpp"

namespace multired {

enum class MoveKind { Left, Right, Division };

struct Move {
  MoveKind kind = MoveKind::Left;
  std::size_t level = 1;
  Element x;
  bool operator==(const Move& o) const { return kind == o.kind && level == o.level && x == o.x; }
};

// "R(i,x)", "R~(i,x)" or "D(i,x)"; unicode selects the combining tilde.
std::string format_move(const Monoid& M, const Move& m, bool unicode = false);
nlohmann::json to_json(const Monoid& M, const Move& m);

// Side on which x must divide a_{i+1} for R_{i,x}.
inline Side due_side(const Multifraction& a, std::size_t i) {
  return a.positive_at(i) ? Side::Right : Side::Left;
}

// A move outcome together with the element x' carried to the next entry.
struct MoveOutcome {
  Multifraction b;
  Element carried;
};

// Throws CapExceeded when an lcm is inconclusive.
std::optional<MoveOutcome> apply_left_ex(const Monoid& M, const Multifraction& a, std::size_t i,
                                         const Element& x);
std::optional<MoveOutcome> apply_right_ex(const Monoid& M, const Multifraction& a, std::size_t i,
                                          const Element& x);
std::optional<Multifraction> apply_left(const Monoid& M, const Multifraction& a, std::size_t i,
                                        const Element& x);
std::optional<Multifraction> apply_right(const Monoid& M, const Multifraction& a, std::size_t i,
                                         const Element& x);
std::optional<Multifraction> apply_division(const Monoid& M, const Multifraction& a,
                                            std::size_t i, const Element& x);
std::optional<Multifraction> apply_move(const Monoid& M, const Multifraction& a, const Move& m);

// Checks the defining equalities of the applied case on the entries.
bool verify_left(const Monoid& M, const Multifraction& a, std::size_t i, const Element& x,
                 const MoveOutcome& out);
bool verify_right(const Monoid& M, const Multifraction& a, std::size_t i, const Element& x,
                  const MoveOutcome& out);

enum class ReducerFilter { Atomic, All, Maximal, Tame };

std::vector<Element> reducers(const Monoid& M, const Multifraction& a, std::size_t i,
                              ReducerFilter filter);
// Reducers x with apply_right(a, i, x) defined.
std::vector<Element> right_reducers(const Monoid& M, const Multifraction& a, std::size_t i,
                                    ReducerFilter filter);
Element greatest_tame_reducer(const Monoid& M, const Multifraction& a, std::size_t i);

Multifraction div_max(const Monoid& M, const Multifraction& a, std::size_t i);
Multifraction derdiv(const Monoid& M, const Multifraction& a);
std::vector<std::size_t> universal_sequence(std::size_t n);
Multifraction red_tame(const Monoid& M, const Multifraction& a);
// Iterates red_tame until it stabilizes; the number of passes is reported.
Multifraction red_tame_fixpoint(const Monoid& M, const Multifraction& a, std::size_t* passes = nullptr);
bool is_prime(const Monoid& M, const Multifraction& a);

enum class Strategy { LowLex, LowAntilex, HighLex, HighAntilex };
enum class Direction { Left, Right };

const char* strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(const std::string& s);
const std::vector<Strategy>& all_strategies();

struct ReductionTrace {
  Multifraction start;
  std::vector<Move> moves;
  Multifraction end;
};

// Applies the first applicable atomic move per strategy until irreducible.
ReductionTrace reduce(const Monoid& M, const Multifraction& a, Strategy strategy = Strategy::LowLex,
                      Direction dir = Direction::Left);
// Merges consecutive same-level moves of the same kind into one move.
std::vector<Move> merge_moves(const Monoid& M, const Multifraction& start,
                              const std::vector<Move>& moves);
// Throws std::invalid_argument when a move does not apply.
Multifraction replay(const Monoid& M, const Multifraction& start, const std::vector<Move>& moves);

enum class Granularity { Atomic, Maximal };

struct ReductGraph {
  struct Edge {
    std::size_t from = 0, to = 0;
    Move move;
  };
  Direction dir = Direction::Left;
  std::vector<Multifraction> nodes;
  std::unordered_map<Multifraction, std::size_t, MultifractionHash> index;
  std::vector<Edge> edges;
  // Moves whose applicability could not be decided within caps.
  std::size_t unknown = 0;
  bool complete = true;

  const Multifraction& root() const { return nodes.front(); }
  std::optional<std::size_t> find(const Multifraction& a) const;
  std::vector<std::size_t> sinks() const;
  bool contains(const Multifraction& a) const { return index.count(a) != 0; }
};

// Throws CapExceeded(Nodes) when node_cap is exceeded.
ReductGraph reduct_graph(const Monoid& M, const Multifraction& a, Direction dir = Direction::Left,
                         Granularity g = Granularity::Atomic, std::size_t node_cap = 200000);
std::vector<Multifraction> irreducible_reducts(const Monoid& M, const Multifraction& a,
                                               Direction dir = Direction::Left,
                                               std::size_t node_cap = 200000);
std::string to_dot(const Monoid& M, const ReductGraph& g);
nlohmann::json to_json(const Monoid& M, const ReductGraph& g);

// F_n(lambda(a_1), ..., lambda(a_n)); exact when it fits in max_bits, symbolic otherwise.
struct StepBound {
  bool exact = true;
  mpz_class value;
  std::string text;
  bool at_least(std::uint64_t k) const { return !exact || value >= mpz_class(std::to_string(k)); }
};
StepBound step_bound(const Monoid& M, const Multifraction& a, std::size_t max_bits = 1u << 20);
StepBound step_bound_values(const std::vector<std::size_t>& lengths, std::size_t C,
                            std::size_t max_bits = 1u << 20);

struct ZigzagStep {
  Multifraction from, to;
  Move move;
  // True when the move is applied forward from "from" to "to".
  bool forward = true;
};

// Bounded search over maximal left reductions and their inverses inside the
// left reducts of source (or of b and c when no source is given).
std::optional<std::vector<ZigzagStep>> connect_by_maximal_zigzag(
    const Monoid& M, const Multifraction& b, const Multifraction& c, std::size_t budget,
    const std::optional<Multifraction>& source = std::nullopt);

}  // namespace multired
