// SPDX-License-Identifier: MIT
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace multired;
using namespace multired::test;

namespace {

std::set<std::string> formatted(const Ctx& c, const std::vector<Multifraction>& v) {
  std::set<std::string> s;
  for (auto& a : v) s.insert(c.F(a));
  return s;
}

std::set<std::string> formatted(const Ctx& c, const std::vector<Element>& v) {
  std::set<std::string> s;
  for (auto& a : v) s.insert(c.S(a));
  return s;
}

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("left reduction examples") {
    auto& c = A2();
    CHECK(c.F(*apply_left(c.M, c.P("1/c/aba"), 2, c.E("a"))) == "ac/ca/ba");
    CHECK(c.F(*apply_left(c.M, c.P("1/c/aba"), 2, c.E("b"))) == "bc/cb/ab");
    CHECK_FALSE(apply_left(c.M, c.P("1/c/aba"), 1, c.E("a")));
  }

  TEST_CASE("right reduction examples") {
    auto& c = A2();
    Multifraction b = *apply_left(c.M, c.P("1/a/bc/1"), 2, c.E("b"));
    CHECK(c.F(*apply_right(c.M, b, 3, c.E("a"))) == "ba/b/ca/ac");
    CHECK(c.F(*apply_right(c.M, c.P("a/a"), 2, c.E("a"))) == "1/1");
    CHECK_FALSE(apply_right(c.M, c.P("1/c/aba"), 2, c.E("a")));
    CHECK_FALSE(apply_right(c.M, c.P("a/a"), 1, c.E("a")));
  }

  TEST_CASE("division examples") {
    auto& b = B3();
    CHECK(b.F(*apply_division(b.M, b.P("a/aba/b"), 2, b.E("b"))) == "a/ab/1");
    CHECK(b.F(*apply_division(b.M, b.P("a/aba/b"), 1, b.E("a"))) == "1/ab/b");
    CHECK(b.F(*apply_division(b.M, b.P("a/a"), 1, b.E("a"))) == "1/1");
    CHECK_FALSE(apply_division(b.M, b.P("a/ab/1"), 2, b.E("b")));
  }

  TEST_CASE("moves are sound and preserve depth") {
    auto& c = A2();
    Rng rng(4);
    int applied = 0;
    for (int k = 0; k < 300; ++k) {
      Multifraction a = random_multifraction(c.M, 2 + rng() % 3, 8, rng, rng() % 2 ? Sign::Pos : Sign::Neg);
      std::size_t i = 1 + rng() % (a.depth() - 1);
      for (auto& x : reducers(c.M, a, i, ReducerFilter::All)) {
        auto out = apply_left_ex(c.M, a, i, x);
        REQUIRE(out);
        CHECK(verify_left(c.M, a, i, x, *out));
        CHECK(out->b.depth() == a.depth());
        ++applied;
      }
      std::size_t j = 2 + rng() % (a.depth() - 1);
      for (auto& x : right_reducers(c.M, a, j, ReducerFilter::Atomic)) {
        auto out = apply_right_ex(c.M, a, j, x);
        REQUIRE(out);
        CHECK(verify_right(c.M, a, j, x, *out));
        CHECK(out->b.depth() == a.depth());
      }
    }
    CHECK(applied > 50);
  }

  TEST_CASE("reducers") {
    auto& c = A2();
    CHECK(formatted(c, reducers(c.M, c.P("1/a/cabab"), 2, ReducerFilter::Maximal)) ==
          std::set<std::string>{"caa", "cab"});
    CHECK(formatted(c, reducers(c.M, c.P("1/c/aba"), 2, ReducerFilter::Atomic)) ==
          std::set<std::string>{"a", "b"});
    CHECK(reducers(c.M, c.P("1/1"), 1, ReducerFilter::All).empty());
    CHECK(c.S(greatest_tame_reducer(c.M, c.P("1/a/cabab"), 2)) == "ca");
    CHECK(greatest_tame_reducer(c.M, c.P("1/c/aba"), 2).is_one());
    CHECK(c.S(greatest_tame_reducer(c.M, c.P("a/a"), 1)) == "a");
    for (auto& t : reducers(c.M, c.P("1/a/cabab"), 2, ReducerFilter::Tame))
      CHECK(c.M.divides(t, c.E("ca"), Side::Left));
  }

  TEST_CASE("maximal division and derdiv") {
    auto& b = B3();
    CHECK(b.F(div_max(b.M, b.P("a/aba/b"), 2)) == "a/ab/1");
    auto& c = A2();
    CHECK(c.F(div_max(c.M, c.P("1/c/aba"), 1)) == "1/c/aba");
    CHECK(c.F(div_max(c.M, c.P("a/a"), 1)) == "1/1");
    CHECK(c.F(derdiv(c.M, c.P("ab/aba/aca"))) == "ab/ba/ca");
    CHECK(c.F(derdiv(c.M, c.P("a/a/a/a"))) == "1/1/1/1");
    CHECK(c.F(derdiv(c.M, c.P("1/1"))) == "1/1");
  }

  TEST_CASE("derdiv is prime and reachable from division reducts") {
    auto& c = A2();
    Rng rng(8);
    for (int k = 0; k < 40; ++k) {
      Multifraction a = random_multifraction(c.M, 3 + rng() % 2, 8, rng);
      Multifraction d = derdiv(c.M, a);
      CHECK(is_prime(c.M, d));
      for (std::size_t i = 1; i < a.depth(); ++i) {
        Element g = c.M.gcd(a.at(i), a.at(i + 1), due_side(a, i));
        if (g.is_one()) continue;
        Multifraction b = *apply_division(c.M, a, i, g);
        CHECK(reduct_graph(c.M, b).contains(d));
      }
    }
  }

  TEST_CASE("universal sequence") {
    CHECK(universal_sequence(3) == std::vector<std::size_t>{1, 2});
    CHECK(universal_sequence(4) == std::vector<std::size_t>{1, 2, 3, 1});
    CHECK(universal_sequence(1).empty());
    CHECK(universal_sequence(0).empty());
    CHECK(universal_sequence(6) == std::vector<std::size_t>{1, 2, 3, 4, 5, 1, 2, 3, 1});
  }

  TEST_CASE("red_t") {
    auto& c = A2();
    CHECK(c.F(red_tame(c.M, c.P("1/c/aba"))) == "1/c/aba");
    CHECK(c.F(red_tame(c.M, c.P("ac/aca/aba"))) == "1/c/aba");
    Multifraction once = red_tame(c.M, c.P("1/c/aba/cb"));
    CHECK(c.F(once) == "1/c/ba/c");
    CHECK(c.F(*apply_left(c.M, once, 2, c.E("b"))) == "bc/cb/a/c");
    CHECK(c.F(red_tame(c.M, once)) == "bc/accb/ca/1");
    std::size_t passes = 0;
    red_tame_fixpoint(c.M, c.P("1/c/aba/cb"), &passes);
    CHECK(passes >= 2);
  }

  TEST_CASE("strategies") {
    auto& c = A2();
    for (Strategy s : all_strategies()) {
      CAPTURE(strategy_name(s));
      CHECK(reduce(c.M, c.P("ac/ca/ba/ab/cb/bc"), s).end == unit(6));
      CHECK(strategy_from_name(strategy_name(s)) == s);
    }
    CHECK(reduce(c.M, c.P("1/1/1")).moves.empty());
    ReductionTrace t = reduce(c.M, c.P("1/ba/cb/ca/ab"), Strategy::LowLex);
    auto merged = merge_moves(c.M, t.start, t.moves);
    std::vector<std::size_t> levels;
    std::vector<std::string> xs;
    for (auto& m : merged) {
      levels.push_back(m.level);
      xs.push_back(c.S(m.x));
    }
    CHECK(levels == std::vector<std::size_t>{4, 2, 3, 4});
    CHECK(xs == std::vector<std::string>{"a", "bc", "a", "b"});
    CHECK(replay(c.M, t.start, t.moves) == t.end);
    CHECK(replay(c.M, t.start, merged) == t.end);
  }

  TEST_CASE("reduct graphs and irreducibles") {
    auto& c = A2();
    CHECK(formatted(c, irreducible_reducts(c.M, c.P("1/c/aba"))) ==
          std::set<std::string>{"ac/ca/ba", "bc/cb/ab"});
    CHECK(reduct_graph(c.M, c.P("1/1")).nodes.size() == 1);
    CHECK(formatted(c, irreducible_reducts(c.M, c.P("ab/aba/aca"))) ==
          std::set<std::string>{"ab/ba/ca", "cb/bc/ac"});
    CHECK(formatted(c, irreducible_reducts(c.M, c.P("1/1/1"))) == std::set<std::string>{"1/1/1"});
    ReductGraph G = reduct_graph(c.M, c.P("1/c/aba"));
    CHECK(G.complete);
    std::string dot = to_dot(c.M, G);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("R(2,a)") != std::string::npos);
    CHECK(to_json(c.M, G)["nodes"].size() == G.nodes.size());
    CHECK_THROWS_AS(reduct_graph(c.M, c.P("ac/ca/ba/ab/cb/bc"), Direction::Left, Granularity::Atomic, 3),
                    CapExceeded);
  }

  TEST_CASE("primes") {
    auto& c = A2();
    CHECK(is_prime(c.M, c.P("ab/ac/ca/cb/bc/ba")));
    CHECK(is_prime(c.M, c.P("ac/ca/ba/ab/cb/bc")));
    CHECK_FALSE(is_prime(c.M, c.P("a/a")));
  }

  TEST_CASE("step bound") {
    CHECK(step_bound_values({5}, 3).value == 7);
    CHECK(step_bound_values({0, 0}, 3).value == 9);
    auto& c = A2();
    StepBound b = step_bound(c.M, c.P("1/c/aba"));
    REQUIRE(b.exact);
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 3, 2 * 243);
    CHECK(b.value == expected);
    StepBound big = step_bound(c.M, c.P("ac/ca/ba/ab/cb/bc"));
    CHECK_FALSE(big.exact);
    CHECK(big.at_least(1000000));
  }

  TEST_CASE("maximal zigzag") {
    auto& c = A2();
    Multifraction src = c.P("ab/ba/ca/bcbc");
    auto irr = irreducible_reducts(c.M, src);
    CHECK(formatted(c, irr) == std::set<std::string>{"1/ab/ca/cb", "cb/abbc/ba/bc"});
    auto z = connect_by_maximal_zigzag(c.M, c.P("1/ab/ca/cb"), c.P("cb/abbc/ba/bc"), 100000, src);
    REQUIRE(z);
    CHECK(z->front().from == c.P("1/ab/ca/cb"));
    CHECK(z->back().to == c.P("cb/abbc/ba/bc"));
    auto same = connect_by_maximal_zigzag(c.M, c.P("1/ab/ca/cb"), c.P("1/ab/ca/cb"), 10);
    REQUIRE(same);
    CHECK(same->empty());
    CHECK_FALSE(connect_by_maximal_zigzag(c.M, c.P("1/ab/ca/cb"), c.P("cb/abbc/ba/bc"), 0, src));
  }
}
