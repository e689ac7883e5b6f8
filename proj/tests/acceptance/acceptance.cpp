// SPDX-License-Identifier: MIT
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "multired/harness.hpp"

using namespace multired;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Ctx {
  Monoid M;
  explicit Ctx(const std::string& name) : M(preset(name)) {}
  Element E(const std::string& s) const { return M.parse(s); }
  Multifraction P(const std::string& s) const { return parse_multifraction(M, s); }
  std::string F(const Multifraction& a) const { return format_multifraction(M, a); }
};

Ctx& A2() {
  static Ctx c("A2tilde");
  return c;
}
Ctx& B3() {
  static Ctx c("braid(3)");
  return c;
}

// Collects failures so a criterion reports every broken check at once.
struct Checker {
  Outcome out;
  std::size_t cases = 0;
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && out.pass) out.detail = what;
    out.pass = out.pass && ok;
  }
  Outcome done(const std::string& summary) {
    if (out.pass) out.detail = summary;
    return out;
  }
};

Multifraction random_signed(const Monoid& M, std::size_t depth, std::size_t length, Rng& rng) {
  return random_multifraction(M, depth, length, rng, rng() % 2 ? Sign::Neg : Sign::Pos);
}

// Atomic left and right moves applicable to a.
std::vector<Move> single_moves(const Monoid& M, const Multifraction& a, bool left, bool right) {
  std::vector<Move> out;
  for (std::size_t i = 1; left && i < a.depth(); ++i)
    for (auto& x : reducers(M, a, i, ReducerFilter::Atomic)) out.push_back({MoveKind::Left, i, x});
  for (std::size_t i = 2; right && i <= a.depth(); ++i)
    for (auto& x : right_reducers(M, a, i, ReducerFilter::Atomic)) out.push_back({MoveKind::Right, i, x});
  return out;
}

Outcome c1() {
  auto& c = A2();
  Checker k;
  auto a = apply_left(c.M, c.P("1/c/aba"), 2, c.E("a"));
  auto b = apply_left(c.M, c.P("1/c/aba"), 2, c.E("b"));
  k.expect(a && c.F(*a) == "ac/ca/ba", "R(2,a) value");
  k.expect(b && c.F(*b) == "bc/cb/ab", "R(2,b) value");
  for (auto* r : {&a, &b}) {
    if (!*r) continue;
    for (std::size_t i = 1; i < (*r)->depth(); ++i)
      k.expect(reducers(c.M, **r, i, ReducerFilter::Atomic).empty(), "reducible at level " + std::to_string(i));
  }
  return k.done("ac/ca/ba and bc/cb/ab, both irreducible");
}

Outcome c2() {
  auto& c = A2();
  Checker k;
  Multifraction b = c.P("ac/ca/ba/ab/cb/bc");
  for (Strategy s : all_strategies())
    k.expect(reduce(c.M, b, s).end == unit(6), std::string("strategy ") + strategy_name(s));
  auto L = [&](std::size_t i, const char* x) { return Move{MoveKind::Left, i, c.E(x)}; };
  std::vector<Move> t1{L(3, "ab"), L(4, "cb"), L(5, "bc"), L(1, "ac"), L(2, "cbc"), L(3, "bc"), L(1, "bc")};
  std::vector<Move> t2{L(5, "bc"), L(3, "ab"), L(1, "ac"), L(3, "b"), L(4, "c"), L(2, "c")};
  k.expect(replay(c.M, b, t1) == unit(6), "first explicit trace");
  k.expect(replay(c.M, b, t2) == unit(6), "second explicit trace");
  return k.done("four strategies and both explicit traces end at 1/1/1/1/1/1");
}

Outcome c3() {
  auto& c = A2();
  Checker k;
  k.expect(c.F(derdiv(c.M, c.P("ab/aba/aca"))) == "ab/ba/ca", "derdiv(ab/aba/aca)");
  std::set<std::string> irr;
  for (auto& x : irreducible_reducts(c.M, c.P("ab/aba/aca"))) irr.insert(c.F(x));
  k.expect(irr == std::set<std::string>{"ab/ba/ca", "cb/bc/ac"}, "Irr(ab/aba/aca)");
  Multifraction q = c.P("a/a/a/a");
  k.expect(derdiv(c.M, q) == unit(4), "derdiv(a/a/a/a)");
  std::vector<Element> xs;
  for (std::size_t i = 1; i < q.depth(); ++i) xs.push_back(c.M.gcd(q.at(i), q.at(i + 1), due_side(q, i)));
  Multifraction naive = q;
  for (std::size_t i = 1; i < q.depth(); ++i)
    if (auto n = apply_left(c.M, naive, i, xs[i - 1])) naive = *n;
  k.expect(c.F(naive) == "a/a/1/1", "naive bottom-up composite gave " + c.F(naive));
  return k.done("derdiv = ab/ba/ca, Irr exact, derdiv(a/a/a/a) = 1/1/1/1, naive = a/a/1/1");
}

Outcome c4() {
  auto& c = A2();
  Checker k;
  k.expect(c.F(red_tame(c.M, c.P("1/c/aba"))) == "1/c/aba", "red_t(1/c/aba)");
  k.expect(c.F(red_tame(c.M, c.P("ac/aca/aba"))) == "1/c/aba", "red_t(ac/aca/aba)");
  k.expect(c.F(derdiv(c.M, c.P("ac/aca/aba"))) == "ac/ca/ba", "derdiv(ac/aca/aba)");
  Multifraction once = red_tame(c.M, c.P("1/c/aba/cb"));
  k.expect(c.F(once) == "1/c/ba/c", "red_t(1/c/aba/cb) = " + c.F(once));
  auto mid = apply_left(c.M, once, 2, c.E("b"));
  k.expect(mid && c.F(*mid) == "bc/cb/a/c", "red_t(c)R(2,b)");
  Multifraction twice = red_tame(c.M, once);
  k.expect(mid && twice == *apply_left(c.M, *mid, 3, c.E("c")), "red_t^2 = red_t(c)R(2,b)R(3,c)");
  k.expect(c.F(twice) == "bc/accb/ca/1", "red_t^2 value " + c.F(twice));
  return k.done("1/c/aba, 1/c/aba, 1/c/ba/c; second pass passes through bc/cb/a/c to bc/accb/ca/1");
}

Outcome c5() {
  auto& c = A2();
  Checker k;
  std::set<std::string> got;
  for (auto& x : reducers(c.M, c.P("1/a/cabab"), 2, ReducerFilter::Maximal)) got.insert(c.M.format(x));
  k.expect(got == std::set<std::string>{"caa", "cab"}, "maximal reducers");
  k.expect(c.M.format(greatest_tame_reducer(c.M, c.P("1/a/cabab"), 2)) == "ca", "greatest tame reducer");
  return k.done("maximal {caa, cab}, greatest tame ca");
}

Outcome c6() {
  auto& b = B3();
  Checker k;
  Multifraction a = b.P("a/aba/b");
  auto d2 = apply_division(b.M, a, 2, b.E("b"));
  auto d1 = apply_division(b.M, a, 1, b.E("a"));
  k.expect(d2 && b.F(*d2) == "a/ab/1", "D(2,b)");
  k.expect(d1 && b.F(*d1) == "1/ab/b", "D(1,a)");
  if (d1 && d2) {
    k.expect(is_prime(b.M, *d1) && is_prime(b.M, *d2), "division irreducibility");
    k.expect(apply_left(b.M, *d1, 2, b.E("b")) == d2, "D(1,a)R(2,b) = D(2,b)");
  }
  return k.done("a/ab/1 and 1/ab/b, prime, joined by R(2,b)");
}

Outcome c7() {
  auto& c = A2();
  Checker k;
  for (std::size_t p = 1; p <= 3; ++p) {
    MixedCycleReport r = mixed_cycle_probe(c.M, p);
    k.expect(r.matches, "p = " + std::to_string(p) + ": " + c.F(r.result));
  }
  k.expect(c.F(mixed_cycle_probe(c.M, 1).result) == "bacbac/a/bc/acbacb", "p = 1 value");
  return k.done("bacbac/a/bc/acbacb; p = 2, 3 scale the outer entries");
}

Outcome c8() {
  Checker k;
  Monoid K(preset("K(4,3)"));
  std::size_t a2 = A2().M.basics(Side::Right).basics.size(), k43 = K.basics(Side::Right).basics.size();
  k.expect(a2 == 10, "A2tilde basics " + std::to_string(a2));
  k.expect(k43 == 17, "K(4,3) basics " + std::to_string(k43));
  return k.done("10 and 17");
}

Outcome c9() {
  auto& c = A2();
  Checker k;
  Rng rng(9001);
  std::size_t unital = 0;
  for (int n = 0; n < 500; ++n) {
    Multifraction a = n % 2 ? gen_unital(c.M, 4, 16, rng()).a : random_signed(c.M, 4, 12, rng);
    Depth4Report r = check_depth4_equivalences(c.M, a);
    k.expect(r.reduces_to_one != Tri::Inconclusive, "inconclusive search on " + c.F(a));
    k.expect(r.agree, "disagreement on " + c.F(a));
    unital += r.reduces_to_one == Tri::Yes;
  }
  return k.done("500 cases agree, " + std::to_string(unital) + " unital");
}

Outcome c10() {
  auto& c = A2();
  Checker k;
  Rng rng(9002);
  std::size_t pairs = 0, crossed = 0;
  while (pairs < 500) {
    Multifraction a = rng() % 2 ? gen_central_cross(c.M, 4, 1 + rng() % 2, rng(), rng() % 2 ? Sign::Neg : Sign::Pos).a
                                : random_signed(c.M, 4, 10, rng);
    auto moves = single_moves(c.M, a, true, true);
    if (moves.empty()) continue;
    const Move& m = moves[rng() % moves.size()];
    Multifraction b = *apply_move(c.M, a, m);
    bool ca = has_central_cross(c.M, a).has_value(), cb = has_central_cross(c.M, b).has_value();
    k.expect(ca == cb, c.F(a) + " " + format_move(c.M, m));
    crossed += ca;
    ++pairs;
  }
  return k.done("500 pairs invariant, " + std::to_string(crossed) + " crossed");
}

Outcome c11() {
  auto& c = A2();
  Checker k;
  Rng rng(9003);
  std::size_t cases = 0;
  while (cases < 500) {
    Multifraction a = random_multifraction(c.M, 3 + rng() % 2, 10, rng);
    auto moves = single_moves(c.M, a, false, true);
    if (moves.empty()) continue;
    Multifraction b = *apply_move(c.M, a, moves[rng() % moves.size()]);
    Multifraction d = *apply_move(c.M, a, moves[rng() % moves.size()]);
    Multifraction w = derdiv(c.M, a);
    k.expect(reduct_graph(c.M, b).contains(w) && reduct_graph(c.M, d).contains(w), "witness fails for " + c.F(a));
    ++cases;
  }
  return k.done("500 pairs of one-step right reducts reach derdiv");
}

Outcome c12() {
  auto& c = A2();
  Checker k;
  Rng rng(9004);
  std::size_t cases = 0;
  while (cases < 1000) {
    Multifraction a = random_signed(c.M, 2 + rng() % 4, 12, rng);
    std::size_t i = 1 + rng() % (a.depth() - 1);
    auto xs = reducers(c.M, a, i, ReducerFilter::All);
    if (xs.empty()) continue;
    const Element& x = xs[rng() % xs.size()];
    auto l = apply_left(c.M, a, i, x);
    auto r = apply_right(c.M, inverse(a), a.depth() + 1 - i, x);
    k.expect(l && r && inverse(*l) == *r, "duality on " + c.F(a));
    ++cases;
  }
  return k.done("1000 cases");
}

Outcome c13() {
  auto& c = A2();
  Checker k;
  Rng rng(9005);
  std::size_t lr = 0, rl = 0;
  while (lr < 500 || rl < 500) {
    Multifraction a = random_signed(c.M, 3 + rng() % 3, 12, rng);
    if (lr < 500) {
      std::size_t i = 2 + rng() % (a.depth() - 2);
      auto xs = reducers(c.M, a, i, ReducerFilter::All);
      if (!xs.empty()) {
        const Element& x = xs[rng() % xs.size()];
        auto out = apply_left_ex(c.M, a, i, x);
        Element xh = c.M.gcd(a.at(i), x, due_side(a, i));
        Multifraction rhs = xh.is_one() ? a : *apply_division(c.M, a, i, xh);
        Multifraction lhs = out->carried.is_one() ? out->b : *apply_right(c.M, out->b, i, out->carried);
        k.expect(lhs == rhs, "R then R~ on " + c.F(a));
        ++lr;
      }
    }
    if (rl < 500) {
      std::size_t i = 2 + rng() % (a.depth() - 2);
      auto xs = right_reducers(c.M, a, i, ReducerFilter::All);
      if (!xs.empty()) {
        const Element& x = xs[rng() % xs.size()];
        auto out = apply_right_ex(c.M, a, i, x);
        Side rside = opposite(due_side(a, i));
        Element xh = c.M.gcd(a.at(i), x, rside);
        Multifraction rhs = xh.is_one() ? a : *apply_division(c.M, a, i - 1, xh);
        Multifraction lhs = out->carried.is_one() ? out->b : *apply_left(c.M, out->b, i, out->carried);
        k.expect(lhs == rhs, "R~ then R on " + c.F(a));
        ++rl;
      }
    }
  }
  return k.done("500 + 500 cases");
}

Outcome c14() {
  auto& b = B3();
  Checker k;
  Rng rng(9006);
  for (int n = 0; n < 200; ++n) {
    Multifraction a = random_signed(b.M, 1 + rng() % 5, 12, rng);
    auto irr = irreducible_reducts(b.M, a);
    k.expect(irr.size() == 1, "several irreducibles for " + b.F(a));
    k.expect(!irr.empty() && irr.front() == red_tame_fixpoint(b.M, a), "fixpoint differs for " + b.F(a));
    k.expect(reduce(b.M, a).end == irr.front(), "strategy end differs for " + b.F(a));
  }
  return k.done("200 cases with a unique irreducible equal to the red_t fixpoint");
}

Outcome c15() {
  Checker k;
  std::size_t instances = 0;
  for (const char* name : {"A2tilde", "braid(3)", "braid(4)", "K(4,3)", "C2tilde"}) {
    Monoid M(preset(name));
    Rng rng(9007);
    for (int n = 0; n < 250; ++n) {
      Element a = random_element(M, rng() % 5, rng), b = random_element(M, rng() % 5, rng),
              d = random_element(M, rng() % 3, rng);
      k.expect(M.multiply(a, b).length() == a.length() + b.length(), "length additivity");
      for (Side s : {Side::Left, Side::Right}) {
        ++instances;
        Element g = M.gcd(a, b, s);
        k.expect(M.divides(g, a, s) && M.divides(g, b, s), "gcd divides");
        for (auto& x : M.divisors(a, s))
          if (M.divides(x, b, s)) k.expect(M.divides(x, g, s).has_value(), "gcd is greatest");
        LcmResult r = M.lcm(a, b, s);
        LcmResult o = M.lcm_oracle(a, b, s, r ? r.m.length() : a.length() + b.length() + 2);
        k.expect(r.status == o.status && (!r || r.m == o.m), std::string("lcm oracle on ") + name);
        if (!r) continue;
        Element left = s == Side::Right ? M.multiply(a, r.compB) : M.multiply(r.compB, a);
        Element right = s == Side::Right ? M.multiply(b, r.compA) : M.multiply(r.compA, b);
        k.expect(left == r.m && right == r.m, "lcm complements");
        k.expect(M.gcd(r.compA, r.compB, s).is_one(), "complements coprime");
        Element bd = s == Side::Right ? M.multiply(b, d) : M.multiply(d, b);
        LcmResult direct = M.lcm(a, bd, s), step = M.lcm(r.compA, d, s);
        k.expect(bool(direct) == bool(step), "iterated lcm existence");
        if (direct && step)
          k.expect(direct.m == (s == Side::Right ? M.multiply(b, step.m) : M.multiply(step.m, b)),
                   "iterated lcm value");
        if (M.gcd(a, b, opposite(s)).is_one() && M.gcd(r.compA, d, opposite(s)).is_one())
          k.expect(M.gcd(a, bd, opposite(s)).is_one(), "iterated gcd");
      }
    }
  }
  auto& c = A2();
  std::vector<Element> elems;
  for (std::size_t l = 1; l <= 4; ++l)
    for (auto& e : c.M.elements_of_length(l)) elems.push_back(e);
  std::size_t pairs = 0;
  for (auto& a : elems)
    for (auto& b : elems) {
      LcmResult r = c.M.lcm(a, b, Side::Right);
      LcmResult o = c.M.lcm_oracle(a, b, Side::Right, r ? r.m.length() : a.length() + b.length() + 2);
      k.expect(r.status == o.status && (!r || r.m == o.m), "table lcm vs oracle on " + c.M.format(a) + ", " + c.M.format(b));
      ++pairs;
    }
  return k.done(std::to_string(instances) + " randomized instances, " + std::to_string(pairs) + " exhaustive pairs");
}

Outcome c16() {
  Checker k;
  std::size_t traces = 0;
  auto check = [&](const Monoid& M, const Multifraction& a) {
    for (Strategy s : all_strategies()) {
      ReductionTrace t = reduce(M, a, s);
      k.expect(step_bound(M, a).at_least(t.moves.size()),
               "trace longer than the bound for " + format_multifraction(M, a));
      ++traces;
    }
  };
  auto& c = A2();
  check(c.M, c.P("ac/ca/ba/ab/cb/bc"));
  check(c.M, c.P("1/c/aba"));
  check(c.M, c.P("1/ba/cb/ca/ab"));
  check(c.M, c.P("a/a/a/a"));
  Rng rng(9008);
  for (int n = 0; n < 100; ++n) check(c.M, gen_unital(c.M, 4 + 2 * (n % 2), 16, rng()).a);
  for (int n = 0; n < 100; ++n) check(c.M, random_signed(c.M, 1 + n % 4, 10, rng));
  for (int n = 0; n < 50; ++n) check(B3().M, random_signed(B3().M, 1 + n % 5, 12, rng));
  return k.done(std::to_string(traces) + " traces within the bound");
}

// Laurent polynomials in t with integer coefficients.
using Laurent = std::map<int, long long>;

Laurent add(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (auto& [e, v] : b)
    if ((r[e] += v) == 0) r.erase(e);
  return r;
}

Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (auto& [e1, v1] : a)
    for (auto& [e2, v2] : b)
      if ((r[e1 + e2] += v1 * v2) == 0) r.erase(e1 + e2);
  return r;
}

using Mat = std::array<std::array<Laurent, 2>, 2>;

Mat matmul(const Mat& x, const Mat& y) {
  Mat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = add(mul(x[i][0], y[0][j]), mul(x[i][1], y[1][j]));
  return r;
}

// Reduced Burau representation of the three-strand braid group.
Mat burau(const SignedLetter& l) {
  Laurent one{{0, 1}}, none;
  if (l.atom == 0 && !l.inv) return {{{{{{1, -1}}, one}}, {{none, one}}}};
  if (l.atom == 0 && l.inv) return {{{{{{-1, -1}}, {{-1, 1}}}}, {{none, one}}}};
  if (l.atom == 1 && !l.inv) return {{{{one, none}}, {{{{1, 1}}, {{1, -1}}}}}};
  return {{{{one, none}}, {{one, {{-1, -1}}}}}};
}

bool burau_identity(const SignedWord& w) {
  Laurent one{{0, 1}};
  Mat m{{{{one, Laurent{}}}, {{Laurent{}, one}}}};
  for (auto& l : w) m = matmul(m, burau(l));
  return m[0][0] == one && m[1][1] == one && m[0][1].empty() && m[1][0].empty();
}

Outcome c17() {
  Checker k;
  auto& c = A2();
  WordProblemResult r = word_problem(c.M, parse_signed_word(c.M.presentation(), "ac AC ba BA cb CB"));
  k.expect(r.represents_one == Tri::Yes, "ac AC ba BA cb CB: " + r.detail);
  auto& b = B3();
  Rng rng(9009);
  std::size_t nontrivial = 0, trivial = 0;
  while (nontrivial < 100) {
    SignedWord w;
    std::size_t len = 2 + rng() % 9;
    for (std::size_t j = 0; j < len; ++j) w.push_back({static_cast<AtomId>(rng() % 2), rng() % 2 == 0});
    bool one = burau_identity(w);
    WordProblemResult v = word_problem(b.M, w);
    std::string text = format_signed_word(b.M.presentation(), w);
    if (one) {
      k.expect(v.represents_one == Tri::Yes, "trivial word " + text);
      ++trivial;
      continue;
    }
    k.expect(v.represents_one == Tri::No && !v.conditional, "nontrivial word " + text + ": " + v.detail);
    ++nontrivial;
  }
  return k.done("ac AC ba BA cb CB represents 1; 100 nontrivial braid words unconditional, " +
                std::to_string(trivial) + " trivial words confirmed");
}

Outcome c18() {
  auto& c = A2();
  Checker k;
  Multifraction a = c.P("a/bac/bb/aca");
  ReductGraph L = reduct_graph(c.M, a, Direction::Left);
  ReductGraph R = reduct_graph(c.M, a, Direction::Right);
  k.expect(L.sinks().size() == 2, "left irreducibles " + std::to_string(L.sinks().size()));
  k.expect(R.sinks().size() == 1, "right irreducibles " + std::to_string(R.sinks().size()));
  CUniformReport u = test_conjecture_C_uniform(c.M, a);
  k.expect(u.witnesses.size() == 1, "witnesses " + std::to_string(u.witnesses.size()));
  k.expect(!u.red_t_is_witness, "red_t is a witness");
  k.expect(u.latest_common_ancestor && !u.ancestor_is_witness, "ancestor is a witness");
  std::string w = u.witnesses.empty() ? "none" : c.F(u.witnesses.front());
  return k.done("2 left and 1 right irreducibles; unique witness " + w + "; raw counts " +
                std::to_string(L.nodes.size()) + " left, " + std::to_string(R.nodes.size()) + " right reducts");
}

Outcome c19() {
  auto& c = A2();
  Checker k;
  Rng rng(9010);
  std::size_t built[2] = {0, 0};
  for (std::size_t d : {4u, 6u}) {
    std::size_t& n = built[d == 6];
    for (int guard = 0; n < 50 && guard < 5000; ++guard) {
      Multifraction a = gen_unital(c.M, d, 14, rng()).a;
      if (!red_tame(c.M, a).is_trivial()) continue;
      VanKampenResult r = van_kampen(c.M, a, reduce(c.M, a).moves);
      k.expect(r.ok, "no diagram for " + c.F(a) + ": " + r.error);
      k.expect(r.ok && validate_van_kampen(c.M, r.diagram, a), "invalid diagram for " + c.F(a));
      ++n;
    }
    k.expect(n == 50, "only " + std::to_string(n) + " inputs of depth " + std::to_string(d));
  }
  return k.done("50 depth-4 and 50 depth-6 diagrams valid");
}

Outcome c20() {
  auto& c = A2();
  Checker k;
  auto dump = std::filesystem::temp_directory_path() / "multired_acceptance_dump";
  std::string summary;
  auto run = [&](Conjecture conj, std::size_t depth, std::size_t length, std::size_t trials) {
    CampaignConfig cfg;
    cfg.conjecture = conj;
    cfg.depth = depth;
    cfg.length = length;
    cfg.trials = trials;
    cfg.seed = 2024;
    cfg.dump_dir = dump.string();
    CampaignReport r = run_campaign(c.M, cfg);
    std::string name = conjecture_name(conj);
    if (r.counterexample) std::cerr << "COUNTEREXAMPLE " << name << ": " << r.counterexample->dump() << "\n";
    k.expect(r.trials == trials && r.counterexamples == 0 && r.inconclusive == 0,
             name + ": " + to_json(r).dump());
    summary += (summary.empty() ? "" : "; ") + name + " " + std::to_string(r.confirmed) + "/" +
               std::to_string(trials);
  };
  run(Conjecture::A, 4, 20, 1000);
  run(Conjecture::B, 4, 20, 1000);
  run(Conjecture::Cunif, 3, 12, 200);
  return k.done(summary + " confirmed");
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"example-exact reducts", c1},
      {"unital 6-multifraction", c2},
      {"derdiv and Irr", c3},
      {"red_t values", c4},
      {"tame reducers", c5},
      {"divisions in braid(3)", c6},
      {"mixed cycle", c7},
      {"basic elements", c8},
      {"depth-4 equivalence", c9},
      {"central-cross preservation", c10},
      {"local cross-confluence", c11},
      {"duality", c12},
      {"left-right-division identities", c13},
      {"FC oracle", c14},
      {"lattice suite", c15},
      {"step bound", c16},
      {"word problem", c17},
      {"cross-confluence figure", c18},
      {"van Kampen", c19},
      {"conjecture campaigns", c20},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    std::size_t k = std::strtoul(argv[i], nullptr, 10);
    if (k < 1 || k > criteria().size()) {
      std::cerr << "usage: acceptance [criterion 1-" << criteria().size() << "]...\n";
      return 2;
    }
    selected.push_back(k);
  }
  if (selected.empty())
    for (std::size_t k = 1; k <= criteria().size(); ++k) selected.push_back(k);
  int failures = 0;
  for (std::size_t k : selected) {
    const Criterion& c = criteria()[k - 1];
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", k, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures ? 1 : 0;
}
