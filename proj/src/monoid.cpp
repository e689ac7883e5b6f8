// SPDX-License-Identifier: MIT
#include "multired/monoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace multired {

namespace {

constexpr std::size_t kCanonCacheLimit = 4'000'000;
constexpr std::size_t kMemberCacheLimit = 4096;

struct Letter {
  AtomId atom;
  bool inverse;
};

}  // namespace

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Yes:
      return "yes";
    case Tri::No:
      return "no";
    default:
      return "inconclusive";
  }
}

Caps caps_from_env(Caps base) {
  const char* env = std::getenv("MULTIRED_CAPS");
  if (!env) return base;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    std::string key = item.substr(0, eq);
    std::size_t value = std::stoul(item.substr(eq + 1));
    if (key == "class_cap") base.class_cap = value;
    else if (key == "reversing_cap") base.reversing_cap = value;
    else if (key == "basics_cap") base.basics_cap = value;
    else if (key == "oracle_slack") base.oracle_slack = value;
  }
  return base;
}

std::optional<int> BasicTable::find(const Element& e) const {
  auto it = index.find(e.w);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::optional<Element> BasicTable::complement(const Element& u, const Element& v) const {
  auto iu = find(u), iv = find(v);
  if (!iu || !iv) return std::nullopt;
  int c = comp[*iu][*iv];
  if (c < 0) return std::nullopt;
  return basics[c];
}

struct Monoid::ClassInfo {
  Word canon;
  std::vector<Word> members;
  std::vector<int> first, last;
};

Monoid::Monoid(Presentation p, Caps caps) : pres_(std::move(p)), caps_(caps) {
  auto rep = validate(pres_);
  if (!rep.ok()) throw PresentationError("invalid presentation: " + rep.failures.front());
  rewrites_by_first_.resize(pres_.rank());
  for (auto& r : pres_.relations()) {
    rewrites_by_first_[static_cast<AtomId>(r.lhs[0])].emplace_back(r.lhs, r.rhs);
    rewrites_by_first_[static_cast<AtomId>(r.rhs[0])].emplace_back(r.rhs, r.lhs);
  }
}

Monoid::~Monoid() = default;

std::shared_ptr<const Monoid::ClassInfo> Monoid::build_class(const Word& w) const {
  std::unordered_set<Word> seen{w};
  std::vector<Word> order{w};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Word cur = order[i];
    for (std::size_t p = 0; p < cur.size(); ++p) {
      for (auto& [from, to] : rewrites_by_first_[static_cast<AtomId>(cur[p])]) {
        if (p + from.size() > cur.size() || cur.compare(p, from.size(), from) != 0) continue;
        Word next = cur;
        next.replace(p, from.size(), to);
        if (seen.insert(next).second) {
          order.push_back(std::move(next));
          if (order.size() > caps_.class_cap)
            throw CapExceeded(CapExceeded::Kind::Class,
                              "rewrite class exceeds class_cap for word of length " +
                                  std::to_string(w.size()));
        }
      }
    }
  }
  auto info = std::make_shared<ClassInfo>();
  auto best = std::min_element(order.begin(), order.end());
  std::iter_swap(order.begin(), best);
  info->canon = order.front();
  info->first.assign(pres_.rank(), -1);
  info->last.assign(pres_.rank(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i].empty()) continue;
    auto f = static_cast<AtomId>(order[i].front()), l = static_cast<AtomId>(order[i].back());
    if (info->first[f] < 0) info->first[f] = static_cast<int>(i);
    if (info->last[l] < 0) info->last[l] = static_cast<int>(i);
  }
  info->members = std::move(order);
  ++n_classes_;
  return info;
}

std::shared_ptr<const Monoid::ClassInfo> Monoid::class_of(const Word& w) const {
  {
    std::shared_lock lock(cache_mutex_);
    auto c = canon_cache_.find(w);
    if (c != canon_cache_.end()) {
      auto it = class_cache_.find(c->second);
      if (it != class_cache_.end()) {
        ++n_hits_;
        return it->second;
      }
    }
  }
  auto info = build_class(w);
  std::unique_lock lock(cache_mutex_);
  if (canon_cache_.size() > kCanonCacheLimit) {
    canon_cache_.clear();
    class_cache_.clear();
  }
  auto [it, inserted] = class_cache_.emplace(info->canon, info);
  if (!inserted) return it->second;
  if (info->members.size() <= kMemberCacheLimit) {
    for (auto& m : info->members) canon_cache_.emplace(m, info->canon);
  } else {
    canon_cache_.emplace(w, info->canon);
    canon_cache_.emplace(info->canon, info->canon);
  }
  return info;
}

Element Monoid::canonical(const Word& w) const {
  if (w.size() <= 1) return Element{w};
  {
    std::shared_lock lock(cache_mutex_);
    auto c = canon_cache_.find(w);
    if (c != canon_cache_.end()) {
      ++n_hits_;
      return Element{c->second};
    }
  }
  return Element{class_of(w)->canon};
}

Element Monoid::parse(const std::string& text) const { return canonical(pres_.parse_word(text)); }

Element Monoid::multiply(const Element& x, const Element& y) const {
  if (x.is_one()) return y;
  if (y.is_one()) return x;
  return canonical(x.w + y.w);
}

Element Monoid::multiply(std::initializer_list<Element> xs) const {
  Word w;
  for (auto& x : xs) w += x.w;
  return canonical(w);
}

std::vector<Word> Monoid::rewrite_class(const Element& e) const {
  if (e.w.size() <= 1) return {e.w};
  return class_of(e.w)->members;
}

bool Monoid::atom_divides(AtomId s, const Element& a, Side side) const {
  if (a.is_one()) return false;
  if (a.w.size() == 1) return static_cast<AtomId>(a.w[0]) == s;
  auto info = class_of(a.w);
  return (side == Side::Left ? info->first[s] : info->last[s]) >= 0;
}

std::vector<AtomId> Monoid::atom_divisors(const Element& a, Side side) const {
  std::vector<AtomId> out;
  for (std::size_t s = 0; s < rank(); ++s)
    if (atom_divides(static_cast<AtomId>(s), a, side)) out.push_back(static_cast<AtomId>(s));
  return out;
}

std::optional<Element> Monoid::divide_atom(const Element& a, AtomId s, Side side) const {
  if (a.is_one()) return std::nullopt;
  if (a.w.size() == 1) {
    if (static_cast<AtomId>(a.w[0]) == s) return one();
    return std::nullopt;
  }
  auto info = class_of(a.w);
  int idx = side == Side::Left ? info->first[s] : info->last[s];
  if (idx < 0) return std::nullopt;
  const Word& m = info->members[idx];
  return canonical(side == Side::Left ? m.substr(1) : m.substr(0, m.size() - 1));
}

std::optional<Element> Monoid::divides(const Element& x, const Element& a, Side side) const {
  if (x.length() > a.length()) return std::nullopt;
  if (x == a) return one();
  Element cur = a;
  const std::size_t n = x.w.size();
  for (std::size_t k = 0; k < n; ++k) {
    AtomId s = static_cast<AtomId>(side == Side::Left ? x.w[k] : x.w[n - 1 - k]);
    auto q = divide_atom(cur, s, side);
    if (!q) return std::nullopt;
    cur = std::move(*q);
  }
  return cur;
}

Element Monoid::gcd(const Element& a, const Element& b, Side side) const {
  Element result = one(), x = a, y = b;
  const Side lcm_side = opposite(side);
  while (true) {
    std::vector<AtomId> common;
    for (std::size_t s = 0; s < rank(); ++s) {
      auto at = static_cast<AtomId>(s);
      if (atom_divides(at, x, side) && atom_divides(at, y, side)) common.push_back(at);
    }
    if (common.empty()) break;
    Element m = atom(common[0]);
    for (std::size_t k = 1; k < common.size(); ++k) {
      auto r = lcm(m, atom(common[k]), lcm_side);
      if (r.status != Tri::Yes)
        throw LatticeViolation("common divisors without a common multiple in gcd computation");
      m = r.m;
    }
    auto qx = divides(m, x, side), qy = divides(m, y, side);
    if (!qx || !qy)
      throw LatticeViolation("lcm of common atomic divisors is not a common divisor");
    result = side == Side::Left ? multiply(result, m) : multiply(m, result);
    x = std::move(*qx);
    y = std::move(*qy);
  }
  return result;
}

LcmResult Monoid::lcm(const Element& a, const Element& b, Side side) const {
  ++n_lcm_;
  if (a == b) return {Tri::Yes, a, one(), one()};
  if (a.is_one()) return {Tri::Yes, b, one(), b};
  if (b.is_one()) return {Tri::Yes, a, a, one()};
  Word key;
  key.reserve(a.w.size() + b.w.size() + 2);
  key += side == Side::Left ? 'L' : 'R';
  key += a.w;
  key += '\xff';
  key += b.w;
  {
    std::shared_lock lock(cache_mutex_);
    auto it = lcm_cache_.find(key);
    if (it != lcm_cache_.end()) return it->second;
  }
  LcmResult r = lcm_grid(a, b, side);
  std::unique_lock lock(cache_mutex_);
  if (lcm_cache_.size() > kCanonCacheLimit) lcm_cache_.clear();
  lcm_cache_.emplace(std::move(key), r);
  return r;
}

LcmResult Monoid::lcm_grid(const Element& a, const Element& b, Side side) const {
  const BasicTable* table = nullptr;
  try {
    table = &basics(side);
  } catch (const CapExceeded&) {
    return lcm_pairwise(a, b, side, caps_.reversing_cap);
  }
  const std::size_t p = a.length(), q = b.length();
  if (p * q > caps_.reversing_cap) return {Tri::Inconclusive, {}, {}, {}};
  n_cells_ += p * q;
  auto letter = [&](const Element& e, std::size_t k) {
    std::size_t n = e.length();
    return table->index.at(Word(1, side == Side::Right ? e.w[k] : e.w[n - 1 - k]));
  };
  std::vector<int> horiz(q), vert(p);
  for (std::size_t j = 0; j < q; ++j) horiz[j] = letter(b, j);
  for (std::size_t i = 0; i < p; ++i) {
    int x = letter(a, i);
    for (std::size_t j = 0; j < q; ++j) {
      int y = horiz[j];
      int cy = table->comp[y][x], cx = table->comp[x][y];
      if (cy < 0 || cx < 0) return {Tri::No, {}, {}, {}};
      horiz[j] = cy;
      x = cx;
    }
    vert[i] = x;
  }
  Word wb, wa;
  if (side == Side::Right) {
    for (int h : horiz) wb += table->basics[h].w;
    for (int v : vert) wa += table->basics[v].w;
  } else {
    for (auto it = horiz.rbegin(); it != horiz.rend(); ++it) wb += table->basics[*it].w;
    for (auto it = vert.rbegin(); it != vert.rend(); ++it) wa += table->basics[*it].w;
  }
  LcmResult r;
  r.status = Tri::Yes;
  r.compB = canonical(wb);
  r.compA = canonical(wa);
  r.m = side == Side::Right ? multiply(a, r.compB) : multiply(r.compB, a);
  return r;
}

LcmResult Monoid::lcm_reversing(const Element& a, const Element& b, Side side,
                                std::size_t max_steps) const {
  if (a == b) return {Tri::Yes, a, one(), one()};
  std::vector<Letter> w;
  // Right side reverses a^-1 b into P N^-1; left side reverses a b^-1 into N^-1 P.
  if (side == Side::Right) {
    for (auto it = a.w.rbegin(); it != a.w.rend(); ++it) w.push_back({static_cast<AtomId>(*it), true});
    for (char c : b.w) w.push_back({static_cast<AtomId>(c), false});
  } else {
    for (char c : a.w) w.push_back({static_cast<AtomId>(c), false});
    for (auto it = b.w.rbegin(); it != b.w.rend(); ++it) w.push_back({static_cast<AtomId>(*it), true});
  }
  std::size_t steps = 0;
  while (true) {
    std::size_t pos = w.size();
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      bool hit = side == Side::Right ? (w[k].inverse && !w[k + 1].inverse)
                                     : (!w[k].inverse && w[k + 1].inverse);
      if (hit) {
        pos = k;
        break;
      }
    }
    if (pos == w.size()) break;
    if (++steps > max_steps) return {Tri::Inconclusive, {}, {}, {}};
    AtomId s = w[pos].atom, t = w[pos + 1].atom;
    std::vector<Letter> repl;
    if (s != t) {
      const Relation* found = nullptr;
      for (auto& rel : pres_.relations()) {
        AtomId l = static_cast<AtomId>(side == Side::Right ? rel.lhs.front() : rel.lhs.back());
        AtomId r = static_cast<AtomId>(side == Side::Right ? rel.rhs.front() : rel.rhs.back());
        if ((l == s && r == t) || (l == t && r == s)) {
          found = &rel;
          break;
        }
      }
      if (!found) return {Tri::No, {}, {}, {}};
      const auto& rel = *found;
      if (side == Side::Right) {
        const Word& sv = static_cast<AtomId>(rel.lhs[0]) == s ? rel.lhs : rel.rhs;
        const Word& tu = static_cast<AtomId>(rel.lhs[0]) == s ? rel.rhs : rel.lhs;
        for (std::size_t i = 1; i < sv.size(); ++i) repl.push_back({static_cast<AtomId>(sv[i]), false});
        for (std::size_t i = tu.size(); i-- > 1;) repl.push_back({static_cast<AtomId>(tu[i]), true});
      } else {
        const Word* vs = nullptr;
        const Word* ut = nullptr;
        for (const Word* side_word : {&rel.lhs, &rel.rhs}) {
          if (static_cast<AtomId>(side_word->back()) == s) vs = side_word;
          if (static_cast<AtomId>(side_word->back()) == t) ut = side_word;
        }
        if (!vs || !ut || vs == ut) return {Tri::No, {}, {}, {}};
        for (std::size_t i = vs->size() - 1; i-- > 0;) repl.push_back({static_cast<AtomId>((*vs)[i]), true});
        for (std::size_t i = 0; i + 1 < ut->size(); ++i) repl.push_back({static_cast<AtomId>((*ut)[i]), false});
      }
    }
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), repl.begin(), repl.end());
  }
  Word pos_part, neg_part;
  for (auto& l : w) (l.inverse ? neg_part : pos_part).push_back(static_cast<char>(l.atom));
  std::reverse(neg_part.begin(), neg_part.end());
  LcmResult r;
  r.status = Tri::Yes;
  if (side == Side::Right) {
    // a^-1 b = P N^-1, so a P = b N.
    r.compB = canonical(pos_part);
    r.compA = canonical(neg_part);
    r.m = multiply(a, r.compB);
  } else {
    // a b^-1 = N^-1 P, so N a = P b.
    r.compB = canonical(neg_part);
    r.compA = canonical(pos_part);
    r.m = multiply(r.compB, a);
  }
  return r;
}

LcmResult Monoid::lcm_pairwise(const Element& a, const Element& b, Side side,
                               std::size_t max_pairs) const {
  // Memoized reversing on pairs of elements; a pair that depends on itself
  // never terminates, which proves the absence of a common multiple.
  struct Entry {
    bool done = false;
    bool ok = false;
    Element ca, cb;
  };
  std::unordered_map<Word, Entry> memo;
  auto key_of = [](const Element& x, const Element& y) { return x.w + '\xff' + y.w; };
  auto cat = [&](const Element& x, const Element& y) {
    return side == Side::Right ? multiply(x, y) : multiply(y, x);
  };
  auto head = [&](const Element& x) {
    return static_cast<AtomId>(side == Side::Right ? x.w.front() : x.w.back());
  };
  auto tail = [&](const Element& x) {
    return canonical(side == Side::Right ? x.w.substr(1) : x.w.substr(0, x.w.size() - 1));
  };
  bool overflow = false;
  // Returns (ca, cb) with x*cb = y*ca on the right side, mirrored on the left.
  std::function<std::optional<std::pair<Element, Element>>(const Element&, const Element&)> rec =
      [&](const Element& x, const Element& y) -> std::optional<std::pair<Element, Element>> {
    if (x.is_one()) return std::make_pair(one(), y);
    if (y.is_one()) return std::make_pair(x, one());
    if (x == y) return std::make_pair(one(), one());
    Word key = key_of(x, y);
    auto it = memo.find(key);
    if (it != memo.end()) {
      if (!it->second.done) return std::nullopt;
      if (!it->second.ok) return std::nullopt;
      return std::make_pair(it->second.ca, it->second.cb);
    }
    if (memo.size() >= max_pairs) {
      overflow = true;
      return std::nullopt;
    }
    memo.emplace(key, Entry{});
    std::optional<std::pair<Element, Element>> res;
    if (x.length() == 1 && y.length() == 1) {
      AtomId s = head(x), t = head(y);
      for (auto& rel : pres_.relations()) {
        const Word& l = rel.lhs;
        const Word& r = rel.rhs;
        auto lh = static_cast<AtomId>(side == Side::Right ? l.front() : l.back());
        auto rh = static_cast<AtomId>(side == Side::Right ? r.front() : r.back());
        const Word* sv = nullptr;
        const Word* tu = nullptr;
        if (lh == s && rh == t) sv = &l, tu = &r;
        else if (lh == t && rh == s) sv = &r, tu = &l;
        if (!sv) continue;
        Word v = side == Side::Right ? sv->substr(1) : sv->substr(0, sv->size() - 1);
        Word u = side == Side::Right ? tu->substr(1) : tu->substr(0, tu->size() - 1);
        res = std::make_pair(canonical(u), canonical(v));
        break;
      }
    } else if (x.length() == 1) {
      auto swapped = rec(y, x);
      if (swapped) res = std::make_pair(swapped->second, swapped->first);
    } else {
      // x = s*x2: s v y = s*y1 = y*z1, then x2 v y1 = x2*p = y1*q.
      Element s = atom(head(x)), x2 = tail(x);
      auto first = rec(s, y);
      if (first) {
        Element y1 = first->second, z1 = first->first;
        auto second = rec(x2, y1);
        if (second) res = std::make_pair(cat(z1, second->first), second->second);
      }
    }
    auto& e = memo[key];
    e.done = true;
    e.ok = res.has_value();
    if (res) e.ca = res->first, e.cb = res->second;
    return res;
  };
  auto r = rec(a, b);
  if (overflow) return {Tri::Inconclusive, {}, {}, {}};
  if (!r) return {Tri::No, {}, {}, {}};
  LcmResult out;
  out.status = Tri::Yes;
  out.compA = r->first;
  out.compB = r->second;
  out.m = cat(a, out.compB);
  return out;
}

const std::vector<std::vector<Word>>& Monoid::multiples_levels(const Element& a, Side side,
                                                               std::size_t max_length) const {
  Word key = (side == Side::Left ? "L" : "R") + a.w;
  auto& levels = multiples_cache_[key];
  if (levels.empty()) levels.push_back({a.w});
  while (a.length() + levels.size() - 1 < max_length) {
    std::set<Word> next;
    for (auto& m : levels.back())
      for (std::size_t s = 0; s < rank(); ++s) {
        Word c(1, static_cast<char>(s));
        next.insert(canonical(side == Side::Right ? m + c : c + m).w);
      }
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

LcmResult Monoid::lcm_oracle(const Element& a, const Element& b, Side side,
                             std::size_t max_length) const {
  if (a == b) return {Tri::Yes, a, one(), one()};
  std::lock_guard lock(multiples_mutex_);
  const Side div_side = opposite(side);
  const auto& la = multiples_levels(a, side, max_length);
  const auto& lb = multiples_levels(b, side, max_length);
  for (std::size_t L = std::max(a.length(), b.length()); L <= max_length; ++L) {
    const auto& sa = la[L - a.length()];
    const auto& sb = lb[L - b.length()];
    std::vector<Word> hits;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(hits));
    if (hits.empty()) continue;
    if (hits.size() > 1)
      throw LatticeViolation("two minimal common multiples of the same length");
    LcmResult r;
    r.status = Tri::Yes;
    r.m = Element{hits[0]};
    r.compB = *divides(a, r.m, div_side);
    r.compA = *divides(b, r.m, div_side);
    return r;
  }
  return {Tri::No, {}, {}, {}};
}

Tri Monoid::common_multiple_exists(const Element& a, const Element& b, Side side) const {
  return lcm(a, b, side).status;
}

std::vector<Element> Monoid::divisors(const Element& a, Side side) const {
  std::set<Element> seen{one()};
  std::deque<std::pair<Element, Element>> queue{{one(), a}};
  while (!queue.empty()) {
    auto [d, rest] = queue.front();
    queue.pop_front();
    for (AtomId s : atom_divisors(rest, side)) {
      Element nd = side == Side::Left ? multiply(d, atom(s)) : multiply(atom(s), d);
      if (seen.insert(nd).second) queue.emplace_back(nd, *divide_atom(rest, s, side));
    }
  }
  return {seen.begin(), seen.end()};
}

BasicTable Monoid::build_basics(Side side) const {
  BasicTable t;
  t.side = side;
  auto add = [&](const Element& e) {
    auto it = t.index.find(e.w);
    if (it != t.index.end()) return it->second;
    if (t.basics.size() >= caps_.basics_cap)
      throw CapExceeded(CapExceeded::Kind::Basics, "basic closure exceeds basics_cap");
    int id = static_cast<int>(t.basics.size());
    t.basics.push_back(e);
    t.index.emplace(e.w, id);
    return id;
  };
  add(one());
  for (std::size_t s = 0; s < rank(); ++s) add(atom(static_cast<AtomId>(s)));
  const Side div_side = opposite(side);
  std::vector<std::vector<int>> comp;
  std::size_t done = 0;
  while (done < t.basics.size()) {
    std::size_t n = t.basics.size();
    for (auto& row : comp) row.resize(n, -2);
    comp.resize(n, std::vector<int>(n, -2));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (comp[u][v] != -2) continue;
        const Element bu = t.basics[u], bv = t.basics[v];
        std::size_t max_lambda = 0;
        for (auto& e : t.basics) max_lambda = std::max(max_lambda, e.length());
        std::size_t slack = caps_.oracle_slack ? caps_.oracle_slack : 2 * (max_lambda + 1);
        LcmResult r = lcm_pairwise(bu, bv, side, caps_.reversing_cap);
        if (r.status == Tri::Inconclusive)
          r = lcm_oracle(bu, bv, side, bu.length() + bv.length() + slack);
        if (r.status == Tri::Yes) {
          // u v v = v * comp(u,v) on the right side, comp(u,v) * v on the left side.
          auto wu = divides(bv, r.m, div_side);
          auto wv = divides(bu, r.m, div_side);
          comp[u][v] = add(*wu);
          comp[v][u] = add(*wv);
        } else {
          comp[u][v] = comp[v][u] = -1;
        }
      }
    }
    done = n;
  }
  std::size_t n = t.basics.size();
  for (auto& row : comp) row.resize(n, -1);
  comp.resize(n, std::vector<int>(n, -1));
  for (auto& row : comp)
    for (auto& c : row)
      if (c == -2) c = -1;
  t.comp = std::move(comp);
  std::size_t max_lambda = 0;
  for (auto& e : t.basics) max_lambda = std::max(max_lambda, e.length());
  t.C = max_lambda + 1;
  return t;
}

const BasicTable& Monoid::basics(Side side) const {
  std::lock_guard lock(basics_mutex_);
  auto& slot = side == Side::Right ? right_table_ : left_table_;
  if (!slot) slot = std::make_unique<BasicTable>(build_basics(side));
  return *slot;
}

std::vector<Element> Monoid::elements_of_length(std::size_t length) const {
  std::lock_guard lock(multiples_mutex_);
  const auto& levels = multiples_levels(one(), Side::Right, length);
  std::vector<Element> out;
  for (auto& w : levels[length]) out.push_back(Element{w});
  std::sort(out.begin(), out.end());
  return out;
}

Monoid::Stats Monoid::stats() const {
  return {n_classes_.load(), n_hits_.load(), n_lcm_.load(), n_cells_.load()};
}

}  // namespace multired
