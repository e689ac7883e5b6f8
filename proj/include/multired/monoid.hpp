// SPDX-License-Identifier: MIT
#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "multired/presentation.hpp"

namespace multired {

// Left: prefixes, left divisibility, left gcd, left lcm.
// Right: suffixes, right divisibility, right gcd, right lcm.
// A right lcm a v b is a common right multiple, so a and b left-divide it.
enum class Side { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
const char* side_name(Side s);

enum class Tri { Yes, No, Inconclusive };
const char* tri_name(Tri t);

struct Element {
  Word w;

  std::size_t length() const { return w.size(); }
  bool is_one() const { return w.empty(); }
  bool operator==(const Element& o) const { return w == o.w; }
  bool operator!=(const Element& o) const { return w != o.w; }
  // Length first, then lexicographic in atom order.
  bool operator<(const Element& o) const {
    return w.size() != o.w.size() ? w.size() < o.w.size() : w < o.w;
  }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return std::hash<Word>{}(e.w); }
};

struct Caps {
  std::size_t class_cap = 200000;
  std::size_t reversing_cap = 10000;
  std::size_t basics_cap = 5000;
  // Extra length allowed when the oracle searches for common multiples of
  // two basics; 0 selects 2*C with C taken from the closure built so far.
  std::size_t oracle_slack = 0;
};

Caps caps_from_env(Caps base = {});

class CapExceeded : public std::runtime_error {
 public:
  enum class Kind { Class, Reversing, Basics, Nodes };
  CapExceeded(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class LatticeViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// m = a*compB = b*compA for Side::Right; m = compB*a = compA*b for Side::Left.
struct LcmResult {
  Tri status = Tri::No;
  Element m, compA, compB;
  explicit operator bool() const { return status == Tri::Yes; }
};

struct BasicTable {
  Side side = Side::Right;
  std::vector<Element> basics;
  std::unordered_map<Word, int> index;
  // comp[u][v] = w with u v v = v*w (right table) or u v~ v = w*v (left table); -1 if absent.
  std::vector<std::vector<int>> comp;
  std::size_t C = 1;

  std::optional<int> find(const Element& e) const;
  std::optional<Element> complement(const Element& u, const Element& v) const;
};

class Monoid {
 public:
  explicit Monoid(Presentation p, Caps caps = {});
  ~Monoid();
  Monoid(const Monoid&) = delete;
  Monoid& operator=(const Monoid&) = delete;

  const Presentation& presentation() const { return pres_; }
  const Caps& caps() const { return caps_; }
  std::size_t rank() const { return pres_.rank(); }

  Element one() const { return {}; }
  Element atom(AtomId a) const { return Element{Word(1, static_cast<char>(a))}; }
  Element canonical(const Word& w) const;
  Element parse(const std::string& text) const;
  std::string format(const Element& e) const { return pres_.format_word(e.w); }

  Element multiply(const Element& x, const Element& y) const;
  Element multiply(std::initializer_list<Element> xs) const;

  // All words of the rewrite class of e, canonical word first.
  std::vector<Word> rewrite_class(const Element& e) const;

  // Quotient q with x*q = a (Side::Left) or q*x = a (Side::Right).
  std::optional<Element> divides(const Element& x, const Element& a, Side side) const;
  bool atom_divides(AtomId s, const Element& a, Side side) const;
  std::optional<Element> divide_atom(const Element& a, AtomId s, Side side) const;
  std::vector<AtomId> atom_divisors(const Element& a, Side side) const;

  Element gcd(const Element& a, const Element& b, Side side) const;
  LcmResult lcm(const Element& a, const Element& b, Side side) const;
  // Bounded search over common multiples of length at most max_length.
  LcmResult lcm_oracle(const Element& a, const Element& b, Side side,
                       std::size_t max_length) const;
  // Atom-level word reversing, exact when it terminates.
  LcmResult lcm_reversing(const Element& a, const Element& b, Side side,
                          std::size_t max_steps) const;
  // Memoized reversing over element pairs; a self-dependent pair proves absence.
  LcmResult lcm_pairwise(const Element& a, const Element& b, Side side,
                         std::size_t max_pairs) const;
  Tri common_multiple_exists(const Element& a, const Element& b, Side side) const;

  // Deterministic order: length, then lexicographic.
  std::vector<Element> divisors(const Element& a, Side side) const;

  const BasicTable& basics(Side side) const;
  std::size_t C() const { return basics(Side::Right).C; }

  std::vector<Element> elements_of_length(std::size_t length) const;

  struct Stats {
    std::size_t classes = 0, canon_hits = 0, lcm_calls = 0, grid_cells = 0;
  };
  Stats stats() const;

 private:
  struct ClassInfo;
  std::shared_ptr<const ClassInfo> class_of(const Word& w) const;
  std::shared_ptr<const ClassInfo> build_class(const Word& w) const;
  LcmResult lcm_grid(const Element& a, const Element& b, Side side) const;
  const std::vector<std::vector<Word>>& multiples_levels(const Element& a, Side side,
                                                         std::size_t max_length) const;
  BasicTable build_basics(Side side) const;

  Presentation pres_;
  Caps caps_;
  std::vector<std::vector<std::pair<Word, Word>>> rewrites_by_first_;

  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<Word, Word> canon_cache_;
  mutable std::unordered_map<Word, std::shared_ptr<const ClassInfo>> class_cache_;
  mutable std::unordered_map<Word, LcmResult> lcm_cache_;
  mutable std::mutex multiples_mutex_;
  mutable std::unordered_map<Word, std::vector<std::vector<Word>>> multiples_cache_;

  mutable std::mutex basics_mutex_;
  mutable std::unique_ptr<BasicTable> right_table_, left_table_;

  mutable std::atomic<std::size_t> n_classes_{0}, n_hits_{0}, n_lcm_{0}, n_cells_{0};
};

}  // namespace multired
