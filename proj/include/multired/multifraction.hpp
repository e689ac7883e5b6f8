// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "multired/monoid.hpp"

namespace multired {

enum class Sign { Pos, Neg };

inline Sign flip(Sign s) { return s == Sign::Pos ? Sign::Neg : Sign::Pos; }

// Entries are 1-based in all accessors; sign alternates starting from first_sign.
struct Multifraction {
  Sign first_sign = Sign::Pos;
  std::vector<Element> entries;

  std::size_t depth() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  const Element& at(std::size_t i) const { return entries.at(i - 1); }
  Element& at(std::size_t i) { return entries.at(i - 1); }
  Sign sign_at(std::size_t i) const { return (i % 2 == 1) ? first_sign : flip(first_sign); }
  bool positive_at(std::size_t i) const { return sign_at(i) == Sign::Pos; }
  bool is_positive() const { return !empty() && first_sign == Sign::Pos; }
  // True for 1_n with n != 0.
  bool is_trivial() const;

  bool operator==(const Multifraction& o) const {
    if (entries.empty() || o.entries.empty()) return entries.empty() && o.entries.empty();
    return first_sign == o.first_sign && entries == o.entries;
  }
  bool operator!=(const Multifraction& o) const { return !(*this == o); }
  bool operator<(const Multifraction& o) const;
};

struct MultifractionHash {
  std::size_t operator()(const Multifraction& a) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ContextMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Multifraction make_multifraction(const Monoid& M, Sign first, const std::vector<Element>& entries);
Multifraction make_multifraction(const Monoid& M, Sign first, const std::vector<Word>& entries);

Multifraction product(const Monoid& M, const Multifraction& a, const Multifraction& b);
Multifraction inverse(const Multifraction& a);
Multifraction unit(int p);
// Removes trailing trivial entries.
Multifraction trim(const Multifraction& a);

struct SignedLetter {
  AtomId atom = 0;
  bool inv = false;
  bool operator==(const SignedLetter& o) const { return atom == o.atom && inv == o.inv; }
  bool operator!=(const SignedLetter& o) const { return !(*this == o); }
};
using SignedWord = std::vector<SignedLetter>;

SignedWord inverse_word(const SignedWord& w);
SignedWord positive_word(const Word& w);
// Always a positive multifraction; a leading negative run yields a first entry 1
// and the empty word yields the depth-1 multifraction 1.
Multifraction from_signed_word(const Monoid& M, const SignedWord& w);
SignedWord to_signed_word(const Multifraction& a);

// Inverse letters: uppercase of a single-letter atom, or name^-1.
SignedWord parse_signed_word(const Presentation& p, const std::string& text);
std::string format_signed_word(const Presentation& p, const SignedWord& w);

Multifraction parse_multifraction(const Monoid& M, const std::string& text);
std::string format_multifraction(const Monoid& M, const Multifraction& a);

nlohmann::json to_json(const Monoid& M, const Multifraction& a);
Multifraction multifraction_from_json(const Monoid& M, const nlohmann::json& j);

}  // namespace multired
