// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multired {

using AtomId = std::uint8_t;

// Bytes are atom indices, not characters.
using Word = std::string;

struct Relation {
  Word lhs;
  Word rhs;
};

struct ValidationReport {
  bool homogeneous = true;
  bool pair_unique = true;
  bool artin_tits = true;
  bool names_ok = true;
  std::vector<std::string> failures;

  bool ok() const { return homogeneous && pair_unique && names_ok; }
};

class PresentationError : public std::runtime_error {
 public:
  PresentationError(const std::string& msg, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class Presentation {
 public:
  Presentation() = default;
  Presentation(std::string name, std::vector<std::string> atoms,
               std::vector<Relation> relations);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return atoms_.size(); }
  const std::vector<std::string>& atom_names() const { return atoms_; }
  const std::string& atom_name(AtomId a) const { return atoms_.at(a); }
  const std::vector<Relation>& relations() const { return relations_; }

  std::optional<AtomId> find_atom(const std::string& name) const;
  bool single_letter_names() const { return single_letter_; }

  // Returns the relation index whose sides start with s and t (either order).
  std::optional<std::size_t> relation_for_pair(AtomId s, AtomId t) const;
  // Coxeter exponent m(s,t): relation length, 0 when there is no relation.
  std::size_t coxeter_exponent(AtomId s, AtomId t) const;

  std::string format_word(const Word& w) const;
  Word parse_word(const std::string& text) const;

  bool operator==(const Presentation& o) const;

 private:
  std::string name_;
  std::vector<std::string> atoms_;
  std::vector<Relation> relations_;
  bool single_letter_ = true;
};

Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);
ValidationReport validate(const Presentation& p);

Presentation preset(const std::string& name);
std::vector<std::string> preset_names();

// Artin-Tits presentation whose cliques of related atoms all span spherical
// parabolic submonoids. Returns nullopt when the presentation is not of
// Artin-Tits shape.
std::optional<bool> is_fc_type(const Presentation& p);

}  // namespace multired
