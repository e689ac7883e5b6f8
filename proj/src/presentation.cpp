// SPDX-License-Identifier: MIT
#include "multired/presentation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <regex>
#include <set>
#include <sstream>

namespace multired {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_atom_name(const std::string& n) {
  if (n.empty() || n == "1") return false;
  for (char c : n) {
    if (c == '/' || c == '^' || c == '-' || c == '.' || c == '#' || c == '=' ||
        std::isspace(static_cast<unsigned char>(c)))
      return false;
  }
  return true;
}

Word alternating(AtomId s, AtomId t, std::size_t m) {
  Word w;
  for (std::size_t k = 0; k < m; ++k) w.push_back(static_cast<char>(k % 2 ? t : s));
  return w;
}

Relation braid_relation(AtomId s, AtomId t, std::size_t m) {
  return {alternating(s, t, m), alternating(t, s, m)};
}

std::vector<std::string> letter_names(std::size_t n) {
  if (n > 26) throw PresentationError("preset rank above 26 is not supported");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return names;
}

}  // namespace

PresentationError::PresentationError(const std::string& msg, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + msg
                                  : msg),
      line_(line),
      column_(column) {}

Presentation::Presentation(std::string name, std::vector<std::string> atoms,
                           std::vector<Relation> relations)
    : name_(std::move(name)), atoms_(std::move(atoms)), relations_(std::move(relations)) {
  if (atoms_.size() > 255) throw PresentationError("too many atoms");
  single_letter_ = std::all_of(atoms_.begin(), atoms_.end(),
                               [](const std::string& a) { return a.size() == 1; });
}

std::optional<AtomId> Presentation::find_atom(const std::string& name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i] == name) return static_cast<AtomId>(i);
  return std::nullopt;
}

std::optional<std::size_t> Presentation::relation_for_pair(AtomId s, AtomId t) const {
  for (std::size_t k = 0; k < relations_.size(); ++k) {
    const auto& r = relations_[k];
    AtomId l = static_cast<AtomId>(r.lhs[0]), q = static_cast<AtomId>(r.rhs[0]);
    if ((l == s && q == t) || (l == t && q == s)) return k;
  }
  return std::nullopt;
}

std::size_t Presentation::coxeter_exponent(AtomId s, AtomId t) const {
  if (s == t) return 1;
  auto k = relation_for_pair(s, t);
  return k ? relations_[*k].lhs.size() : 0;
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_letter_ && i > 0) out += '.';
    out += atoms_.at(static_cast<AtomId>(w[i]));
  }
  return out;
}

Word Presentation::parse_word(const std::string& text) const {
  Word w;
  if (text == "1" || text.empty()) return w;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto dot = text.find('.', start);
    std::string tok = text.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (tok.empty()) throw PresentationError("empty atom token in word '" + text + "'");
    if (auto a = find_atom(tok)) {
      w.push_back(static_cast<char>(*a));
    } else {
      for (char c : tok) {
        auto b = find_atom(std::string(1, c));
        if (!b) throw PresentationError("unknown atom in word '" + text + "'");
        w.push_back(static_cast<char>(*b));
      }
    }
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return w;
}

bool Presentation::operator==(const Presentation& o) const {
  if (name_ != o.name_ || atoms_ != o.atoms_ || relations_.size() != o.relations_.size())
    return false;
  for (std::size_t k = 0; k < relations_.size(); ++k)
    if (relations_[k].lhs != o.relations_[k].lhs || relations_[k].rhs != o.relations_[k].rhs)
      return false;
  return true;
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::string name = "custom";
  std::vector<std::string> atoms;
  bool have_atoms = false;
  std::vector<std::pair<int, std::string>> rel_lines;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    auto colon = t.find(':');
    if (colon == std::string::npos)
      throw PresentationError("expected 'atoms:', 'rel:' or 'name:'", lineno, 1);
    std::string key = trim(t.substr(0, colon));
    std::string value = trim(t.substr(colon + 1));
    if (key == "atoms") {
      if (have_atoms) throw PresentationError("duplicate atoms line", lineno, 1);
      have_atoms = true;
      std::istringstream toks(value);
      std::string a;
      std::set<std::string> seen;
      while (toks >> a) {
        if (!valid_atom_name(a))
          throw PresentationError("invalid atom name '" + a + "'", lineno,
                                  static_cast<int>(line.find(a)) + 1);
        if (!seen.insert(a).second)
          throw PresentationError("duplicate atom name '" + a + "'", lineno,
                                  static_cast<int>(line.find(a)) + 1);
        atoms.push_back(a);
      }
    } else if (key == "rel") {
      rel_lines.emplace_back(lineno, value);
    } else if (key == "name") {
      if (value.empty()) throw PresentationError("empty name", lineno, static_cast<int>(colon) + 2);
      name = value;
    } else {
      throw PresentationError("unknown directive '" + key + "'", lineno, 1);
    }
  }
  if (!have_atoms) throw PresentationError("missing 'atoms:' line");
  Presentation bare(name, atoms, {});
  std::vector<Relation> rels;
  for (auto& [ln, value] : rel_lines) {
    auto eq = value.find('=');
    if (eq == std::string::npos) throw PresentationError("relation lacks '='", ln, 1);
    std::string l = trim(value.substr(0, eq)), r = trim(value.substr(eq + 1));
    if (l.empty() || r.empty()) throw PresentationError("empty relation side", ln, 1);
    try {
      rels.push_back({bare.parse_word(l), bare.parse_word(r)});
    } catch (const PresentationError& e) {
      throw PresentationError(e.what(), ln, 1);
    }
  }
  Presentation p(name, atoms, rels);
  auto rep = validate(p);
  if (!rep.ok()) throw PresentationError("validation failed: " + rep.failures.front());
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "name: " + p.name() + "\natoms:";
  for (auto& a : p.atom_names()) out += " " + a;
  out += "\n";
  for (auto& r : p.relations())
    out += "rel: " + p.format_word(r.lhs) + " = " + p.format_word(r.rhs) + "\n";
  return out;
}

ValidationReport validate(const Presentation& p) {
  ValidationReport rep;
  for (auto& a : p.atom_names()) {
    if (!valid_atom_name(a)) {
      rep.names_ok = false;
      rep.failures.push_back("invalid atom name '" + a + "'");
    }
  }
  std::set<std::pair<AtomId, AtomId>> pairs;
  for (auto& r : p.relations()) {
    std::string shown = p.format_word(r.lhs) + " = " + p.format_word(r.rhs);
    if (r.lhs.size() != r.rhs.size() || r.lhs.size() < 2) {
      rep.homogeneous = false;
      rep.failures.push_back("homogeneity: relation " + shown + " has sides of unequal length or length below 2");
    }
    if (r.lhs.empty() || r.rhs.empty()) continue;
    AtomId s = static_cast<AtomId>(r.lhs[0]), t = static_cast<AtomId>(r.rhs[0]);
    if (s == t) {
      rep.pair_unique = false;
      rep.failures.push_back("pair-uniqueness: relation " + shown + " has sides starting with the same atom");
      rep.artin_tits = false;
      continue;
    }
    if (!pairs.insert({std::min(s, t), std::max(s, t)}).second) {
      rep.pair_unique = false;
      rep.failures.push_back("pair-uniqueness: second relation for the pair " + p.atom_name(s) +
                             "," + p.atom_name(t));
    }
    if (r.lhs.size() != r.rhs.size() || r.lhs != alternating(s, t, r.lhs.size()) ||
        r.rhs != alternating(t, s, r.rhs.size()))
      rep.artin_tits = false;
  }
  return rep;
}

Presentation preset(const std::string& raw) {
  std::string name;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) name += c;
  std::smatch m;
  auto num = [&](int k) { return static_cast<std::size_t>(std::stoul(m[k].str())); };
  if (name == "A2tilde" || name == "A2~") {
    auto atoms = letter_names(3);
    return Presentation("A2tilde", atoms,
                        {braid_relation(0, 1, 3), braid_relation(1, 2, 3), braid_relation(2, 0, 3)});
  }
  if (std::regex_match(name, m, std::regex(R"(K\((\d+),3\)|K(\d+)_?3)"))) {
    std::size_t n = m[1].matched ? num(1) : num(2);
    if (n < 3) throw PresentationError("K(n,3) needs n >= 3");
    std::vector<Relation> rels;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = s + 1; t < n; ++t)
        rels.push_back(braid_relation(static_cast<AtomId>(s), static_cast<AtomId>(t), 3));
    return Presentation("K(" + std::to_string(n) + ",3)", letter_names(n), rels);
  }
  if (std::regex_match(name, m, std::regex(R"(braid\((\d+)\)|braid(\d+))"))) {
    std::size_t n = m[1].matched ? num(1) : num(2);
    if (n < 2) throw PresentationError("braid(n) needs n >= 2");
    std::vector<Relation> rels;
    for (std::size_t s = 0; s + 1 < n; ++s)
      for (std::size_t t = s + 1; t + 1 < n; ++t)
        rels.push_back(braid_relation(static_cast<AtomId>(s), static_cast<AtomId>(t), t == s + 1 ? 3 : 2));
    return Presentation("braid(" + std::to_string(n) + ")", letter_names(n - 1), rels);
  }
  if (name == "A3tilde" || name == "A3~") {
    return Presentation("A3tilde", letter_names(4),
                        {braid_relation(0, 1, 3), braid_relation(1, 2, 3), braid_relation(2, 3, 3),
                         braid_relation(3, 0, 3), braid_relation(0, 2, 2), braid_relation(1, 3, 2)});
  }
  if (name == "C2tilde" || name == "C2~") {
    return Presentation("C2tilde", letter_names(3),
                        {braid_relation(0, 1, 4), braid_relation(1, 2, 4), braid_relation(0, 2, 2)});
  }
  if (std::regex_match(name, m, std::regex(R"(free\((\d+)\)|free(\d+))"))) {
    std::size_t n = m[1].matched ? num(1) : num(2);
    if (n < 1) throw PresentationError("free(n) needs n >= 1");
    return Presentation("free(" + std::to_string(n) + ")", letter_names(n), {});
  }
  if (std::regex_match(name, m, std::regex(R"(I2\((\d+)\)|I2_?(\d+))"))) {
    std::size_t k = m[1].matched ? num(1) : num(2);
    if (k < 2) throw PresentationError("I2(m) needs m >= 2");
    return Presentation("I2(" + std::to_string(k) + ")", letter_names(2), {braid_relation(0, 1, k)});
  }
  throw PresentationError("unknown preset '" + raw + "'");
}

std::vector<std::string> preset_names() {
  return {"A2tilde", "K(n,3)", "braid(n)", "A3tilde", "C2tilde", "free(n)", "I2(m)"};
}

std::optional<bool> is_fc_type(const Presentation& p) {
  if (!validate(p).artin_tits) return std::nullopt;
  const std::size_t n = p.rank();
  if (n > 20) return std::nullopt;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<AtomId> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(static_cast<AtomId>(i));
    bool clique = true;
    for (std::size_t i = 0; i < sub.size() && clique; ++i)
      for (std::size_t j = i + 1; j < sub.size() && clique; ++j)
        if (p.coxeter_exponent(sub[i], sub[j]) == 0) clique = false;
    if (!clique) continue;
    Eigen::MatrixXd b(sub.size(), sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = 0; j < sub.size(); ++j)
        b(i, j) = i == j ? 1.0
                         : -std::cos(std::numbers::pi /
                                     static_cast<double>(p.coxeter_exponent(sub[i], sub[j])));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
    if (es.eigenvalues().minCoeff() <= 1e-9) return false;
  }
  return true;
}

}  // namespace multired
