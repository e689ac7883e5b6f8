// SPDX-License-Identifier: MIT
#include "multired/multifraction.hpp"

#include <algorithm>
#include <cctype>

namespace multired {

bool Multifraction::is_trivial() const {
  if (entries.empty()) return false;
  return std::all_of(entries.begin(), entries.end(), [](const Element& e) { return e.is_one(); });
}

bool Multifraction::operator<(const Multifraction& o) const {
  if (entries.size() != o.entries.size()) return entries.size() < o.entries.size();
  if (first_sign != o.first_sign) return first_sign == Sign::Pos;
  return entries < o.entries;
}

std::size_t MultifractionHash::operator()(const Multifraction& a) const {
  std::size_t h = a.first_sign == Sign::Pos ? 0x9e3779b97f4a7c15ULL : 0x7f4a7c159e3779b9ULL;
  for (auto& e : a.entries) h = (h ^ std::hash<Word>{}(e.w)) * 0x100000001b3ULL + 0x51;
  return h;
}

Multifraction make_multifraction(const Monoid& M, Sign first, const std::vector<Element>& entries) {
  Multifraction a;
  a.first_sign = first;
  a.entries.reserve(entries.size());
  for (auto& e : entries) a.entries.push_back(M.canonical(e.w));
  return a;
}

Multifraction make_multifraction(const Monoid& M, Sign first, const std::vector<Word>& entries) {
  Multifraction a;
  a.first_sign = first;
  a.entries.reserve(entries.size());
  for (auto& w : entries) a.entries.push_back(M.canonical(w));
  return a;
}

Multifraction product(const Monoid& M, const Multifraction& a, const Multifraction& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Multifraction c = a;
  Sign last = a.sign_at(a.depth());
  std::size_t skip = 0;
  if (last == b.first_sign) {
    c.entries.back() = last == Sign::Pos ? M.multiply(a.entries.back(), b.entries.front())
                                         : M.multiply(b.entries.front(), a.entries.back());
    skip = 1;
  }
  c.entries.insert(c.entries.end(), b.entries.begin() + static_cast<std::ptrdiff_t>(skip),
                   b.entries.end());
  return c;
}

Multifraction inverse(const Multifraction& a) {
  if (a.empty()) return {};
  Multifraction b;
  b.first_sign = flip(a.sign_at(a.depth()));
  b.entries.assign(a.entries.rbegin(), a.entries.rend());
  return b;
}

Multifraction unit(int p) {
  Multifraction a;
  a.first_sign = p < 0 ? Sign::Neg : Sign::Pos;
  a.entries.assign(static_cast<std::size_t>(p < 0 ? -p : p), Element{});
  return a;
}

Multifraction trim(const Multifraction& a) {
  Multifraction b = a;
  while (!b.entries.empty() && b.entries.back().is_one()) b.entries.pop_back();
  return b;
}

SignedWord inverse_word(const SignedWord& w) {
  SignedWord r(w.rbegin(), w.rend());
  for (auto& l : r) l.inv = !l.inv;
  return r;
}

SignedWord positive_word(const Word& w) {
  SignedWord r;
  for (char c : w) r.push_back({static_cast<AtomId>(c), false});
  return r;
}

Multifraction from_signed_word(const Monoid& M, const SignedWord& w) {
  std::vector<Word> runs(1);
  bool neg = false;
  for (auto& l : w) {
    if (l.inv != neg) {
      runs.emplace_back();
      neg = l.inv;
    }
    runs.back().push_back(static_cast<char>(l.atom));
  }
  for (std::size_t k = 1; k < runs.size(); k += 2) std::reverse(runs[k].begin(), runs[k].end());
  return make_multifraction(M, Sign::Pos, runs);
}

SignedWord to_signed_word(const Multifraction& a) {
  SignedWord out;
  for (std::size_t i = 1; i <= a.depth(); ++i) {
    SignedWord part = positive_word(a.at(i).w);
    if (!a.positive_at(i)) part = inverse_word(part);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

std::string upper(const std::string& s) {
  std::string r = s;
  for (auto& c : r) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return r;
}

}  // namespace

SignedWord parse_signed_word(const Presentation& p, const std::string& text) {
  SignedWord out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string tok = text.substr(pos, end - pos);
    if (tok == "1") {
      pos = end;
      continue;
    }
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      std::string base = tok.substr(0, tok.size() - 3);
      Word w;
      try {
        w = p.parse_word(base);
      } catch (const PresentationError&) {
        throw ParseError("unknown atom '" + base + "'", pos);
      }
      SignedWord part = inverse_word(positive_word(w));
      out.insert(out.end(), part.begin(), part.end());
    } else if (auto a = p.find_atom(tok)) {
      out.push_back({*a, false});
    } else {
      for (std::size_t k = 0; k < tok.size(); ++k) {
        std::string c(1, tok[k]);
        if (auto b = p.find_atom(c)) {
          out.push_back({*b, false});
          continue;
        }
        std::string lower = c;
        lower[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(lower[0])));
        if (lower != c) {
          if (auto b = p.find_atom(lower)) {
            out.push_back({*b, true});
            continue;
          }
        }
        throw ParseError("unknown letter '" + c + "'", pos + k);
      }
    }
    pos = end;
  }
  return out;
}

std::string format_signed_word(const Presentation& p, const SignedWord& w) {
  if (w.empty()) return "1";
  bool compact = p.single_letter_names();
  if (compact) {
    for (auto& n : p.atom_names()) {
      std::string u = upper(n);
      if (u == n || p.find_atom(u)) compact = false;
    }
  }
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const std::string& n = p.atom_name(w[k].atom);
    if (compact) {
      out += w[k].inv ? upper(n) : n;
    } else {
      if (k) out += ' ';
      out += n;
      if (w[k].inv) out += "^-1";
    }
  }
  return out;
}

Multifraction parse_multifraction(const Monoid& M, const std::string& text) {
  Multifraction a;
  std::string s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t pos = 0;
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == s.size()) return a;
  if (s[pos] == '/') {
    a.first_sign = Sign::Neg;
    ++pos;
  }
  std::vector<Word> words;
  while (true) {
    std::size_t slash = s.find('/', pos);
    std::string tok = s.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
    if (tok.empty()) throw ParseError("empty entry", pos);
    try {
      words.push_back(M.presentation().parse_word(tok));
    } catch (const PresentationError& e) {
      throw ParseError(e.what(), pos);
    }
    if (slash == std::string::npos) break;
    pos = slash + 1;
  }
  return make_multifraction(M, a.first_sign, words);
}

std::string format_multifraction(const Monoid& M, const Multifraction& a) {
  std::string out = a.first_sign == Sign::Neg && !a.empty() ? "/" : "";
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (i) out += '/';
    out += M.format(a.entries[i]);
  }
  return out;
}

nlohmann::json to_json(const Monoid& M, const Multifraction& a) {
  nlohmann::json j;
  j["sign"] = a.first_sign == Sign::Pos ? "+" : "-";
  j["entries"] = nlohmann::json::array();
  for (auto& e : a.entries) j["entries"].push_back(M.format(e));
  return j;
}

Multifraction multifraction_from_json(const Monoid& M, const nlohmann::json& j) {
  Sign s = j.at("sign").get<std::string>() == "-" ? Sign::Neg : Sign::Pos;
  std::vector<Word> words;
  for (auto& e : j.at("entries")) words.push_back(M.presentation().parse_word(e.get<std::string>()));
  return make_multifraction(M, s, words);
}

}  // namespace multired
