// SPDX-License-Identifier: MIT
#include "multired/signedwords.hpp"

#include <algorithm>

namespace multired {

const char* transform_name(TransformKind k) {
  switch (k) {
    case TransformKind::FreeDelete: return "free_delete";
    case TransformKind::PosEquiv: return "pos_equiv";
    case TransformKind::NegEquiv: return "neg_equiv";
    case TransformKind::RightReverse: return "right_reverse";
    case TransformKind::LeftReverse: return "left_reverse";
  }
  return "?";
}

namespace {

bool matches(const SignedWord& w, std::size_t pos, const SignedWord& pattern) {
  if (pos + pattern.size() > w.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

SignedWord tail(const Word& w) { return positive_word(w.substr(1)); }
SignedWord head(const Word& w) { return positive_word(w.substr(0, w.size() - 1)); }

void append(SignedWord& out, const SignedWord& part) { out.insert(out.end(), part.begin(), part.end()); }

}  // namespace

std::vector<WordStep> applicable_steps(const Presentation& p, const SignedWord& w) {
  std::vector<WordStep> out;
  const auto& rels = p.relations();
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (pos + 1 < w.size() && w[pos].atom == w[pos + 1].atom && w[pos].inv != w[pos + 1].inv)
      out.push_back({TransformKind::FreeDelete, pos, 2, {}});
    for (const auto& r : rels) {
      for (int o = 0; o < 2; ++o) {
        const Word& from = o ? r.rhs : r.lhs;
        const Word& to = o ? r.lhs : r.rhs;
        if (matches(w, pos, positive_word(from)))
          out.push_back({TransformKind::PosEquiv, pos, from.size(), positive_word(to)});
      }
    }
    for (const auto& r : rels) {
      for (int o = 0; o < 2; ++o) {
        const Word& from = o ? r.rhs : r.lhs;
        const Word& to = o ? r.lhs : r.rhs;
        if (matches(w, pos, inverse_word(positive_word(from))))
          out.push_back({TransformKind::NegEquiv, pos, from.size(), inverse_word(positive_word(to))});
      }
    }
    if (pos + 1 >= w.size()) continue;
    const SignedLetter& l0 = w[pos];
    const SignedLetter& l1 = w[pos + 1];
    if (l0.inv && !l1.inv && l0.atom != l1.atom) {
      // s^-1 t becomes v u^-1 for a relation s v = t u.
      for (const auto& r : rels) {
        for (int o = 0; o < 2; ++o) {
          const Word& sv = o ? r.rhs : r.lhs;
          const Word& tu = o ? r.lhs : r.rhs;
          if (static_cast<AtomId>(sv.front()) != l0.atom || static_cast<AtomId>(tu.front()) != l1.atom)
            continue;
          SignedWord rep = tail(sv);
          append(rep, inverse_word(tail(tu)));
          out.push_back({TransformKind::RightReverse, pos, 2, rep});
        }
      }
    }
    if (!l0.inv && l1.inv && l0.atom != l1.atom) {
      // s t^-1 becomes u^-1 v for a relation u s = v t.
      for (const auto& r : rels) {
        for (int o = 0; o < 2; ++o) {
          const Word& us = o ? r.rhs : r.lhs;
          const Word& vt = o ? r.lhs : r.rhs;
          if (static_cast<AtomId>(us.back()) != l0.atom || static_cast<AtomId>(vt.back()) != l1.atom)
            continue;
          SignedWord rep = inverse_word(head(us));
          append(rep, head(vt));
          out.push_back({TransformKind::LeftReverse, pos, 2, rep});
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const WordStep& a, const WordStep& b) {
    if (a.position != b.position) return a.position < b.position;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });
  return out;
}

SignedWord apply_step(const Presentation& p, const SignedWord& w, const WordStep& step) {
  auto steps = applicable_steps(p, w);
  if (std::find(steps.begin(), steps.end(), step) == steps.end())
    throw StepNotApplicable(std::string("step ") + transform_name(step.kind) + " at position " +
                            std::to_string(step.position) + " is not applicable");
  SignedWord out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(step.position));
  append(out, step.replacement);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(step.position + step.length), w.end());
  return out;
}

SignedWord free_reduce(const SignedWord& w) {
  SignedWord out;
  for (auto& l : w) {
    if (!out.empty() && out.back().atom == l.atom && out.back().inv != l.inv)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace multired
