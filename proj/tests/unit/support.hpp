// SPDX-License-Identifier: MIT
#pragma once

#include <string>

#include "multired/harness.hpp"

namespace multired::test {

struct Ctx {
  Monoid M;
  explicit Ctx(const std::string& name) : M(preset(name)) {}
  Element E(const std::string& s) const { return M.parse(s); }
  Multifraction P(const std::string& s) const { return parse_multifraction(M, s); }
  std::string F(const Multifraction& a) const { return format_multifraction(M, a); }
  std::string S(const Element& e) const { return M.format(e); }
};

// Shared contexts; Monoid caches are safe to reuse across test cases.
inline Ctx& A2() {
  static Ctx c("A2tilde");
  return c;
}
inline Ctx& B3() {
  static Ctx c("braid3");
  return c;
}

}  // namespace multired::test
