// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "multired/multifraction.hpp"

namespace multired {

enum class TransformKind { FreeDelete, PosEquiv, NegEquiv, RightReverse, LeftReverse };

const char* transform_name(TransformKind k);

// Replaces w[position, position + length) by replacement.
struct WordStep {
  TransformKind kind = TransformKind::FreeDelete;
  std::size_t position = 0;
  std::size_t length = 0;
  SignedWord replacement;
  bool operator==(const WordStep& o) const {
    return kind == o.kind && position == o.position && length == o.length &&
           replacement == o.replacement;
  }
};

class StepNotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered by position, then kind, then relation index and orientation.
std::vector<WordStep> applicable_steps(const Presentation& p, const SignedWord& w);
SignedWord apply_step(const Presentation& p, const SignedWord& w, const WordStep& step);

// Repeated deletion of adjacent inverse pairs.
SignedWord free_reduce(const SignedWord& w);

}  // namespace multired
