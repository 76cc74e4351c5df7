#pragma once

// Built-in test functions with analytic mixed partials and class claims,
// and the standard rectangle suite.

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "coordlab/domain.hpp"

namespace coordlab {

struct CorpusEntry {
  SurfaceFunction fn;
  std::vector<Rectangle> default_rects;  ///< suite rectangles inside fn.valid_on
  std::string notes;
};

struct NamedRect {
  std::string name;
  Rectangle rect;
};

/// unit [0,1]^2, wide [0,2]x[0,1], shifted [1,3]x[0,2], inner [0.05,1]^2,
/// centered [-1,1]^2.
const std::vector<NamedRect>& named_rect_suite();

std::vector<Rectangle> rect_suite();

/// Entries, in order: affine, bilinear, x2y2, exp_sum, sum_sq, pow_s0.25,
/// pow_s0.5, pow_s0.75, cubic_mix, neg_x2y2.
const std::vector<CorpusEntry>& builtin_corpus();

/// Throws InvalidArgument for an unknown label.
const CorpusEntry& find_entry(const std::string& label);

/// Labels from a manifest: one per line; blank lines and text after '#'
/// are ignored.
std::vector<std::string> read_manifest(std::istream& in);

/// Copy of f without its analytic mixed partial, so that consumers fall
/// back to finite differences. The label gains the suffix "_fd".
SurfaceFunction without_mixed(SurfaceFunction f);

}  // namespace coordlab
