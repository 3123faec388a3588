#pragma once

#include <string>

#include "avsocle/errors.hpp"
#include "avsocle/rational.hpp"
#include "avsocle/theta_orbits.hpp"

namespace avsocle {

enum class RangeLabel { good, weakly_fair, mediocre, outside };

inline const char* to_string(RangeLabel label) {
  switch (label) {
    case RangeLabel::good: return "good";
    case RangeLabel::weakly_fair: return "weakly_fair";
    case RangeLabel::mediocre: return "mediocre";
    default: return "outside";
  }
}

struct RangeFlags {
  bool good = false;
  bool weakly_fair = false;
  bool mediocre = false;
};

/// Positivity ranges of the height parameter. All comparisons are exact
/// rationals; the weakly-fair bound is a half-integer and equality is
/// precisely where it matters.
///   good:        h_i >= h_{i+1}
///   weakly fair: h_i - h_{i+1} >= -(b_i + b_{i+1})/2
///   mediocre:    h_i - h_j >= -max(b_i, b_j) - sum of blocks strictly between
/// with b_i = m_i + n_i.
inline RangeFlags range_flags(const DFMParam& param) {
  if (param.h.size() != param.pair.length())
    throw invalid_input("height vector length must match pair length");
  const auto b = param.pair.blocks();
  const auto& h = param.h;
  RangeFlags flags{true, true, true};
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    if (h[i] < h[i + 1]) flags.good = false;
    if (h[i] - h[i + 1] < -Rat(b[i] + b[i + 1], 2)) flags.weakly_fair = false;
  }
  for (std::size_t i = 0; i + 1 < h.size() && flags.mediocre; ++i) {
    long long between = 0;
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      if (h[i] - h[j] < Rat(-std::max(b[i], b[j]) - between)) {
        flags.mediocre = false;
        break;
      }
      between += b[j];
    }
  }
  return flags;
}

/// Strongest of the nested labels, or outside.
inline RangeLabel classify_range(const DFMParam& param) {
  RangeFlags flags = range_flags(param);
  if (flags.good) return RangeLabel::good;
  if (flags.weakly_fair) return RangeLabel::weakly_fair;
  if (flags.mediocre) return RangeLabel::mediocre;
  return RangeLabel::outside;
}

}  // namespace avsocle
