#pragma once

#include <initializer_list>
#include <string>

#include "segdepth/errors.hpp"
#include "segdepth/points.hpp"

namespace segdepth::detail {

/// Indices must be pairwise distinct and inside [0, set.size()).
inline void check_indices(const PointSet& s, std::initializer_list<int> idx) {
  const int n = s.size();
  int seen[4];
  int k = 0;
  for (int i : idx) {
    if (i < 0 || i >= n) {
      throw GeomError(ErrCode::out_of_range,
                      "point index " + std::to_string(i) + " outside [0, " +
                          std::to_string(n) + ")");
    }
    for (int j = 0; j < k; ++j) {
      if (seen[j] == i) {
        throw GeomError(ErrCode::bad_input,
                        "point indices must be distinct, got " + std::to_string(i) +
                            " twice");
      }
    }
    seen[k++] = i;
  }
}

}  // namespace segdepth::detail
