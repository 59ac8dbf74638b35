#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace segdepth {

enum class ErrCode {
  bad_input,
  degenerate_position,
  degenerate_circle,
  out_of_range,
  not_convex_position,
  generation_exhausted,
  structure_lost,
  collinear_with_axis,
  journal_corrupt,
};

const char* err_code_name(ErrCode c);

/// Library-wide error. `witness()` carries point indices when a degeneracy
/// (or a non-vertex point) was located.
class GeomError : public std::runtime_error {
 public:
  GeomError(ErrCode code, const std::string& msg, std::vector<int> witness = {});

  ErrCode code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  ErrCode code_;
  std::vector<int> witness_;
};

}  // namespace segdepth
