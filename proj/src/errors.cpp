#include "segdepth/errors.hpp"

namespace segdepth {

const char* err_code_name(ErrCode c) {
  switch (c) {
    case ErrCode::bad_input: return "bad-input";
    case ErrCode::degenerate_position: return "degenerate-position";
    case ErrCode::degenerate_circle: return "degenerate-circle";
    case ErrCode::out_of_range: return "out-of-range";
    case ErrCode::not_convex_position: return "not-convex-position";
    case ErrCode::generation_exhausted: return "generation-exhausted";
    case ErrCode::structure_lost: return "structure-lost";
    case ErrCode::collinear_with_axis: return "collinear-with-axis";
    case ErrCode::journal_corrupt: return "journal-corrupt";
  }
  return "unknown";
}

GeomError::GeomError(ErrCode code, const std::string& msg, std::vector<int> witness)
    : std::runtime_error(std::string(err_code_name(code)) + ": " + msg),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace segdepth
