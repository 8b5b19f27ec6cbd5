#pragma once

#include <cstddef>

namespace lintype {

// Hard resource limits.  Exceeding one raises ResourceError instead of
// thrashing.  Set before starting a computation; not synchronized.
struct Limits {
  static std::size_t term_cap;        // max terms per polynomial
  static long reduction_step_cap;     // max reduction steps per normal form
  static long pair_cap;               // max S-pairs per basis computation
  static int saturation_cap;          // max colon iterations per saturation
};

}  // namespace lintype
