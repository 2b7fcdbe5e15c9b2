#pragma once
#include <stdexcept>
#include <string>

namespace wba {

// invariant checks that must survive NDEBUG builds: construction-time
// consistency (purity, rank-nullity, homology concentration) fails loudly
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw std::logic_error("invariant violated: " + what);
}

}  // namespace wba
