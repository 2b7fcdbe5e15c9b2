#pragma once
#include <gmpxx.h>
#include <string>

namespace wba {

using Rat = mpq_class;

// mpq_class has no long long constructor in this gmpxx; route through long,
// which is wide enough everywhere we build.
static_assert(sizeof(long) >= sizeof(long long), "need 64-bit long");
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// exact numerator/denominator as decimal strings (JSON-safe for big values)
inline std::string num_str(const Rat& q) { return q.get_num().get_str(); }
inline std::string den_str(const Rat& q) { return q.get_den().get_str(); }

inline bool is_nonneg_integer(const Rat& q) {
  return q.get_den() == 1 && q.get_num() >= 0;
}

}  // namespace wba
