#pragma once

#include <cstdint>

namespace nsg {

// All semigroup elements, gaps and invariants fit comfortably in a signed
// 64-bit integer; only the half-line witness arithmetic needs more (gmp).
using Int = std::int64_t;

} // namespace nsg
