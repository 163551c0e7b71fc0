#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "dicol/error.hpp"
#include "dicol/vertex_set.hpp"

namespace dicol::internal {

using Mask = std::uint64_t;

inline constexpr Mask bit(int v) { return Mask{1} << v; }
inline constexpr Mask all(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline void require_solver_order(int n, const char* what) {
  if (n > kSolverMaxVertices)
    throw LimitExceeded(std::string(what) + ": order " + std::to_string(n) + " exceeds " +
                        std::to_string(kSolverMaxVertices));
}

}  // namespace dicol::internal

namespace dicol::internal {

// True when the subdigraph induced by s (given by out-neighbour masks) has no
// directed cycle. Repeatedly strips sinks.
template <class Rows>
inline bool acyclic_on(const Rows& out, Mask s) {
  bool changed = true;
  while (s && changed) {
    changed = false;
    for (Mask m = s; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if ((out[v] & s) == 0) {
        s &= ~bit(v);
        changed = true;
      }
    }
  }
  return s == 0;
}

}  // namespace dicol::internal
