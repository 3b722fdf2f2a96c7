#pragma once

#include <cstdint>

#include "laguerre/plane.hpp"

namespace laguerre::test {

// Coordinate ids of the prime-order models; element index = residue.
inline PointId pt(std::uint32_t q, std::uint32_t x, std::uint32_t y) { return {x * q + y}; }
inline PointId at_inf(std::uint32_t q, std::uint32_t y) { return {q * q + y}; }
inline CircleId circ(std::uint32_t q, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return {a * q * q + b * q + c};
}

// Membership in the miquelian model over Z/q, computed without the library.
inline bool on_parabola(std::uint32_t q, std::uint32_t a, std::uint32_t b, std::uint32_t c, PointId p) {
  if (p.value >= q * q) return p.value - q * q == a;
  std::uint32_t x = p.value / q, y = p.value % q;
  return (a * x * x + b * x + c) % q == y;
}

}  // namespace laguerre::test
