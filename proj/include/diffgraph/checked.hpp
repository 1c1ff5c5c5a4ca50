#pragma once

#include <cstdint>

#include "errors.hpp"

namespace diffgraph {

// Vertex labels are positive 64-bit integers; all arithmetic that could leave
// the range goes through these helpers.
using Label = std::uint64_t;

inline Label checked_add(Label a, Label b) {
  Label r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("label addition overflows 64 bits");
  return r;
}

inline Label checked_mul(Label a, Label b) {
  Label r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("label multiplication overflows 64 bits");
  return r;
}

inline Label checked_pow(Label base, std::uint64_t exp) {
  Label r = 1;
  while (exp--) r = checked_mul(r, base);
  return r;
}

}  // namespace diffgraph
