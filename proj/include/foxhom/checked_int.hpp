// foxhom - knot group invariants via Fox calculus and homomorphism counting
//
// Overflow-checked 64-bit integer arithmetic. Every coefficient and matrix
// entry in the library goes through these; wraparound is never silent.

#ifndef FOXHOM_CHECKED_INT_HPP_
#define FOXHOM_CHECKED_INT_HPP_

#include <cstdint>
#include <cstdlib>
#include <limits>

#include "error.hpp"

namespace foxhom::checked {

  using int_type = std::int64_t;

  [[nodiscard]] inline int_type add(int_type a, int_type b) {
    int_type r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw Error(ErrorKind::overflow, "integer addition overflowed");
    }
    return r;
  }

  [[nodiscard]] inline int_type sub(int_type a, int_type b) {
    int_type r;
    if (__builtin_sub_overflow(a, b, &r)) {
      throw Error(ErrorKind::overflow, "integer subtraction overflowed");
    }
    return r;
  }

  [[nodiscard]] inline int_type mul(int_type a, int_type b) {
    int_type r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw Error(ErrorKind::overflow, "integer multiplication overflowed");
    }
    return r;
  }

  [[nodiscard]] inline int_type neg(int_type a) {
    if (a == std::numeric_limits<int_type>::min()) {
      throw Error(ErrorKind::overflow, "integer negation overflowed");
    }
    return -a;
  }

  [[nodiscard]] inline int_type abs(int_type a) { return a < 0 ? neg(a) : a; }

  //! Nonnegative gcd; gcd(0, 0) = 0.
  [[nodiscard]] inline int_type gcd(int_type a, int_type b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
      int_type r = a % b;
      a          = b;
      b          = r;
    }
    return a;
  }

}  // namespace foxhom::checked

#endif  // FOXHOM_CHECKED_INT_HPP_
