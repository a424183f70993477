#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

namespace hamwit {

// Exact unbounded natural; all counting in the library is done in this type.
using Nat = boost::multiprecision::cpp_int;

inline Nat pow2(std::size_t n) { return Nat(1) << n; }

// num/den as a double, exact until the final conversion (safe for values
// far outside double range, e.g. binomial tails at large n).
inline double ratio_as_double(const Nat& num, const Nat& den) {
    boost::multiprecision::cpp_rational q(num, den);
    return q.convert_to<double>();
}

}  // namespace hamwit
