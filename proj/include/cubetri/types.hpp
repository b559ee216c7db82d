#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cubetri {

// Arbitrary-precision integers and rationals for counting formulas, barycentric
// coordinates and LP pivoting. Everything geometric on simplices themselves
// runs in 64-bit integers, see the bound below.
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Supported ambient dimensions. Edge matrices of binary simplices have entries
// in {-1,0,1}, so Hadamard's inequality bounds every minor by n^(n/2), which is
// 12^6 < 3e6 at the cap. Dot products of two gcd-reduced facet normals are then
// below 12 * (11^5.5)^2 < 4e12, far inside the int64 range. Larger dimensions
// are rejected instead of silently overflowing. The counting formulas are not
// subject to this cap; they use BigInt throughout.
inline constexpr int kMinDim = 1;
inline constexpr int kMaxDim = 12;

using IntVector = std::vector<std::int64_t>;

// Thrown when an operation whose cost explodes with dimension is requested
// above its default scale without the explicit budget flag.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by the readers on malformed triangulation documents.
struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cubetri
