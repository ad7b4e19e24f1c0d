#pragma once

// Exact arithmetic kernel: arbitrary-precision integers/rationals, binomials,
// and a fraction-free (Bareiss) integer determinant.  Everything downstream is
// exact; no floating point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace tilecount {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// n! for n >= 0.
Int factorial(long n);

// Binomial coefficient C(n, k).  n must be nonnegative; out-of-range k
// (k < 0 or k > n) yields 0, which is the convention the lattice-path
// matrices rely on.
Int binomial(long n, long k);

// 2^e as an exact rational; e may be negative.
Rat pow2(long e);

// "p/q" (or just "p" when q == 1).
std::string rat_str(const Rat& r);

// Inverse of rat_str.  Accepts an optional leading '-' and an optional
// "/denominator" part; anything else is rejected.
Rat parse_rat(const std::string& s);

// Dense row-major integer matrix, just big enough for determinant work.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// Exact determinant via Bareiss's fraction-free elimination with row
// pivoting.  Intermediate values stay integral (every division is exact), so
// there is no rational blow-up; growth is bounded by Hadamard's inequality.
// Throws std::invalid_argument on non-square input.  det of the 0x0 matrix
// is 1.
Int det_exact(const IntMatrix& m);

// All strictly increasing k-element lists over {1,...,n}, in lexicographic
// order.  Used by the formula sweeps.
std::vector<std::vector<int>> combinations(int n, int k);

}  // namespace tilecount
