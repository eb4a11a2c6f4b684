#pragma once

#include <mutex>
#include <utility>
#include <vector>

#include "hilbnef/quad.hpp"

namespace hilbnef {

/// Generalized Fibonacci sequence for a parameter a >= 1:
///   a_0 = 0, a_1 = 1, a_{m+2} = a*a_{m+1} + a_m,
/// extended to negative indices by a_{-m} = (-1)^{m+1} a_m.
/// Values are exact integers, memoized iteratively.
class FibSeq {
public:
    explicit FibSeq(long a);

    long param() const { return a_; }

    /// a_m for any integer index m.
    Int at(long m) const;

private:
    long a_;
    mutable std::vector<Int> memo_;  // indices 0..len-1, guarded by mu_
    mutable std::mutex mu_;
};

/// One-shot evaluation of a_m (no shared memo).
Int fib(long a, long m);

/// The roots alpha < 0 < beta of r^2 - a r - 1 = 0, as exact elements of
/// Q(sqrt(a^2+4)): alpha = (a - sqrt(a^2+4))/2, beta = (a + sqrt(a^2+4))/2.
std::pair<QuadNum, QuadNum> quadratic_roots(long a);

}  // namespace hilbnef
