#pragma once

#include "ecat/exact.hpp"

namespace ecat {

/// A_{m,n}: permutations of [n] with m descents. Built from
/// A_{m,n} = (n-m) A_{m-1,n-1} + (m+1) A_{m,n-1} with A_{0,1} = 1 and memoized
/// in a process-wide table that is safe for concurrent callers.
/// Returns 0 for m outside 0..n-1; throws std::invalid_argument for n <= 0.
ExactCount eulerian(long m, long n);

/// EC_n = A_{n,2n+1} / (n+1). Throws std::logic_error if the division is inexact.
ExactCount eulerian_catalan(long n);

/// A_{n,kn+k-1} / (n+1), the number of (k-1)-Dyck permutations. Requires k >= 2.
ExactCount fuss_eulerian_catalan(long k, long n);

/// binomial(2n, n) / (n+1).
ExactCount catalan(long n);

ExactCount binomial(long n, long r);
ExactCount factorial(long n);

}  // namespace ecat
