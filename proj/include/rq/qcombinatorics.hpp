#pragma once

#include "rq/qpoly.hpp"

namespace rq {

/// {n}_q = 1 + q + ... + q^{n-1}; the empty sum 0 when n <= 0.
QPoly q_number(long n);

/// {n}_{q^k} = 1 + q^k + ... + q^{k(n-1)}.
QPoly q_number_at_power(long n, unsigned k);

/// {n}_q! = {1}_q {2}_q ... {n}_q; the empty product 1 when n <= 0.
QPoly q_factorial(long n);

/// Gaussian binomial [n p]_q.  Zero when p < 0 or p > n.  Computed by the
/// Pascal recurrence and memoized; the table is shared and mutex-guarded.
QPoly q_binomial(long n, long p);

/// Definitional form {n}!/({p}!{n-p}!) via exact polynomial division.
/// Throws ArithmeticError if the division leaves a remainder.
QPoly q_binomial_by_factorials(long n, long p);

/// Ordinary binomial coefficient C(n, 2) = n(n-1)/2, as used for q-exponents.
inline long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace rq
