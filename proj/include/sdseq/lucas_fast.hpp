#ifndef SDSEQ_LUCAS_FAST_HPP
#define SDSEQ_LUCAS_FAST_HPP

#include <utility>

#include "sdseq/recurrence.hpp"

namespace sdseq {

// (U_n, U_{n+1}) in O(log n) big-integer multiplications.
//
// The doubling steps come from the addition formula
//     U_{m+n} = U_m U_{n+1} - Q U_{m-1} U_n
// specialized to m = n and m = n+1, with U_{n-1} eliminated through
// Q U_{n-1} = P U_n - U_{n+1}:
//     U_{2n}   = U_n (U_{n+1} - Q U_{n-1}) = U_n (2 U_{n+1} - P U_n)
//     U_{2n+1} = U_{n+1}^2 - Q U_n^2
std::pair<Int, Int> lucas_fast(const LucasParams& lp, unsigned long n);

// gcd(U_i, U_j) = |U_{gcd(i,j)}|, valid whenever gcd(P,Q) = 1; evaluated as
// lucas_fast at the index gcd.  Throws std::invalid_argument when
// gcd(P,Q) != 1 or i or j is zero.
Int lucas_gcd(const LucasParams& lp, unsigned long i, unsigned long j);

// Debug route for the same value: Euclid-style index descent
// gcd(U_{m+n}, U_n) = gcd(U_m, U_n), asserting at every subtraction step that
// the gcd of the materialized values is preserved.  Same preconditions.
Int lucas_gcd_descent(const LucasParams& lp, unsigned long i, unsigned long j);

}  // namespace sdseq

#endif
