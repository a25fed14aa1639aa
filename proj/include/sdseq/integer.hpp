#ifndef SDSEQ_INTEGER_HPP
#define SDSEQ_INTEGER_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace sdseq {

// All sequence values are exact; |u_n| grows like (|P|+|Q|)^n, so the core
// never touches fixed-width integers.
using Int = mpz_class;

// gcd with the usual library conventions: result >= 0, gcd_nn(0,0) = 0.
Int gcd_nn(const Int& a, const Int& b);

// a | b over Z: exists c with b = a*c. 0 | 0 holds, 0 | b fails for b != 0.
bool divides(const Int& a, const Int& b);

// base^e for e >= 0, with 0^0 = 1.
Int pow_nn(const Int& base, unsigned long e);

// Quotient b / a, required exact; throws std::invalid_argument otherwise.
Int exact_div(const Int& b, const Int& a);

// Strict decimal parse: optional sign then digits, nothing else.
std::optional<Int> parse_int(const std::string& text);

std::string to_decimal(const Int& v);

}  // namespace sdseq

#endif
