#include "sdseq/lucas_fast.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace sdseq {

std::pair<Int, Int> lucas_fast(const LucasParams& lp, unsigned long n) {
    Int a = 0, b = 1;  // (U_0, U_1)
    if (n == 0) return {std::move(a), std::move(b)};
    for (int i = std::bit_width(n) - 1; i >= 0; --i) {
        // (U_k, U_{k+1}) -> (U_{2k}, U_{2k+1})
        Int dbl = a * (2 * b - lp.P * a);
        Int dbl1 = b * b - lp.Q * a * a;
        if ((n >> i) & 1UL) {
            a = std::move(dbl1);
            b = lp.P * a - lp.Q * dbl;  // U_{2k+2}
        } else {
            a = std::move(dbl);
            b = std::move(dbl1);
        }
    }
    return {std::move(a), std::move(b)};
}

namespace {

void require_index_gcd_args(const LucasParams& lp, unsigned long i, unsigned long j,
                            const char* who) {
    if (gcd_nn(lp.P, lp.Q) != 1)
        throw std::invalid_argument(std::string(who) + ": requires gcd(P,Q) = 1");
    if (i < 1 || j < 1)
        throw std::invalid_argument(std::string(who) + ": indices must be >= 1");
}

}  // namespace

Int lucas_gcd(const LucasParams& lp, unsigned long i, unsigned long j) {
    require_index_gcd_args(lp, i, j, "lucas_gcd");
    return abs(lucas_fast(lp, std::gcd(i, j)).first);
}

Int lucas_gcd_descent(const LucasParams& lp, unsigned long i, unsigned long j) {
    require_index_gcd_args(lp, i, j, "lucas_gcd_descent");
    auto value_gcd = [&](unsigned long m, unsigned long n) {
        return gcd_nn(lucas_fast(lp, m).first, lucas_fast(lp, n).first);
    };
    Int invariant = value_gcd(i, j);
    // gcd(U_{m+n}, U_n) = gcd(U_m, U_n): each subtraction must leave the
    // value-level gcd unchanged.
    while (i != j) {
        if (i < j) std::swap(i, j);
        i -= j;
        if (value_gcd(i, j) != invariant)
            throw std::logic_error("lucas_gcd_descent: gcd changed during index descent");
    }
    Int result = abs(lucas_fast(lp, i).first);
    if (result != invariant)
        throw std::logic_error("lucas_gcd_descent: final value disagrees with invariant");
    return result;
}

}  // namespace sdseq
