// Test-only brute-force oracles, deliberately independent of the library
// implementations they check: gcd is hand-rolled Euclid (not mpz_gcd),
// divisibility is remainder-based, and witness scans are plain double loops.
#ifndef SDSEQ_TESTS_ORACLES_HPP
#define SDSEQ_TESTS_ORACLES_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sdseq/integer.hpp"

namespace oracles {

using sdseq::Int;

inline Int naive_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int naive_gcd(Int a, Int b) {
    a = naive_abs(a);
    b = naive_abs(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline bool naive_divides(const Int& a, const Int& b) {
    if (a == 0) return b == 0;
    return b % a == 0;
}

inline std::size_t naive_index_gcd(std::size_t a, std::size_t b) {
    while (b != 0) {
        std::size_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// First (i, j) in lexicographic order, i <= j <= N, violating
// gcd(u_i, u_j) = |u_{gcd(i,j)}|; values[0] holds u_1.
inline std::optional<std::pair<std::size_t, std::size_t>> strong_witness(
    const std::vector<Int>& values) {
    const std::size_t N = values.size();
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = i; j <= N; ++j)
            if (naive_gcd(values[i - 1], values[j - 1]) !=
                naive_abs(values[naive_index_gcd(i, j) - 1]))
                return std::pair{i, j};
    return std::nullopt;
}

// First (i, j) in lexicographic order with i | j <= N violating u_i | u_j.
inline std::optional<std::pair<std::size_t, std::size_t>> weak_witness(
    const std::vector<Int>& values) {
    const std::size_t N = values.size();
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = i; j <= N; j += i)
            if (!naive_divides(values[i - 1], values[j - 1])) return std::pair{i, j};
    return std::nullopt;
}

}  // namespace oracles

#endif
