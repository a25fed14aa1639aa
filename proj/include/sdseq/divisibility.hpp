#ifndef SDSEQ_DIVISIBILITY_HPP
#define SDSEQ_DIVISIBILITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdseq/recurrence.hpp"

namespace sdseq {

enum class DivisibilityKind { Strong, Weak };

// Verdict of a brute-force divisibility scan over a prefix.
// holds == true exactly when witness is absent; a present witness is the
// lexicographically smallest failing pair (i, j), i <= j <= bound.
struct DivisibilityReport {
    DivisibilityKind kind = DivisibilityKind::Strong;
    std::size_t bound = 0;
    bool holds = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness;

    friend bool operator==(const DivisibilityReport&, const DivisibilityReport&) = default;
};

// Checks gcd(u_i, u_j) = |u_{gcd(i,j)}| for all 1 <= i <= j <= N over the
// given prefix (values[0] = u_1).  Early-exits at the first failure.
DivisibilityReport is_strong_divisible(const std::vector<Int>& values);

// Checks u_i | u_j for all i | j, i <= j <= N, with 0 | 0 true and 0 | b
// false for b != 0.
DivisibilityReport is_weak_divisible(const std::vector<Int>& values);

// gcd(u_3, u_4) = 1, which is equivalent to gcd(P,Q) = 1 and gcd(R,Q) = 1;
// both sides are computed and the equivalence is checked on every call.
bool criterion_ind34(const Params& params);

// Under gcd(P,Q) = gcd(R,Q) = 1: gcd(u_n, Q) = 1 and gcd(u_n, u_{n+1}) = 1
// for all n <= N.  Throws std::invalid_argument when the gcd hypotheses fail.
bool check_coprime_chain(const Params& params, std::size_t N);

// Under gcd(R,Q) = gcd(P,Q) = 1: truth of (u_n | u_{2n}) => (u_n | R-P).
// Throws std::invalid_argument when the gcd hypotheses fail.
bool check_div_rp(const Params& params, std::size_t n);

// Converse direction, no hypotheses: if u_n | R-P then u_n | u_{kn} for all
// k <= kmax; vacuously true when u_n does not divide R-P.
bool check_converse_div(const Params& params, std::size_t n, std::size_t kmax);

// Under R | P: R | u_{2k} for all k <= kmax.  Throws std::invalid_argument
// when R does not divide P.
bool check_r_divides_even(const Params& params, std::size_t kmax);

// Result of the index-2..10 divisibility gates.  Always carries u3, u4, u5
// and k = Q - R(P-R) (= R^2 - u3); f = P/R is present whenever R != 0 and
// R | P, independently of the later gates.  reason names the first failed
// gate, or "ok".
struct HSCriterionReport {
    std::optional<Int> f;
    Int k;
    Int u3, u4, u5;
    bool passed = false;
    std::string reason;

    friend bool operator==(const HSCriterionReport&, const HSCriterionReport&) = default;
};

// Gates, evaluated in order with short-circuit: R != 0; gcd(u3,u4) = 1;
// u2 | u4; u3 | u6; u5 | u10.  When all pass, f = P/R is integral and both
// u3 | f-1 and u5 | f-1 hold; these consequences are asserted, and the
// identities k = R^2 - u3 = Q - R(P-R) and u5 = u3^2 - k P^2 are asserted on
// every call.
HSCriterionReport hs_criterion(const Params& params);

// For a weakly divisible prefix: u_n | Q^{n-1} (R-P) for all n <= N.  The
// prefix of length 2N is generated and must pass is_weak_divisible, else
// std::invalid_argument.
bool bound_weak_order2(const Params& params, std::size_t N);

// Order-k version: with d = u_k - (a_1 u_{k-1} + ... + a_{k-1} u_1),
// u_n | a_k^{n-1} d for all n <= N.  Requires a_k != 0, N >= 2k, and a
// weakly divisible length-N prefix; violations throw std::invalid_argument.
bool bound_weak_orderk(const OrderKRecurrence& rec, std::size_t N);

// Reindexes u_1,u_2,... (1-indexed) as v_0,v_1,... (0-indexed) via
//     v_0 = u_k - (a_1 u_{k-1} + ... + a_{k-1} u_1),   v_n = a_k u_n,
// so that v satisfies the same order-k recurrence from index 0.  Returns
// v_0..v_N; requires a_k != 0 and N >= k.
std::vector<Int> hall_transform(const OrderKRecurrence& rec, std::size_t N);

// Divisibility bound on the transformed sequence: v_n | a_k^n v_0 for all
// 1 <= n <= N.  Same preconditions as bound_weak_orderk except N >= k
// suffices.
bool bound_kimberling(const OrderKRecurrence& rec, std::size_t N);

}  // namespace sdseq

#endif
