#ifndef SDSEQ_CLASSIFIER_HPP
#define SDSEQ_CLASSIFIER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sdseq/recurrence.hpp"

namespace sdseq {

enum class Family {
    LucasCoprime,
    PulseFamily,
    NullQFamily,
    PeriodSixFamily,
};

std::string family_name(Family f);

// Constant-time verdict of the complete classification.  families is a set:
// overlaps are real (e.g. (P=0,Q=-1,R=0) is both a coprime Lucas sequence and
// a pulse sequence) and collapsing them to one tag would misstate the result.
struct Classification {
    bool strong_divisible = false;
    std::vector<Family> families;  // ascending enum order, no duplicates
    bool geometric = false;        // Q = R(P-R), i.e. u_n = R^{n-1}
    std::optional<Int> epsilon;    // Pulse: -Q; NullQ / PeriodSix: R
    std::optional<Int> r;          // Pulse: R

    bool has(Family f) const;

    friend bool operator==(const Classification&, const Classification&) = default;
};

// Membership conditions, pure arithmetic on (P,Q,R) — the sequence is never
// generated here:
//   LucasCoprime    iff  R = P and gcd(P,Q) = 1,
//                   or   Q = R(P-R) and |R| = 1   (the geometric sequence
//                        u_n = R^{n-1} is the Lucas sequence U(R,0), coprime
//                        exactly when gcd(R,0) = |R| = 1),
//   PulseFamily     iff  P = 0 and |Q| = 1            (eps = -Q, r = R),
//   NullQFamily     iff  Q = 0 and R = -P and |P| = 1 (eps = R),
//   PeriodSixFamily iff  Q = 1 and R = -P and |P| = 1 (eps = R),
// and strong_divisible iff some family applies.
Classification classify(const Params& params);

// Admissible (preperiod, period) pairs for the eventually periodic families:
// preperiod <= max_preperiod and period in periods.
struct PeriodExpectation {
    std::size_t max_preperiod = 0;
    std::vector<std::size_t> periods;

    bool admits(std::size_t preperiod, std::size_t period) const;

    friend bool operator==(const PeriodExpectation&, const PeriodExpectation&) = default;
};

// PulseFamily: preperiod 0, period in {1,2,4}; NullQFamily: preperiod <= 1,
// period in {1,2}; PeriodSixFamily: preperiod 0, period in {3,6}.  Absent for
// LucasCoprime-only triples and non-members (growth is unbounded in general).
std::optional<PeriodExpectation> expected_period(const Classification& c);

}  // namespace sdseq

#endif
