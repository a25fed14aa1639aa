#include "sdseq/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdseq {

std::string family_name(Family f) {
    switch (f) {
        case Family::LucasCoprime: return "LucasCoprime";
        case Family::PulseFamily: return "PulseFamily";
        case Family::NullQFamily: return "NullQFamily";
        case Family::PeriodSixFamily: return "PeriodSixFamily";
    }
    throw std::logic_error("family_name: unknown family");
}

bool Classification::has(Family f) const {
    return std::find(families.begin(), families.end(), f) != families.end();
}

Classification classify(const Params& params) {
    const Int& P = params.P;
    const Int& Q = params.Q;
    const Int& R = params.R;
    Classification c;
    c.geometric = (Q == R * (P - R));

    bool lucas = (R == P && gcd_nn(P, Q) == 1);
    // The geometric sequence u_n = R^{n-1} is U(R,0); it is a coprime Lucas
    // sequence exactly when gcd(R,0) = |R| = 1.
    if (c.geometric && abs(R) == 1) lucas = true;
    if (lucas) c.families.push_back(Family::LucasCoprime);

    if (P == 0 && abs(Q) == 1) {
        c.families.push_back(Family::PulseFamily);
        c.epsilon = -Q;
        c.r = R;
    }
    if (Q == 0 && R == -P && abs(P) == 1) {
        c.families.push_back(Family::NullQFamily);
        c.epsilon = R;
    }
    if (Q == 1 && R == -P && abs(P) == 1) {
        c.families.push_back(Family::PeriodSixFamily);
        c.epsilon = R;
    }
    c.strong_divisible = !c.families.empty();
    return c;
}

bool PeriodExpectation::admits(std::size_t preperiod, std::size_t period) const {
    return preperiod <= max_preperiod &&
           std::find(periods.begin(), periods.end(), period) != periods.end();
}

std::optional<PeriodExpectation> expected_period(const Classification& c) {
    // The three exceptional conditions are mutually exclusive; only the
    // Lucas/Pulse overlap exists, and there the pulse window applies.
    if (c.has(Family::PulseFamily)) return PeriodExpectation{0, {1, 2, 4}};
    if (c.has(Family::NullQFamily)) return PeriodExpectation{1, {1, 2}};
    if (c.has(Family::PeriodSixFamily)) return PeriodExpectation{0, {3, 6}};
    return std::nullopt;
}

}  // namespace sdseq
