#ifndef SDSEQ_PERIODICITY_HPP
#define SDSEQ_PERIODICITY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "sdseq/integer.hpp"

namespace sdseq {

// Eventual periodicity detected within a window of length detected_within:
// values[n + period] = values[n] for all n > preperiod with
// n + period <= detected_within.  period is minimal, and preperiod is minimal
// for that period.
struct PeriodInfo {
    std::size_t preperiod = 0;
    std::size_t period = 0;
    std::size_t detected_within = 0;

    friend bool operator==(const PeriodInfo&, const PeriodInfo&) = default;
};

// Looks for a repeated consecutive-state pair (values[n], values[n+1]); for a
// sequence driven by an order-2 recurrence a repeated pair implies
// periodicity forever.  The result is minimized against the literal values,
// so the PeriodInfo invariants hold for arbitrary input too: the minimal
// period p (then the minimal preperiod m) such that the tail beyond m repeats
// with period p through the whole window and the repeated state pair is
// actually witnessed (m + p + 2 <= N).  Absent means "not detected within the
// bound", never "aperiodic".  N >= 4 required.
std::optional<PeriodInfo> detect_period(const std::vector<Int>& values);

}  // namespace sdseq

#endif
