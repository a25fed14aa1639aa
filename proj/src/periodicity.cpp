#include "sdseq/periodicity.hpp"

#include <stdexcept>

namespace sdseq {

std::optional<PeriodInfo> detect_period(const std::vector<Int>& values) {
    const std::size_t N = values.size();
    if (N < 4) throw std::invalid_argument("detect_period: need at least 4 terms");
    // Smallest period first; for each period the preperiod is the last
    // value-level mismatch.  Requiring m + p + 2 <= N means the repeated
    // state pair (u_{m+1}, u_{m+2}) = (u_{m+p+1}, u_{m+p+2}) is actually
    // inside the window, so a vacuous tail never counts as detection.
    for (std::size_t p = 1; p + 2 <= N; ++p) {
        std::size_t m = 0;
        for (std::size_t n = N - p; n >= 1; --n) {
            if (values[n + p - 1] != values[n - 1]) {
                m = n;
                break;
            }
        }
        if (m + p + 2 <= N) return PeriodInfo{m, p, N};
    }
    return std::nullopt;
}

}  // namespace sdseq
