#ifndef SDSEQ_SELFTEST_HPP
#define SDSEQ_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sdseq {

struct SelfTestCheck {
    std::string name;
    std::uint64_t cases = 0;
    bool passed = false;

    friend bool operator==(const SelfTestCheck&, const SelfTestCheck&) = default;
};

// The identity self-test suite behind the `identities` subcommand:
// the addition formula, the u-from-U identity, the double-root closed form,
// the doubling-step identities, fast/iterated agreement, and pulse strong
// divisibility, all over deterministic seeded samples.
std::vector<SelfTestCheck> run_identity_suite();

}  // namespace sdseq

#endif
