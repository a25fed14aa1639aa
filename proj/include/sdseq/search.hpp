#ifndef SDSEQ_SEARCH_HPP
#define SDSEQ_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "sdseq/classifier.hpp"
#include "sdseq/recurrence.hpp"

namespace sdseq {

// Bounds |P| <= pmax, |Q| <= qmax, |R| <= rmax and the prefix length the
// brute-force oracle tests.  depth >= 10 so the index-10 gates are reachable.
struct SearchBox {
    long pmax = 1;
    long qmax = 1;
    long rmax = 1;
    std::size_t depth = 10;

    void validate() const;  // throws std::invalid_argument

    friend bool operator==(const SearchBox&, const SearchBox&) = default;
};

struct SweepStats {
    std::uint64_t triples_tested = 0;
    std::uint64_t early_exits = 0;  // triples whose oracle scan stopped at a witness
    double elapsed_ms = 0.0;        // excluded from canonical serialization

    friend bool operator==(const SweepStats& a, const SweepStats& b) {
        return a.triples_tested == b.triples_tested && a.early_exits == b.early_exits;
    }
};

// survivors is sorted lexicographically by (P,Q,R) and is identical for any
// worker count; mismatches lists every triple where the brute-force oracle
// and the classifier disagree and is expected empty — any entry is a
// reportable finding.
struct SearchReport {
    SearchBox box;
    std::vector<std::pair<Params, Classification>> survivors;
    std::vector<Params> mismatches;
    SweepStats stats;
};

// For every triple in the box: run is_strong_divisible on the length-depth
// prefix (early exit on the first failing pair) and classify, recording
// survivors and oracle/classifier mismatches.  Work is partitioned by
// P-slices; threads = 0 means hardware concurrency.  Results are merged in
// slice order, so the report does not depend on scheduling.
SearchReport sweep(const SearchBox& box, unsigned threads = 0);

// Triples in the box satisfying all the exceptional-family hypotheses:
// P != R, Q != R(P-R), gcd(u3,u4) = 1, u2 | u4, u3 | u6, u5 | u10.  Each
// returned triple satisfies (P=0 and |Q|=1) or (P=-R=+-1 and Q in {0,1}).
std::vector<Params> filter_hs(const SearchBox& box);

}  // namespace sdseq

#endif
