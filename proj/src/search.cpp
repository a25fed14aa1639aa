#include "sdseq/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "sdseq/divisibility.hpp"

namespace sdseq {

void SearchBox::validate() const {
    if (pmax < 1 || qmax < 1 || rmax < 1)
        throw std::invalid_argument("search box: bounds must be >= 1");
    if (depth < 10)
        throw std::invalid_argument("search box: depth must be >= 10");
}

namespace {

struct Slice {
    std::vector<std::pair<Params, Classification>> survivors;
    std::vector<Params> mismatches;
    std::uint64_t tested = 0;
    std::uint64_t early = 0;
};

// One P-slice; Q and R ascend, so each slice is already (Q,R)-sorted.
void sweep_slice(const SearchBox& box, long P, Slice& out) {
    for (long Q = -box.qmax; Q <= box.qmax; ++Q) {
        for (long R = -box.rmax; R <= box.rmax; ++R) {
            Params params{P, Q, R};
            auto oracle = is_strong_divisible(gen_sequence(params, box.depth).values);
            auto verdict = classify(params);
            ++out.tested;
            if (!oracle.holds) ++out.early;
            if (oracle.holds) out.survivors.emplace_back(params, verdict);
            if (oracle.holds != verdict.strong_divisible) out.mismatches.push_back(params);
        }
    }
}

}  // namespace

SearchReport sweep(const SearchBox& box, unsigned threads) {
    box.validate();
    auto started = std::chrono::steady_clock::now();

    const std::size_t slices = static_cast<std::size_t>(2 * box.pmax + 1);
    unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, slices));

    std::vector<Slice> results(slices);
    auto run_worker = [&](unsigned w) {
        for (std::size_t s = w; s < slices; s += workers)
            sweep_slice(box, static_cast<long>(s) - box.pmax, results[s]);
    };
    if (workers <= 1) {
        run_worker(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    }

    SearchReport report;
    report.box = box;
    // Merging in slice order keeps survivors sorted by (P,Q,R) no matter how
    // many workers ran.
    for (auto& slice : results) {
        std::move(slice.survivors.begin(), slice.survivors.end(),
                  std::back_inserter(report.survivors));
        std::move(slice.mismatches.begin(), slice.mismatches.end(),
                  std::back_inserter(report.mismatches));
        report.stats.triples_tested += slice.tested;
        report.stats.early_exits += slice.early;
    }
    report.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

std::vector<Params> filter_hs(const SearchBox& box) {
    box.validate();
    std::vector<Params> out;
    for (long P = -box.pmax; P <= box.pmax; ++P) {
        for (long Q = -box.qmax; Q <= box.qmax; ++Q) {
            for (long R = -box.rmax; R <= box.rmax; ++R) {
                Params params{P, Q, R};
                if (params.P == params.R) continue;
                if (params.Q == params.R * (params.P - params.R)) continue;
                auto u = gen_sequence(params, 10);
                if (gcd_nn(u.term(3), u.term(4)) != 1) continue;
                if (!divides(u.term(2), u.term(4))) continue;
                if (!divides(u.term(3), u.term(6))) continue;
                if (!divides(u.term(5), u.term(10))) continue;
                out.push_back(params);
            }
        }
    }
    return out;
}

}  // namespace sdseq
