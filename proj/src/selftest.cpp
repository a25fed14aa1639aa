#include "sdseq/selftest.hpp"

#include <random>

#include "sdseq/divisibility.hpp"
#include "sdseq/lucas_fast.hpp"
#include "sdseq/recurrence.hpp"

namespace sdseq {

namespace {

constexpr std::uint64_t kSuiteSeed = 0x5d5e90001ULL;

}  // namespace

std::vector<SelfTestCheck> run_identity_suite() {
    std::vector<SelfTestCheck> checks;
    std::mt19937_64 rng(kSuiteSeed);
    std::uniform_int_distribution<long> coeff(-50, 50);

    // Addition formula u_{m+n} = U_m u_{n+1} - Q U_{m-1} u_n over random
    // triples, all m, n <= 25.
    {
        SelfTestCheck check{"addition_formula", 0, true};
        for (int trial = 0; trial < 40 && check.passed; ++trial) {
            Params params{coeff(rng), coeff(rng), coeff(rng)};
            LucasParams lp{params.P, params.Q};
            auto u = gen_sequence(params, 51);
            std::vector<Int> U;
            for (unsigned long n = 0; n <= 26; ++n) U.push_back(lucas_iter(lp, n));
            for (std::size_t m = 1; m <= 25 && check.passed; ++m) {
                for (std::size_t n = 1; n <= 25; ++n) {
                    ++check.cases;
                    if (u.term(m + n) != U[m] * u.term(n + 1) - params.Q * U[m - 1] * u.term(n)) {
                        check.passed = false;
                        break;
                    }
                }
            }
        }
        checks.push_back(std::move(check));
    }

    // u_n = U_n + (R-P) U_{n-1} for n <= 50.
    {
        SelfTestCheck check{"u_from_lucas_identity", 0, true};
        for (int trial = 0; trial < 40 && check.passed; ++trial) {
            Params params{coeff(rng), coeff(rng), coeff(rng)};
            auto u = gen_sequence(params, 50);
            for (unsigned long n = 1; n <= 50; ++n) {
                ++check.cases;
                if (u_from_lucas(params, n) != u.term(n)) {
                    check.passed = false;
                    break;
                }
            }
        }
        checks.push_back(std::move(check));
    }

    // U_n = n (P/2)^{n-1} whenever P^2 - 4Q = 0, even |P| <= 20, n <= 30.
    {
        SelfTestCheck check{"double_root_closed_form", 0, true};
        for (long P = -20; P <= 20 && check.passed; P += 2) {
            LucasParams lp{P, P * P / 4};
            for (unsigned long n = 0; n <= 30; ++n) {
                ++check.cases;
                auto closed = closed_form_double_root(lp, n);
                if (!closed || *closed != lucas_iter(lp, n)) {
                    check.passed = false;
                    break;
                }
            }
        }
        checks.push_back(std::move(check));
    }

    // Doubling steps U_{2n} = U_n (U_{n+1} - Q U_{n-1}) and
    // U_{2n+1} = U_{n+1}^2 - Q U_n^2 pointwise against iteration, n <= 100.
    {
        SelfTestCheck check{"doubling_identities", 0, true};
        std::uniform_int_distribution<long> small(-10, 10);
        for (int trial = 0; trial < 20 && check.passed; ++trial) {
            LucasParams lp{small(rng), small(rng)};
            std::vector<Int> U;
            for (unsigned long n = 0; n <= 201; ++n) U.push_back(lucas_iter(lp, n));
            for (std::size_t n = 1; n <= 100; ++n) {
                ++check.cases;
                if (U[2 * n] != U[n] * (U[n + 1] - lp.Q * U[n - 1]) ||
                    U[2 * n + 1] != U[n + 1] * U[n + 1] - lp.Q * U[n] * U[n]) {
                    check.passed = false;
                    break;
                }
            }
        }
        checks.push_back(std::move(check));
    }

    // lucas_fast agrees with lucas_iter on both components.
    {
        SelfTestCheck check{"fast_matches_iteration", 0, true};
        for (int trial = 0; trial < 10 && check.passed; ++trial) {
            LucasParams lp{coeff(rng), coeff(rng)};
            Int prev = 0, cur = 1;
            for (unsigned long n = 0; n <= 300; ++n) {
                ++check.cases;
                auto [un, un1] = lucas_fast(lp, n);
                if (un != prev || un1 != cur) {
                    check.passed = false;
                    break;
                }
                Int next = lp.P * cur - lp.Q * prev;
                prev = cur;
                cur = next;
            }
        }
        checks.push_back(std::move(check));
    }

    // Pulse sequences are strongly divisible for every s, t.
    {
        SelfTestCheck check{"pulse_strong_divisibility", 0, true};
        for (unsigned long s = 1; s <= 6 && check.passed; ++s) {
            for (long t = -6; t <= 6; ++t) {
                ++check.cases;
                if (!is_strong_divisible(make_pulse(s, t, 36)).holds) {
                    check.passed = false;
                    break;
                }
            }
        }
        checks.push_back(std::move(check));
    }

    return checks;
}

}  // namespace sdseq
