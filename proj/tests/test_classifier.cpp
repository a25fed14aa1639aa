#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sdseq/classifier.hpp"
#include "sdseq/divisibility.hpp"
#include "sdseq/periodicity.hpp"

using namespace sdseq;

TEST_CASE("classify pinned verdicts") {
    auto fib = classify(Params{1, -1, 1});
    CHECK(fib.strong_divisible);
    CHECK(fib.families == std::vector<Family>{Family::LucasCoprime});
    CHECK(!fib.geometric);
    CHECK(!fib.epsilon.has_value());

    auto pulse = classify(Params{0, -1, 5});
    CHECK(pulse.strong_divisible);
    CHECK(pulse.families == std::vector<Family>{Family::PulseFamily});
    CHECK(pulse.epsilon == Int(1));
    CHECK(pulse.r == Int(5));

    auto six = classify(Params{-1, 1, 1});
    CHECK(six.strong_divisible);
    CHECK(six.families == std::vector<Family>{Family::PeriodSixFamily});
    CHECK(six.epsilon == Int(1));

    auto nullq = classify(Params{1, 0, -1});
    CHECK(nullq.families == std::vector<Family>{Family::NullQFamily});
    CHECK(nullq.epsilon == Int(-1));

    auto none = classify(Params{2, 3, 1});
    CHECK(!none.strong_divisible);
    CHECK(none.families.empty());
    CHECK(!none.geometric);
}

TEST_CASE("overlaps are reported as sets") {
    // simultaneously a coprime Lucas sequence and a pulse sequence
    auto both = classify(Params{0, -1, 0});
    CHECK(both.families ==
          std::vector<Family>{Family::LucasCoprime, Family::PulseFamily});

    // geometric with unit ratio: the sequence is U(R,0), hence Lucas, for
    // every P; (0,-1,1) is the pulse triple with r^2 = eps = 1
    auto pulse_geom = classify(Params{0, -1, 1});
    CHECK(pulse_geom.geometric);
    CHECK(pulse_geom.families ==
          std::vector<Family>{Family::LucasCoprime, Family::PulseFamily});

    // all-ones sequence from a non-Lucas-looking triple
    auto allones = classify(Params{5, 4, 1});
    CHECK(allones.geometric);
    CHECK(allones.strong_divisible);
    CHECK(allones.families == std::vector<Family>{Family::LucasCoprime});

    // Q=0 with R=P=1 is the geometric Lucas sequence, not a NullQ member
    auto geom_lucas = classify(Params{1, 0, 1});
    CHECK(geom_lucas.families == std::vector<Family>{Family::LucasCoprime});
    CHECK(geom_lucas.geometric);
}

TEST_CASE("geometric flag matches the generated sequence") {
    for (long P = -8; P <= 8; ++P)
        for (long Q = -8; Q <= 8; ++Q)
            for (long R = -8; R <= 8; ++R) {
                Params params{P, Q, R};
                auto prefix = gen_sequence(params, 12);
                bool pow_sequence = true;
                Int power = 1;
                for (std::size_t n = 1; n <= 12; ++n) {
                    if (prefix.term(n) != power) {
                        pow_sequence = false;
                        break;
                    }
                    power *= params.R;
                }
                CHECK(classify(params).geometric == pow_sequence);
            }
}

TEST_CASE("soundness: classifier-positive triples pass the brute-force oracle") {
    for (long P = -20; P <= 20; ++P)
        for (long Q = -20; Q <= 20; ++Q)
            for (long R = -20; R <= 20; ++R) {
                Params params{P, Q, R};
                if (!classify(params).strong_divisible) continue;
                CHECK(is_strong_divisible(gen_sequence(params, 48).values).holds);
            }
}

TEST_CASE("random deep probes: oracle and classifier agree beyond the small boxes") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<long> coeff(-30, 30);
    for (int trial = 0; trial < 400; ++trial) {
        Params params{coeff(rng), coeff(rng), coeff(rng)};
        bool oracle = is_strong_divisible(gen_sequence(params, 80).values).holds;
        CHECK(oracle == classify(params).strong_divisible);
    }
    // unit-ratio geometric triples with large P stay inside the family
    for (auto params : {Params{29, 28, 1}, Params{-30, 29, -1}, Params{17, -18, -1}}) {
        CHECK(classify(params).strong_divisible);
        CHECK(is_strong_divisible(gen_sequence(params, 80).values).holds);
    }
}

TEST_CASE("completeness at desk scale on a medium box") {
    for (long P = -6; P <= 6; ++P)
        for (long Q = -6; Q <= 6; ++Q)
            for (long R = -6; R <= 6; ++R) {
                Params params{P, Q, R};
                if (!is_strong_divisible(gen_sequence(params, 60).values).holds) continue;
                CHECK(!classify(params).families.empty());
            }
}

TEST_CASE("expected_period windows") {
    auto pulse = expected_period(classify(Params{0, -1, 5}));
    REQUIRE(pulse.has_value());
    CHECK(pulse->max_preperiod == 0);
    CHECK(pulse->periods == std::vector<std::size_t>{1, 2, 4});
    CHECK(pulse->admits(0, 2));
    CHECK(!pulse->admits(1, 2));
    CHECK(!pulse->admits(0, 3));

    auto nullq = expected_period(classify(Params{1, 0, -1}));
    REQUIRE(nullq.has_value());
    CHECK(nullq->max_preperiod == 1);
    CHECK(nullq->periods == std::vector<std::size_t>{1, 2});

    auto six = expected_period(classify(Params{-1, 1, 1}));
    REQUIRE(six.has_value());
    CHECK(six->periods == std::vector<std::size_t>{3, 6});

    CHECK(!expected_period(classify(Params{1, -1, 1})).has_value());
    CHECK(!expected_period(classify(Params{2, 3, 1})).has_value());
}

TEST_CASE("detected periods land inside the expected windows") {
    for (long P = -10; P <= 10; ++P)
        for (long Q = -10; Q <= 10; ++Q)
            for (long R = -10; R <= 10; ++R) {
                Params params{P, Q, R};
                auto verdict = classify(params);
                auto window = expected_period(verdict);
                if (!window) continue;
                auto info = detect_period(gen_sequence(params, 48).values);
                REQUIRE(info.has_value());
                CHECK(window->admits(info->preperiod, info->period));
            }
}
