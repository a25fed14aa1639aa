#include "sdseq/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "sdseq/divisibility.hpp"
#include "sdseq/json_io.hpp"
#include "sdseq/lucas_fast.hpp"
#include "sdseq/periodicity.hpp"
#include "sdseq/search.hpp"
#include "sdseq/selftest.hpp"

namespace sdseq {

namespace {

using io::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

// Strict decimal parse of a flag value; CLI11 hands us the raw token, so
// "-P -1" and "--P=-1" both arrive here as "-1".
Int require_int(const std::string& text, const std::string& flag) {
    auto parsed = parse_int(text);
    if (!parsed)
        throw CLI::ValidationError(flag, "'" + text + "' is not a decimal integer");
    return *parsed;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

// Raw string targets for the big-integer flags; parsed after CLI11 runs.
struct ParamFlags {
    std::string P, Q, R;

    void attach(CLI::App& cmd) {
        cmd.add_option("-P,--P", P, "coefficient P")->required();
        cmd.add_option("-Q,--Q", Q, "coefficient Q")->required();
        cmd.add_option("-R,--R", R, "second term R")->required();
    }
    Params parse() const {
        return Params{require_int(P, "-P"), require_int(Q, "-Q"), require_int(R, "-R")};
    }
};

unsigned sweep_threads() {
    const char* env = std::getenv("SDSEQ_THREADS");
    if (env == nullptr || *env == '\0') return 0;  // machine parallelism
    auto parsed = parse_int(env);
    if (!parsed || *parsed < 1 || *parsed > 1024)
        throw CLI::ValidationError("SDSEQ_THREADS",
                                   "must be a positive integer, got '" + std::string(env) + "'");
    unsigned cap = static_cast<unsigned>(parsed->get_ui());
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return std::min(cap, hw);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"strong-divisibility toolkit for order-2 integer recurrences"};
    app.require_subcommand(1);

    int exit_code = kExitOk;

    // gen: materialize u_1..u_N
    auto* gen = app.add_subcommand("gen", "generate a sequence prefix");
    ParamFlags gen_params;
    gen_params.attach(*gen);
    std::size_t gen_terms = 0;
    gen->add_option("-n,--terms", gen_terms, "prefix length (>= 2)")->required();
    gen->callback([&] {
        emit(io::to_json(gen_sequence(gen_params.parse(), gen_terms)));
    });

    // lucas: U_n and U_{n+1}
    auto* lucas = app.add_subcommand("lucas", "evaluate a Lucas sequence U(P,Q)");
    std::string lucas_p, lucas_q;
    unsigned long lucas_n = 0;
    std::string lucas_method = "fast";
    lucas->add_option("-P,--P", lucas_p, "coefficient P")->required();
    lucas->add_option("-Q,--Q", lucas_q, "coefficient Q")->required();
    lucas->add_option("-n,--index", lucas_n, "index n (>= 0)")->required();
    lucas->add_option("--method", lucas_method, "fast (doubling) or iter")
        ->check(CLI::IsMember({"fast", "iter"}));
    lucas->callback([&] {
        LucasParams lp{require_int(lucas_p, "-P"), require_int(lucas_q, "-Q")};
        Int un, un1;
        if (lucas_method == "fast") {
            std::tie(un, un1) = lucas_fast(lp, lucas_n);
        } else {
            un = lucas_iter(lp, lucas_n);
            un1 = lucas_iter(lp, lucas_n + 1);
        }
        emit(json{{"params", io::to_json(lp)},
                  {"n", lucas_n},
                  {"U", io::to_json(un)},
                  {"U_next", io::to_json(un1)}});
    });

    // classify: the constant-time classification
    auto* classify_cmd = app.add_subcommand("classify", "classify a parameter triple");
    ParamFlags classify_params;
    classify_params.attach(*classify_cmd);
    classify_cmd->callback([&] {
        emit(io::to_json(classify(classify_params.parse())));
    });

    // check strong|weak: brute-force oracle on a generated prefix
    auto* check = app.add_subcommand("check", "brute-force divisibility check");
    std::string check_kind;
    ParamFlags check_params;
    std::size_t check_depth = 40;
    check->add_option("kind", check_kind, "strong or weak")
        ->required()
        ->check(CLI::IsMember({"strong", "weak"}));
    check_params.attach(*check);
    check->add_option("-n,--depth", check_depth, "prefix length to test (default 40)");
    check->callback([&] {
        auto prefix = gen_sequence(check_params.parse(), check_depth);
        auto rep = check_kind == "strong" ? is_strong_divisible(prefix.values)
                                          : is_weak_divisible(prefix.values);
        emit(io::to_json(rep));
        if (!rep.holds) exit_code = kExitViolation;
    });

    // criterion ind34|hs
    auto* criterion = app.add_subcommand("criterion", "index-based divisibility criteria");
    std::string criterion_kind;
    ParamFlags criterion_params;
    criterion->add_option("kind", criterion_kind, "ind34 or hs")
        ->required()
        ->check(CLI::IsMember({"ind34", "hs"}));
    criterion_params.attach(*criterion);
    criterion->callback([&] {
        Params params = criterion_params.parse();
        if (criterion_kind == "ind34") {
            emit(json{{"ind34", criterion_ind34(params)}});
        } else {
            emit(io::to_json(hs_criterion(params)));
        }
    });

    // divrp: the u_n | u_2n => u_n | R-P implication
    auto* divrp = app.add_subcommand("divrp", "test (u_n | u_2n) => (u_n | R-P)");
    ParamFlags divrp_params;
    std::size_t divrp_n = 0;
    divrp_params.attach(*divrp);
    divrp->add_option("-n,--index", divrp_n, "index n (>= 1)")->required();
    divrp->callback([&] {
        bool holds = check_div_rp(divrp_params.parse(), divrp_n);
        emit(json{{"n", divrp_n}, {"holds", holds}});
        if (!holds) exit_code = kExitViolation;
    });

    // period: detect eventual periodicity of the generated prefix
    auto* period = app.add_subcommand("period", "detect eventual periodicity");
    ParamFlags period_params;
    std::size_t period_depth = 60;
    period_params.attach(*period);
    period->add_option("-n,--depth", period_depth, "prefix length to scan (default 60)");
    period->callback([&] {
        auto detected = detect_period(gen_sequence(period_params.parse(), period_depth).values);
        json doc{{"detected", detected.has_value()}};
        if (detected) {
            doc["preperiod"] = detected->preperiod;
            doc["period"] = detected->period;
        }
        doc["detected_within"] = period_depth;
        emit(doc);
    });

    // recover: parameters from u2, u3, u4
    auto* recover = app.add_subcommand("recover", "recover (P,Q,R) from u2,u3,u4");
    std::string r_u2, r_u3, r_u4;
    recover->add_option("--u2", r_u2, "second term")->required();
    recover->add_option("--u3", r_u3, "third term")->required();
    recover->add_option("--u4", r_u4, "fourth term")->required();
    recover->callback([&] {
        emit(io::to_json(recover_params(require_int(r_u2, "--u2"),
                                        require_int(r_u3, "--u3"),
                                        require_int(r_u4, "--u4"))));
    });

    // sweep: exhaustive box cross-validation
    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive parameter-box sweep");
    SearchBox box{1, 1, 1, 60};
    std::string sweep_format = "json";
    bool sweep_timing = false;
    sweep_cmd->add_option("--pmax", box.pmax, "bound on |P|")->required();
    sweep_cmd->add_option("--qmax", box.qmax, "bound on |Q|")->required();
    sweep_cmd->add_option("--rmax", box.rmax, "bound on |R|")->required();
    sweep_cmd->add_option("--depth", box.depth, "oracle prefix length (default 60)");
    sweep_cmd->add_option("--format", sweep_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sweep_cmd->add_flag("--timing", sweep_timing, "include elapsed_ms in the stats");
    sweep_cmd->callback([&] {
        auto report = sweep(box, sweep_threads());
        if (sweep_format == "csv")
            std::cout << io::survivors_csv(report);
        else
            emit(io::to_json(report, sweep_timing));
        if (!report.mismatches.empty()) exit_code = kExitViolation;
    });

    // identities: the full identity self-test suite
    auto* identities = app.add_subcommand("identities", "run the identity self-test suite");
    identities->callback([&] {
        auto checks = run_identity_suite();
        json doc = io::to_json(checks);
        emit(doc);
        if (!doc.at("passed").get<bool>()) exit_code = kExitViolation;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return kExitViolation;
    }
    return exit_code;
}

}  // namespace sdseq
