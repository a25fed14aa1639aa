#include "sdseq/divisibility.hpp"

#include <numeric>
#include <stdexcept>

namespace sdseq {

namespace {

DivisibilityReport report_ok(DivisibilityKind kind, std::size_t bound) {
    DivisibilityReport rep;
    rep.kind = kind;
    rep.bound = bound;
    rep.holds = true;
    return rep;
}

DivisibilityReport report_fail(DivisibilityKind kind, std::size_t bound,
                               std::size_t i, std::size_t j) {
    DivisibilityReport rep;
    rep.kind = kind;
    rep.bound = bound;
    rep.holds = false;
    rep.witness = {i, j};
    return rep;
}

const Int& at(const std::vector<Int>& values, std::size_t n) { return values[n - 1]; }

void require_gcd_hypotheses(const Params& params, const char* who) {
    if (gcd_nn(params.P, params.Q) != 1 || gcd_nn(params.R, params.Q) != 1)
        throw std::invalid_argument(std::string(who) +
                                    ": requires gcd(P,Q) = 1 and gcd(R,Q) = 1");
}

}  // namespace

DivisibilityReport is_strong_divisible(const std::vector<Int>& values) {
    const std::size_t N = values.size();
    if (N < 1) throw std::invalid_argument("is_strong_divisible: empty prefix");
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = i; j <= N; ++j)
            if (gcd_nn(at(values, i), at(values, j)) != abs(at(values, std::gcd(i, j))))
                return report_fail(DivisibilityKind::Strong, N, i, j);
    return report_ok(DivisibilityKind::Strong, N);
}

DivisibilityReport is_weak_divisible(const std::vector<Int>& values) {
    const std::size_t N = values.size();
    if (N < 1) throw std::invalid_argument("is_weak_divisible: empty prefix");
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = i; j <= N; j += i)
            if (!divides(at(values, i), at(values, j)))
                return report_fail(DivisibilityKind::Weak, N, i, j);
    return report_ok(DivisibilityKind::Weak, N);
}

bool criterion_ind34(const Params& params) {
    auto prefix = gen_sequence(params, 4);
    bool lhs = gcd_nn(prefix.term(3), prefix.term(4)) == 1;
    bool rhs = gcd_nn(params.P, params.Q) == 1 && gcd_nn(params.R, params.Q) == 1;
    if (lhs != rhs)
        throw std::logic_error("criterion_ind34: the gcd(u3,u4) biconditional broke");
    return lhs;
}

bool check_coprime_chain(const Params& params, std::size_t N) {
    require_gcd_hypotheses(params, "check_coprime_chain");
    auto prefix = gen_sequence(params, N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        if (gcd_nn(prefix.term(n), params.Q) != 1) return false;
        if (gcd_nn(prefix.term(n), prefix.term(n + 1)) != 1) return false;
    }
    return true;
}

bool check_div_rp(const Params& params, std::size_t n) {
    require_gcd_hypotheses(params, "check_div_rp");
    if (n < 1) throw std::invalid_argument("check_div_rp: n must be >= 1");
    auto prefix = gen_sequence(params, 2 * n);
    if (!divides(prefix.term(n), prefix.term(2 * n))) return true;  // vacuous
    return divides(prefix.term(n), params.R - params.P);
}

bool check_converse_div(const Params& params, std::size_t n, std::size_t kmax) {
    if (n < 1 || kmax < 1)
        throw std::invalid_argument("check_converse_div: n and kmax must be >= 1");
    auto prefix = gen_sequence(params, std::max<std::size_t>(n * kmax, 2));
    if (!divides(prefix.term(n), params.R - params.P)) return true;  // vacuous
    for (std::size_t k = 1; k <= kmax; ++k)
        if (!divides(prefix.term(n), prefix.term(k * n))) return false;
    return true;
}

bool check_r_divides_even(const Params& params, std::size_t kmax) {
    if (!divides(params.R, params.P))
        throw std::invalid_argument("check_r_divides_even: requires R | P");
    if (kmax < 1) throw std::invalid_argument("check_r_divides_even: kmax must be >= 1");
    auto prefix = gen_sequence(params, 2 * kmax);
    for (std::size_t k = 1; k <= kmax; ++k)
        if (!divides(params.R, prefix.term(2 * k))) return false;
    return true;
}

HSCriterionReport hs_criterion(const Params& params) {
    auto prefix = gen_sequence(params, 10);
    HSCriterionReport rep;
    rep.u3 = prefix.term(3);
    rep.u4 = prefix.term(4);
    rep.u5 = prefix.term(5);
    rep.k = params.Q - params.R * (params.P - params.R);
    if (rep.k != params.R * params.R - rep.u3)
        throw std::logic_error("hs_criterion: k = R^2 - u3 = Q - R(P-R) broke");
    if (rep.u5 != rep.u3 * rep.u3 - rep.k * params.P * params.P)
        throw std::logic_error("hs_criterion: u5 = u3^2 - k P^2 broke");
    if (params.R != 0 && divides(params.R, params.P))
        rep.f = exact_div(params.P, params.R);

    // Gates in fixed order; the first failure names the reason.
    if (params.R == 0) {
        rep.reason = "r_zero";
    } else if (!criterion_ind34(params)) {
        rep.reason = "ind34";
    } else if (!divides(prefix.term(2), prefix.term(4))) {
        rep.reason = "u2_div_u4";
    } else if (!divides(prefix.term(3), prefix.term(6))) {
        rep.reason = "u3_div_u6";
    } else if (!divides(prefix.term(5), prefix.term(10))) {
        rep.reason = "u5_div_u10";
    } else {
        rep.passed = true;
        rep.reason = "ok";
        // Consequences of the gates: f is integral and f-1 is divisible by
        // both u3 and u5.
        if (!rep.f)
            throw std::logic_error("hs_criterion: gates passed but P/R is not integral");
        Int f1 = *rep.f - 1;
        if (!divides(rep.u3, f1) || !divides(rep.u5, f1))
            throw std::logic_error("hs_criterion: u3 | f-1 and u5 | f-1 broke");
    }
    return rep;
}

bool bound_weak_order2(const Params& params, std::size_t N) {
    if (N < 1) throw std::invalid_argument("bound_weak_order2: N must be >= 1");
    auto prefix = gen_sequence(params, 2 * N);
    if (!is_weak_divisible(prefix.values).holds)
        throw std::invalid_argument("bound_weak_order2: prefix is not weakly divisible");
    Int rp = params.R - params.P;
    for (std::size_t n = 1; n <= N; ++n)
        if (!divides(prefix.term(n), pow_nn(params.Q, n - 1) * rp)) return false;
    return true;
}

namespace {

// u_k - (a_1 u_{k-1} + ... + a_{k-1} u_1)
Int hall_head(const OrderKRecurrence& rec) {
    Int d = rec.initial[rec.k - 1];
    for (std::size_t i = 1; i < rec.k; ++i) d -= rec.coeffs[i - 1] * rec.initial[rec.k - 1 - i];
    return d;
}

void require_nonzero_tail_coeff(const OrderKRecurrence& rec, const char* who) {
    rec.validate();
    if (rec.coeffs[rec.k - 1] == 0)
        throw std::invalid_argument(std::string(who) + ": requires a_k != 0");
}

}  // namespace

bool bound_weak_orderk(const OrderKRecurrence& rec, std::size_t N) {
    require_nonzero_tail_coeff(rec, "bound_weak_orderk");
    if (N < 2 * rec.k)
        throw std::invalid_argument("bound_weak_orderk: N must be >= 2k");
    auto values = gen_order_k(rec, N);
    if (!is_weak_divisible(values).holds)
        throw std::invalid_argument("bound_weak_orderk: prefix is not weakly divisible");
    const Int& ak = rec.coeffs[rec.k - 1];
    Int d = hall_head(rec);
    for (std::size_t n = 1; n <= N; ++n)
        if (!divides(values[n - 1], pow_nn(ak, n - 1) * d)) return false;
    return true;
}

std::vector<Int> hall_transform(const OrderKRecurrence& rec, std::size_t N) {
    require_nonzero_tail_coeff(rec, "hall_transform");
    if (N < rec.k) throw std::invalid_argument("hall_transform: N must be >= k");
    auto u = gen_order_k(rec, N);
    const Int& ak = rec.coeffs[rec.k - 1];
    std::vector<Int> v;
    v.reserve(N + 1);
    v.push_back(hall_head(rec));
    for (std::size_t n = 1; n <= N; ++n) v.push_back(ak * u[n - 1]);
    // v satisfies the same recurrence shifted to start at index 0.
    for (std::size_t n = 0; n + rec.k <= N; ++n) {
        Int expect = 0;
        for (std::size_t i = 0; i < rec.k; ++i) expect += rec.coeffs[i] * v[n + rec.k - 1 - i];
        if (v[n + rec.k] != expect)
            throw std::logic_error("hall_transform: transformed recurrence broke");
    }
    return v;
}

bool bound_kimberling(const OrderKRecurrence& rec, std::size_t N) {
    require_nonzero_tail_coeff(rec, "bound_kimberling");
    if (N < rec.k) throw std::invalid_argument("bound_kimberling: N must be >= k");
    if (!is_weak_divisible(gen_order_k(rec, N)).holds)
        throw std::invalid_argument("bound_kimberling: prefix is not weakly divisible");
    auto v = hall_transform(rec, N);
    const Int& ak = rec.coeffs[rec.k - 1];
    for (std::size_t n = 1; n <= N; ++n)
        if (!divides(v[n], pow_nn(ak, n) * v[0])) return false;
    return true;
}

}  // namespace sdseq
