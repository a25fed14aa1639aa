#include "sdseq/recurrence.hpp"

#include <stdexcept>

namespace sdseq {

void OrderKRecurrence::validate() const {
    if (k < 1) throw std::invalid_argument("order-k recurrence: k must be >= 1");
    if (coeffs.size() != k)
        throw std::invalid_argument("order-k recurrence: expected exactly k coefficients");
    if (initial.size() != k)
        throw std::invalid_argument("order-k recurrence: expected exactly k initial terms");
}

SequencePrefix gen_sequence(const Params& params, std::size_t N) {
    if (N < 2) throw std::invalid_argument("gen_sequence: N must be >= 2");
    std::vector<Int> values;
    values.reserve(N);
    values.emplace_back(1);
    values.push_back(params.R);
    for (std::size_t n = 2; n < N; ++n)
        values.push_back(params.P * values[n - 1] - params.Q * values[n - 2]);
    return SequencePrefix{params, std::move(values)};
}

std::vector<Int> gen_order_k(const OrderKRecurrence& rec, std::size_t N) {
    rec.validate();
    if (N < rec.k) throw std::invalid_argument("gen_order_k: N must be >= k");
    std::vector<Int> values(rec.initial.begin(), rec.initial.end());
    values.reserve(N);
    for (std::size_t n = rec.k; n < N; ++n) {
        Int next = 0;
        for (std::size_t i = 0; i < rec.k; ++i)
            next += rec.coeffs[i] * values[n - 1 - i];  // a_1 u_{n+k-1} + ... + a_k u_n
        values.push_back(std::move(next));
    }
    return values;
}

std::vector<Int> make_pulse(unsigned long s, const Int& t, std::size_t N) {
    if (s < 1) throw std::invalid_argument("make_pulse: s must be >= 1");
    if (N < 1) throw std::invalid_argument("make_pulse: N must be >= 1");
    std::vector<Int> values;
    values.reserve(N);
    for (std::size_t n = 1; n <= N; ++n)
        values.emplace_back(n % s == 0 ? t : Int(1));
    return values;
}

Int lucas_iter(const LucasParams& lp, unsigned long n) {
    Int prev = 0, cur = 1;  // U_0, U_1
    if (n == 0) return prev;
    for (unsigned long i = 1; i < n; ++i) {
        Int next = lp.P * cur - lp.Q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Int u_from_lucas(const Params& params, unsigned long n) {
    if (n < 1) throw std::invalid_argument("u_from_lucas: n must be >= 1");
    LucasParams lp{params.P, params.Q};
    return lucas_iter(lp, n) + (params.R - params.P) * lucas_iter(lp, n - 1);
}

std::optional<Int> closed_form_double_root(const LucasParams& lp, unsigned long n) {
    if (lp.P * lp.P - 4 * lp.Q != 0) return std::nullopt;
    if (n == 0) return Int(0);
    Int half = lp.P / 2;  // P^2 = 4Q forces P even
    return Int(n) * pow_nn(half, n - 1);
}

Recovery Recovery::unique(Params p) {
    Recovery r;
    r.kind = Kind::Unique;
    r.params = std::move(p);
    return r;
}

Recovery Recovery::geometric(Int ratio) {
    Recovery r;
    r.kind = Kind::Geometric;
    r.ratio = std::move(ratio);
    return r;
}

Recovery Recovery::inconsistent() { return Recovery{}; }

Recovery recover_params(const Int& u2, const Int& u3, const Int& u4) {
    const Int& R = u2;
    Int det = u3 - R * R;
    if (det != 0) {
        Int rhs = u4 - R * u3;
        if (!divides(det, rhs)) return Recovery::inconsistent();
        Int P = exact_div(rhs, det);
        Int Q = P * R - u3;
        return Recovery::unique(Params{std::move(P), std::move(Q), R});
    }
    // u3 = R^2: consistent only with the geometric sequence u_n = R^{n-1}
    if (u4 == R * R * R) return Recovery::geometric(R);
    return Recovery::inconsistent();
}

}  // namespace sdseq
