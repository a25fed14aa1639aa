#ifndef SDSEQ_RECURRENCE_HPP
#define SDSEQ_RECURRENCE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sdseq/integer.hpp"

namespace sdseq {

// Parameters of the order-2 family u_1 = 1, u_2 = R, u_{n+2} = P u_{n+1} - Q u_n.
// Every integer triple is admissible.
struct Params {
    Int P;
    Int Q;
    Int R;

    friend bool operator==(const Params& a, const Params& b) {
        return a.P == b.P && a.Q == b.Q && a.R == b.R;
    }
    // Lexicographic by (P, Q, R); survivor lists sort with this.
    friend bool operator<(const Params& a, const Params& b) {
        if (a.P != b.P) return a.P < b.P;
        if (a.Q != b.Q) return a.Q < b.Q;
        return a.R < b.R;
    }
};

// Parameters of the Lucas sequence U(P,Q): U_0 = 0, U_1 = 1,
// U_{n+2} = P U_{n+1} - Q U_n.  U is 0-indexed, u is 1-indexed; the two
// conventions are fixed here and never mixed.
struct LucasParams {
    Int P;
    Int Q;

    friend bool operator==(const LucasParams& a, const LucasParams& b) {
        return a.P == b.P && a.Q == b.Q;
    }
};

// A materialized window u_1..u_N together with its defining parameters.
// Invariants: term(1) == 1, term(2) == params.R, and
// term(n+2) == P*term(n+1) - Q*term(n) throughout.
struct SequencePrefix {
    Params params;
    std::vector<Int> values;  // values[0] holds u_1

    std::size_t size() const { return values.size(); }
    const Int& term(std::size_t n) const { return values.at(n - 1); }  // 1-indexed
};

// u_{n+k} = a_1 u_{n+k-1} + ... + a_k u_n with initial terms u_1..u_k.
struct OrderKRecurrence {
    std::size_t k = 0;
    std::vector<Int> coeffs;   // a_1..a_k
    std::vector<Int> initial;  // u_1..u_k

    // Throws std::invalid_argument unless k >= 1 and both lists have k entries.
    void validate() const;
};

// Exact prefix u_1..u_N.  N >= 2 required.
SequencePrefix gen_sequence(const Params& params, std::size_t N);

// Exact prefix of an order-k recurrence, [0] holding u_1.  N >= rec.k required.
std::vector<Int> gen_order_k(const OrderKRecurrence& rec, std::size_t N);

// Entry n is t when s | n and 1 otherwise.  s >= 1, N >= 1 required.
std::vector<Int> make_pulse(unsigned long s, const Int& t, std::size_t N);

// U_n by direct iteration; the reference implementation the fast path is
// checked against.
Int lucas_iter(const LucasParams& lp, unsigned long n);

// u_n = U_n + (R-P) U_{n-1} with U = U(P,Q); agrees with gen_sequence.
// n >= 1 required.
Int u_from_lucas(const Params& params, unsigned long n);

// n (P/2)^{n-1} when P^2 - 4Q = 0 (P is then even); absent value means the
// double-root hypothesis is not met, not failure.  Returns 0 for n = 0,
// consistent with U_0 = 0.
std::optional<Int> closed_form_double_root(const LucasParams& lp, unsigned long n);

// Outcome of recovering (P, Q, R) from u_2, u_3, u_4.  The degenerate branch
// u_3 = R^2 is the geometric sequence u_n = R^{n-1}, reachable from every P
// with Q = R(P-R), so no unique triple exists there.
struct Recovery {
    enum class Kind { Unique, Geometric, Inconsistent };
    Kind kind = Kind::Inconsistent;
    std::optional<Params> params;  // set iff kind == Unique
    std::optional<Int> ratio;      // set iff kind == Geometric; the common ratio R

    static Recovery unique(Params p);
    static Recovery geometric(Int r);
    static Recovery inconsistent();

    friend bool operator==(const Recovery& a, const Recovery& b) {
        return a.kind == b.kind && a.params == b.params && a.ratio == b.ratio;
    }
};

// Solves R = u2, Q = PR - u3, P(u3 - R^2) = u4 - R u3 over the integers.
Recovery recover_params(const Int& u2, const Int& u3, const Int& u4);

}  // namespace sdseq

#endif
