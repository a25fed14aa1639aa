#include "sdseq/integer.hpp"

#include <stdexcept>

namespace sdseq {

Int gcd_nn(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool divides(const Int& a, const Int& b) {
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

Int pow_nn(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int exact_div(const Int& b, const Int& a) {
    if (!divides(a, b))
        throw std::invalid_argument("exact_div: " + to_decimal(a) +
                                    " does not divide " + to_decimal(b));
    if (b == 0) return Int(0);  // covers the 0/0 convention
    Int q;
    mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    return q;
}

std::optional<Int> parse_int(const std::string& text) {
    std::size_t start = 0;
    bool negative = false;
    if (start < text.size() && (text[start] == '+' || text[start] == '-')) {
        negative = text[start] == '-';
        ++start;
    }
    if (start == text.size()) return std::nullopt;
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') return std::nullopt;
    Int v(text.substr(start), 10);
    return negative ? Int(-v) : v;
}

std::string to_decimal(const Int& v) { return v.get_str(); }

}  // namespace sdseq
