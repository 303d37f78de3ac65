#ifndef CONGRUENCE_RAT_HPP
#define CONGRUENCE_RAT_HPP

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace congruence {

// Exact rational scalar. mpq_class keeps results canonical (den > 0, gcd 1)
// as long as inputs are canonical, so construction goes through rat()/rat_parse().
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "p/q", optional leading minus, base 10.
inline Rat rat_parse(const std::string& text) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + (q.get_den() == 1 ? "" : "/" + q.get_den().get_str());
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// Exact rational square root when the value is a perfect square.
inline std::optional<Rat> rat_sqrt(const Rat& q) {
    if (sgn(q) < 0) return std::nullopt;
    Int num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return rat(rn, rd);
}

} // namespace congruence

#endif
