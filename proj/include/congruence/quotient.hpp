#ifndef CONGRUENCE_QUOTIENT_HPP
#define CONGRUENCE_QUOTIENT_HPP

#include <utility>
#include <vector>

#include "congruence/bipoly.hpp"
#include "congruence/upoly.hpp"

namespace congruence {

// Raised when an arithmetic step over Q[t]/(f) meets a zero divisor. The
// carried factor is a monic proper divisor of f; the caller splits the
// modulus and reruns on both parts.
struct SplitRequest {
    UPoly factor;
};

// Q[t]/(f) with f monic and squarefree. Elements are UPoly of degree < deg f.
class QuotientRing {
public:
    explicit QuotientRing(UPoly modulus);
    const UPoly& modulus() const { return f_; }
    int deg() const { return f_.deg(); }

    UPoly reduce(const UPoly& a) const { return a.divrem(f_).second; }
    UPoly mul(const UPoly& a, const UPoly& b) const { return reduce(a * b); }
    // Inverse of a nonzero reduced element; throws SplitRequest on zero divisors.
    UPoly inverse(const UPoly& a) const;

private:
    UPoly f_;
};

// Polynomial in s with coefficients in Q[t]/(f); coefficient i belongs to s^i
// and is stored reduced. Trailing coefficients may be zero until stripped.
using SPoly = std::vector<UPoly>;

SPoly reduce_bipoly(const BiPoly& p, const QuotientRing& R);
void strip_spoly(SPoly& a);
bool spoly_is_zero(const SPoly& a);
int spoly_deg(const SPoly& a);
SPoly spoly_sub(const SPoly& a, const SPoly& b, const QuotientRing& R);
SPoly spoly_mul(const SPoly& a, const SPoly& b, const QuotientRing& R);
SPoly spoly_derivative(const SPoly& a);

// Pops leading coefficients that vanish in the ring, then scales by the
// inverse of the (now invertible) lead. May throw SplitRequest.
SPoly make_monic(SPoly a, const QuotientRing& R);

// divisor must be monic; returns {quotient, remainder}.
std::pair<SPoly, SPoly> spoly_divrem(const SPoly& a, const SPoly& monic_divisor,
                                     const QuotientRing& R);
SPoly spoly_divexact(const SPoly& a, const SPoly& monic_divisor, const QuotientRing& R);

// Monic gcd in (Q[t]/(f))[s]; zero only if both inputs vanish identically.
SPoly spoly_gcd(const SPoly& a, const SPoly& b, const QuotientRing& R);

// Squarefree decomposition (Yun) of a polynomial over the quotient ring;
// returns monic (factor, multiplicity) pairs.
std::vector<std::pair<SPoly, int>> spoly_squarefree_decomposition(const SPoly& a,
                                                                  const QuotientRing& R);

} // namespace congruence

#endif
