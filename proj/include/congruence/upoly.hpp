#ifndef CONGRUENCE_UPOLY_HPP
#define CONGRUENCE_UPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "congruence/rat.hpp"
#include "congruence/ring_det.hpp"

namespace congruence {

// Dense univariate polynomial over Rat. Coefficient i is the coefficient of
// x^i; the vector never ends in zeros, so deg() of the zero polynomial is -1.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly zero() { return UPoly(); }
    static UPoly constant(const Rat& v);
    static UPoly monomial(const Rat& v, int degree);
    static UPoly from_longs(std::initializer_list<long> ascending);

    int deg() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rat& coeff(int i) const;
    const Rat& lc() const { return c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator-() const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const Rat& k) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly derivative() const;
    Rat eval(const Rat& x) const;
    UPoly shifted(int k) const;            // multiply by x^k
    UPoly reversed(int degree_bound) const; // x^d * p(1/x) with d = degree_bound
    UPoly compose_affine(const Rat& a, const Rat& b) const; // p(a x + b)

    // Quotient and remainder over the field Q.
    std::pair<UPoly, UPoly> divrem(const UPoly& divisor) const;
    UPoly divexact(const UPoly& divisor) const;

    UPoly monic() const;
    // Rescaled to integer coefficients, content 1, positive leading coefficient.
    UPoly primitive() const;

    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && is_zero_rat(c_.back())) c_.pop_back();
    }
    static bool is_zero_rat(const Rat& q) { return sgn(q) == 0; }
    std::vector<Rat> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b); // monic

UPoly squarefree_part(const UPoly& p);

// Yun decomposition: list of (factor, multiplicity) with factors squarefree,
// pairwise coprime, multiplicities strictly increasing where present.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

template <>
struct RingOps<UPoly> {
    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly::constant(Rat(1)); }
    static bool is_zero(const UPoly& x) { return x.is_zero(); }
    static UPoly divexact(const UPoly& a, const UPoly& b) { return a.divexact(b); }
    static size_t size_hint(const UPoly& x) { return size_t(x.deg() + 1); }
};

} // namespace congruence

#endif
