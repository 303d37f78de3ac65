#ifndef CONGRUENCE_BIPOLY_HPP
#define CONGRUENCE_BIPOLY_HPP

#include <string>
#include <tuple>
#include <vector>

#include "congruence/upoly.hpp"

namespace congruence {

// Polynomial in (s, t) over Rat, stored recursively: coefficient of s^i is a
// UPoly in t. The coefficient vector never ends in zero polynomials.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UPoly> s_coeffs) : c_(std::move(s_coeffs)) { trim(); }
    static BiPoly zero() { return BiPoly(); }
    static BiPoly constant(const Rat& v);
    static BiPoly monomial(const Rat& v, int ds, int dt);
    static BiPoly var_s() { return monomial(Rat(1), 1, 0); }
    static BiPoly var_t() { return monomial(Rat(1), 0, 1); }
    static BiPoly from_t_poly(const UPoly& p);
    static BiPoly from_s_poly(const UPoly& p);

    int degs() const { return int(c_.size()) - 1; }
    int degt() const;
    int total_degree() const;
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_[0].is_constant()); }
    const UPoly& s_coeff(int i) const;
    const UPoly& lc_s() const { return c_.back(); }
    const std::vector<UPoly>& s_coeffs() const { return c_; }

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly scaled(const Rat& k) const;
    BiPoly mul_t(const UPoly& f) const; // multiply by a polynomial in t
    BiPoly shifted_s(int k) const;      // multiply by s^k
    bool operator==(const BiPoly& o) const { return c_ == o.c_; }

    BiPoly dds() const;
    BiPoly ddt() const;
    Rat eval(const Rat& s0, const Rat& t0) const;
    UPoly eval_s(const Rat& s0) const; // polynomial in t
    UPoly eval_t(const Rat& t0) const; // polynomial in s

    BiPoly swap_vars() const;
    BiPoly reversed_s(int bound) const; // s^bound * p(1/s, t)
    BiPoly reversed_t(int bound) const;
    BiPoly compose_affine(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const;

    BiPoly divexact(const BiPoly& divisor) const;
    UPoly content_s() const; // monic gcd of the s-coefficients
    BiPoly primitive_s() const;
    // Integer-primitive normalization with positive lexicographic lead.
    BiPoly normalized() const;

    // Sparse monomial view: (deg_s, deg_t, coefficient), sorted by (ds, dt).
    std::vector<std::tuple<int, int, Rat>> monomials() const;
    static BiPoly from_monomials(const std::vector<std::tuple<int, int, Rat>>& ms);

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<UPoly> c_;
};

// gcd up to normalization (integer-primitive, positive lead).
BiPoly bigcd(const BiPoly& a, const BiPoly& b);

// Sylvester resultant eliminating the named variable; result is univariate in
// the other variable (returned as UPoly). Requires positive degree in the
// eliminated variable for both arguments.
enum class Var { s, t };
UPoly resultant(const BiPoly& p, const BiPoly& q, Var eliminate);

// p / gcd(p, p') for a BiPoly that is univariate (in s or t), normalized.
BiPoly squarefree(const BiPoly& p);

template <>
struct RingOps<BiPoly> {
    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return BiPoly::constant(Rat(1)); }
    static bool is_zero(const BiPoly& x) { return x.is_zero(); }
    static BiPoly divexact(const BiPoly& a, const BiPoly& b) { return a.divexact(b); }
    static size_t size_hint(const BiPoly& x) {
        return size_t((x.degs() + 1)) * size_t(x.degt() + 1);
    }
};

} // namespace congruence

#endif
