#include "congruence/quotient.hpp"

#include <stdexcept>

namespace congruence {

QuotientRing::QuotientRing(UPoly modulus) : f_(std::move(modulus)) {
    if (f_.deg() < 1) throw std::invalid_argument("quotient modulus must have degree >= 1");
    f_ = f_.monic();
}

UPoly QuotientRing::inverse(const UPoly& a) const {
    if (a.is_zero()) throw std::logic_error("inverse of zero residue");
    // Extended Euclid on (f, a).
    UPoly r0 = f_, r1 = a;
    UPoly v0, v1 = UPoly::constant(Rat(1)); // coefficients of a
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        UPoly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.deg() == 0) return reduce(v0.scaled(1 / r0.coeff(0)));
    throw SplitRequest{r0.monic()};
}

SPoly reduce_bipoly(const BiPoly& p, const QuotientRing& R) {
    SPoly out;
    out.reserve(p.degs() + 1);
    for (int i = 0; i <= p.degs(); ++i) out.push_back(R.reduce(p.s_coeff(i)));
    strip_spoly(out);
    return out;
}

void strip_spoly(SPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

bool spoly_is_zero(const SPoly& a) {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

int spoly_deg(const SPoly& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (!a[i].is_zero()) return int(i);
    return -1;
}

SPoly spoly_sub(const SPoly& a, const SPoly& b, const QuotientRing& R) {
    SPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        UPoly av = i < a.size() ? a[i] : UPoly();
        UPoly bv = i < b.size() ? b[i] : UPoly();
        out[i] = R.reduce(av - bv);
    }
    strip_spoly(out);
    return out;
}

SPoly spoly_mul(const SPoly& a, const SPoly& b, const QuotientRing& R) {
    if (spoly_is_zero(a) || spoly_is_zero(b)) return {};
    SPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] = R.reduce(out[i + j] + a[i] * b[j]);
        }
    }
    strip_spoly(out);
    return out;
}

SPoly spoly_derivative(const SPoly& a) {
    if (a.size() <= 1) return {};
    SPoly out(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i].scaled(Rat(long(i)));
    strip_spoly(out);
    return out;
}

SPoly make_monic(SPoly a, const QuotientRing& R) {
    strip_spoly(a);
    if (a.empty()) return a;
    UPoly inv = R.inverse(a.back());
    for (auto& c : a) c = R.mul(c, inv);
    a.back() = UPoly::constant(Rat(1));
    return a;
}

std::pair<SPoly, SPoly> spoly_divrem(const SPoly& a, const SPoly& monic_divisor,
                                     const QuotientRing& R) {
    int db = spoly_deg(monic_divisor);
    if (db < 0) throw std::invalid_argument("spoly division by zero");
    SPoly rem = a;
    strip_spoly(rem);
    int dr = spoly_deg(rem);
    if (dr < db) return {{}, rem};
    SPoly q(dr - db + 1);
    while ((dr = spoly_deg(rem)) >= db) {
        UPoly factor = rem[dr];
        int shift = dr - db;
        q[shift] = factor;
        for (int j = 0; j <= db; ++j)
            rem[shift + j] = R.reduce(rem[shift + j] - factor * monic_divisor[j]);
        strip_spoly(rem);
        if (rem.empty()) break;
    }
    strip_spoly(q);
    return {q, rem};
}

SPoly spoly_divexact(const SPoly& a, const SPoly& monic_divisor, const QuotientRing& R) {
    auto [q, r] = spoly_divrem(a, monic_divisor, R);
    if (!spoly_is_zero(r)) throw std::logic_error("inexact division over quotient ring");
    return q;
}

SPoly spoly_gcd(const SPoly& a, const SPoly& b, const QuotientRing& R) {
    SPoly x = make_monic(a, R);
    SPoly y = make_monic(b, R);
    if (spoly_is_zero(x)) return y;
    if (spoly_is_zero(y)) return x;
    if (spoly_deg(x) < spoly_deg(y)) std::swap(x, y);
    while (!spoly_is_zero(y)) {
        SPoly r = spoly_divrem(x, y, R).second;
        x = std::move(y);
        y = make_monic(std::move(r), R);
    }
    return x;
}

std::vector<std::pair<SPoly, int>> spoly_squarefree_decomposition(const SPoly& a,
                                                                  const QuotientRing& R) {
    std::vector<std::pair<SPoly, int>> out;
    SPoly p = make_monic(a, R);
    if (spoly_deg(p) < 1) return out;
    SPoly d = spoly_derivative(p);
    SPoly g = spoly_gcd(p, d, R);
    SPoly b = spoly_divexact(p, g, R);
    SPoly c = spoly_divexact(d, g, R);
    int k = 1;
    while (spoly_deg(b) > 0) {
        SPoly w = spoly_gcd(b, spoly_sub(c, spoly_derivative(b), R), R);
        if (spoly_deg(w) > 0) out.emplace_back(w, k);
        SPoly db = spoly_derivative(b);
        c = spoly_divexact(spoly_sub(c, db, R), w, R);
        b = spoly_divexact(b, w, R);
        ++k;
    }
    return out;
}

} // namespace congruence
