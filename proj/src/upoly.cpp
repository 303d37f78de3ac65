#include "congruence/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace congruence {

UPoly UPoly::constant(const Rat& v) {
    if (sgn(v) == 0) return UPoly();
    return UPoly(std::vector<Rat>{v});
}

UPoly UPoly::monomial(const Rat& v, int degree) {
    if (sgn(v) == 0) return UPoly();
    std::vector<Rat> c(degree + 1, Rat(0));
    c[degree] = v;
    return UPoly(std::move(c));
}

UPoly UPoly::from_longs(std::initializer_list<long> ascending) {
    std::vector<Rat> c;
    c.reserve(ascending.size());
    for (long v : ascending) c.push_back(Rat(v));
    return UPoly(std::move(c));
}

const Rat& UPoly::coeff(int i) const {
    static const Rat zero(0);
    if (i < 0 || i >= int(c_.size())) return zero;
    return c_[i];
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
    std::vector<Rat> c(c_);
    for (auto& v : c) v = -v;
    return UPoly(std::move(c));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (is_zero_rat(c_[i])) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return UPoly(std::move(c));
}

UPoly UPoly::scaled(const Rat& k) const {
    if (sgn(k) == 0) return UPoly();
    std::vector<Rat> c(c_);
    for (auto& v : c) v *= k;
    return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(long(i));
    return UPoly(std::move(c));
}

Rat UPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UPoly UPoly::shifted(int k) const {
    if (is_zero()) return UPoly();
    std::vector<Rat> c(c_.size() + k, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::reversed(int degree_bound) const {
    if (degree_bound < deg()) throw std::invalid_argument("reverse bound below degree");
    std::vector<Rat> c(degree_bound + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[degree_bound - i] = c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::compose_affine(const Rat& a, const Rat& b) const {
    UPoly acc;
    UPoly lin(std::vector<Rat>{b, a});
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + UPoly::constant(c_[i]);
    return acc;
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    UPoly rem = *this;
    if (rem.deg() < divisor.deg()) return {UPoly(), rem};
    std::vector<Rat> q(rem.deg() - divisor.deg() + 1, Rat(0));
    Rat inv_lc = 1 / divisor.lc();
    while (!rem.is_zero() && rem.deg() >= divisor.deg()) {
        int d = rem.deg() - divisor.deg();
        Rat factor = rem.lc() * inv_lc;
        q[d] = factor;
        rem = rem - divisor.shifted(d).scaled(factor);
    }
    return {UPoly(std::move(q)), rem};
}

UPoly UPoly::divexact(const UPoly& divisor) const {
    auto [q, r] = divrem(divisor);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

UPoly UPoly::monic() const {
    if (is_zero()) return UPoly();
    return scaled(1 / lc());
}

UPoly UPoly::primitive() const {
    if (is_zero()) return UPoly();
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& v : c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    Rat scale = rat(den_lcm, num_gcd);
    if (sgn(lc()) < 0) scale = -scale;
    return scaled(scale);
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        if (sgn(c_[i]) == 0) continue;
        if (!first) os << (sgn(c_[i]) > 0 ? " + " : " - ");
        else if (sgn(c_[i]) < 0) os << "-";
        Rat a = abs(Rat(c_[i]));
        if (i == 0 || a != 1) os << rat_str(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x.divrem(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of zero");
    if (p.deg() == 0) return UPoly::constant(Rat(1)).primitive();
    UPoly g = gcd(p, p.derivative());
    return p.divexact(g).primitive();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
    std::vector<std::pair<UPoly, int>> out;
    if (p.is_zero() || p.deg() == 0) return out;
    // Yun's algorithm.
    UPoly d = p.derivative();
    UPoly a = gcd(p, d);
    UPoly b = p.divexact(a);
    UPoly c = d.divexact(a);
    int k = 1;
    while (b.deg() > 0) {
        UPoly w = gcd(b, c - b.derivative());
        if (w.deg() > 0) out.emplace_back(w.monic(), k);
        UPoly b2 = b.divexact(w);
        c = (c - b.derivative()).divexact(w);
        b = std::move(b2);
        ++k;
    }
    return out;
}

} // namespace congruence
