#include "congruence/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace congruence {

BiPoly BiPoly::constant(const Rat& v) {
    if (sgn(v) == 0) return BiPoly();
    return BiPoly(std::vector<UPoly>{UPoly::constant(v)});
}

BiPoly BiPoly::monomial(const Rat& v, int ds, int dt) {
    if (sgn(v) == 0) return BiPoly();
    std::vector<UPoly> c(ds + 1);
    c[ds] = UPoly::monomial(v, dt);
    return BiPoly(std::move(c));
}

BiPoly BiPoly::from_t_poly(const UPoly& p) {
    if (p.is_zero()) return BiPoly();
    return BiPoly(std::vector<UPoly>{p});
}

BiPoly BiPoly::from_s_poly(const UPoly& p) {
    std::vector<UPoly> c;
    c.reserve(p.deg() + 1);
    for (int i = 0; i <= p.deg(); ++i) c.push_back(UPoly::constant(p.coeff(i)));
    return BiPoly(std::move(c));
}

int BiPoly::degt() const {
    int d = -1;
    for (const auto& u : c_) d = std::max(d, u.deg());
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (size_t i = 0; i < c_.size(); ++i)
        for (int j = 0; j <= c_[i].deg(); ++j)
            if (sgn(c_[i].coeff(j)) != 0) d = std::max(d, int(i) + j);
    return d;
}

const UPoly& BiPoly::s_coeff(int i) const {
    static const UPoly zero;
    if (i < 0 || i >= int(c_.size())) return zero;
    return c_[i];
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    std::vector<UPoly> c(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = s_coeff(int(i)) + o.s_coeff(int(i));
    return BiPoly(std::move(c));
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    std::vector<UPoly> c(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = s_coeff(int(i)) - o.s_coeff(int(i));
    return BiPoly(std::move(c));
}

BiPoly BiPoly::operator-() const {
    std::vector<UPoly> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return BiPoly(std::move(c));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (is_zero() || o.is_zero()) return BiPoly();
    std::vector<UPoly> c(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            c[i + j] = c[i + j] + c_[i] * o.c_[j];
        }
    }
    return BiPoly(std::move(c));
}

BiPoly BiPoly::scaled(const Rat& k) const {
    if (sgn(k) == 0) return BiPoly();
    std::vector<UPoly> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i].scaled(k);
    return BiPoly(std::move(c));
}

BiPoly BiPoly::mul_t(const UPoly& f) const {
    if (f.is_zero() || is_zero()) return BiPoly();
    std::vector<UPoly> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * f;
    return BiPoly(std::move(c));
}

BiPoly BiPoly::shifted_s(int k) const {
    if (is_zero()) return BiPoly();
    std::vector<UPoly> c(c_.size() + k);
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return BiPoly(std::move(c));
}

BiPoly BiPoly::dds() const {
    if (c_.size() <= 1) return BiPoly();
    std::vector<UPoly> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i].scaled(Rat(long(i)));
    return BiPoly(std::move(c));
}

BiPoly BiPoly::ddt() const {
    std::vector<UPoly> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i].derivative();
    return BiPoly(std::move(c));
}

Rat BiPoly::eval(const Rat& s0, const Rat& t0) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * s0 + c_[i].eval(t0);
    return acc;
}

UPoly BiPoly::eval_s(const Rat& s0) const {
    UPoly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc.scaled(s0) + c_[i];
    return acc;
}

UPoly BiPoly::eval_t(const Rat& t0) const {
    std::vector<Rat> c(c_.size(), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i].eval(t0);
    return UPoly(std::move(c));
}

BiPoly BiPoly::swap_vars() const {
    std::vector<UPoly> out(size_t(degt() + 1));
    std::vector<std::vector<Rat>> cs(out.size());
    int ds = degs();
    for (auto& v : cs) v.assign(ds + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (int j = 0; j <= c_[i].deg(); ++j) cs[j][i] = c_[i].coeff(j);
    for (size_t j = 0; j < out.size(); ++j) out[j] = UPoly(std::move(cs[j]));
    return BiPoly(std::move(out));
}

BiPoly BiPoly::reversed_s(int bound) const {
    if (bound < degs()) throw std::invalid_argument("reverse bound below s-degree");
    std::vector<UPoly> c(bound + 1);
    for (size_t i = 0; i < c_.size(); ++i) c[bound - i] = c_[i];
    return BiPoly(std::move(c));
}

BiPoly BiPoly::reversed_t(int bound) const {
    return swap_vars().reversed_s(bound).swap_vars();
}

BiPoly BiPoly::compose_affine(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
    BiPoly lin = BiPoly::monomial(a, 1, 0) + BiPoly::constant(b);
    BiPoly acc;
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * lin + BiPoly::from_t_poly(c_[i].compose_affine(c, d));
    return acc;
}

BiPoly BiPoly::divexact(const BiPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("bivariate division by zero");
    if (is_zero()) return BiPoly();
    BiPoly rem = *this;
    std::vector<UPoly> q(size_t(std::max(0, degs() - divisor.degs() + 1)));
    while (!rem.is_zero()) {
        int d = rem.degs() - divisor.degs();
        if (d < 0) throw std::logic_error("inexact bivariate division");
        UPoly qc = rem.lc_s().divexact(divisor.lc_s());
        q[d] = qc;
        BiPoly term(std::vector<UPoly>(1, qc));
        rem = rem - (divisor * term.shifted_s(d));
    }
    return BiPoly(std::move(q));
}

UPoly BiPoly::content_s() const {
    UPoly g;
    for (const auto& u : c_) {
        if (u.is_zero()) continue;
        g = g.is_zero() ? u.monic() : gcd(g, u);
        if (g.deg() == 0) break;
    }
    return g;
}

BiPoly BiPoly::primitive_s() const {
    if (is_zero()) return BiPoly();
    UPoly ct = content_s();
    std::vector<UPoly> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        c[i] = c_[i].is_zero() ? UPoly() : c_[i].divexact(ct);
    return BiPoly(std::move(c));
}

BiPoly BiPoly::normalized() const {
    if (is_zero()) return BiPoly();
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& u : c_)
        for (const auto& v : u.coeffs()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
        }
    Rat scale = rat(den_lcm, num_gcd);
    if (sgn(lc_s().lc()) < 0) scale = -scale;
    return scaled(scale);
}

std::vector<std::tuple<int, int, Rat>> BiPoly::monomials() const {
    std::vector<std::tuple<int, int, Rat>> out;
    for (size_t i = 0; i < c_.size(); ++i)
        for (int j = 0; j <= c_[i].deg(); ++j)
            if (sgn(c_[i].coeff(j)) != 0) out.emplace_back(int(i), j, c_[i].coeff(j));
    return out;
}

BiPoly BiPoly::from_monomials(const std::vector<std::tuple<int, int, Rat>>& ms) {
    BiPoly acc;
    for (const auto& [ds, dt, v] : ms) acc = acc + BiPoly::monomial(v, ds, dt);
    return acc;
}

std::string BiPoly::str() const {
    auto ms = monomials();
    if (ms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ds, dt, v] : ms) {
        if (!first) os << (sgn(v) > 0 ? " + " : " - ");
        else if (sgn(v) < 0) os << "-";
        Rat a = abs(Rat(v));
        bool unit = (a == 1) && (ds + dt > 0);
        if (!unit) os << rat_str(a);
        if (ds > 0) { os << (unit && first ? "" : (unit ? "" : "*")) << "s"; if (ds > 1) os << "^" << ds; }
        if (dt > 0) { os << ((ds > 0 || !unit) ? "*" : "") << "t"; if (dt > 1) os << "^" << dt; }
        first = false;
    }
    return os.str();
}

namespace {

// Pseudo-remainder of a by b in the main variable s.
BiPoly prem_s(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    while (!r.is_zero() && r.degs() >= b.degs()) {
        int d = r.degs() - b.degs();
        BiPoly lead(std::vector<UPoly>(1, r.lc_s()));
        r = r.mul_t(b.lc_s()) - b * lead.shifted_s(d);
    }
    return r;
}

} // namespace

BiPoly bigcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    UPoly ca = a.content_s(), cb = b.content_s();
    BiPoly pa = a.primitive_s(), pb = b.primitive_s();
    UPoly cg = gcd(ca, cb);
    // Primitive PRS on the primitive parts, s as main variable.
    BiPoly x = pa, y = pb;
    if (x.degs() < y.degs()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degs() == 0) {
            // y is primitive and s-free, hence a constant: primitive parts coprime.
            x = BiPoly::constant(Rat(1));
            break;
        }
        BiPoly r = prem_s(x, y);
        x = y;
        y = r.is_zero() ? BiPoly() : r.primitive_s();
    }
    BiPoly g = x.primitive_s().mul_t(cg);
    return g.normalized();
}

UPoly resultant(const BiPoly& p, const BiPoly& q, Var eliminate) {
    if (eliminate == Var::t) return resultant(p.swap_vars(), q.swap_vars(), Var::s);
    int m = p.degs(), n = q.degs();
    if (m <= 0 || n <= 0)
        throw std::invalid_argument("resultant needs positive degree in the eliminated variable");
    int size = m + n;
    std::vector<std::vector<UPoly>> syl(size, std::vector<UPoly>(size));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) syl[i][i + j] = p.s_coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) syl[n + i][i + j] = q.s_coeff(n - j);
    return det_bareiss(std::move(syl));
}

BiPoly squarefree(const BiPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree of zero");
    if (p.degs() > 0 && p.degt() > 0)
        throw std::invalid_argument("squarefree expects a univariate polynomial");
    if (p.degs() > 0) {
        UPoly u(std::vector<Rat>([&] {
            std::vector<Rat> c(p.degs() + 1, Rat(0));
            for (int i = 0; i <= p.degs(); ++i) c[i] = p.s_coeff(i).coeff(0);
            return c;
        }()));
        return BiPoly::from_s_poly(squarefree_part(u)).normalized();
    }
    return BiPoly::from_t_poly(squarefree_part(p.s_coeff(0))).normalized();
}

} // namespace congruence
