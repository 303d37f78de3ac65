#include "congruence/solve.hpp"

#include <deque>
#include <stdexcept>

#include "congruence/quotient.hpp"

namespace congruence {

namespace {

struct Branch {
    UPoly modulus; // monic squarefree
    int res_mult;  // multiplicity of these roots in the eliminant
};

// Lift data for one branch; counts accumulate into the totals.
struct Accumulator {
    long long mult = 0;
    long long distinct = 0;
};

// direct_mode: the eliminant was one of the input equations itself (the one
// free of s); solution multiplicities then combine the branch multiplicity
// with s-root multiplicities of the other equation.
void process_branch(const Branch& br, const BiPoly& p, const BiPoly& q, bool direct_mode,
                    const std::vector<BiPoly>& validators,
                    const std::vector<std::vector<BiPoly>>& exclusions,
                    std::deque<Branch>& work, Accumulator& acc) {
    try {
        QuotientRing R(br.modulus);
        SPoly G;
        if (direct_mode) {
            G = make_monic(reduce_bipoly(q, R), R);
        } else {
            SPoly A = reduce_bipoly(p, R);
            SPoly B = reduce_bipoly(q, R);
            if (spoly_is_zero(A) && spoly_is_zero(B))
                throw std::logic_error("both equations vanish on a branch after gcd check");
            G = spoly_gcd(A, B, R);
        }
        if (spoly_deg(G) <= 0) return; // no affine lift over these roots
        // Squarefree part of the lift.
        SPoly Gp = spoly_derivative(G);
        SPoly W = spoly_gcd(G, Gp, R);
        SPoly Gsf = spoly_divexact(G, W, R);
        // Validators must vanish at kept solutions.
        for (const auto& v : validators) {
            SPoly V = reduce_bipoly(v, R);
            if (spoly_is_zero(V)) continue;
            Gsf = spoly_gcd(Gsf, V, R);
            if (spoly_deg(Gsf) <= 0) return;
        }
        // Exclusion lists strike solutions where a whole list vanishes.
        for (const auto& list : exclusions) {
            SPoly E = Gsf;
            for (const auto& e : list) {
                SPoly Ebar = reduce_bipoly(e, R);
                if (spoly_is_zero(Ebar)) continue;
                E = spoly_gcd(E, Ebar, R);
                if (spoly_deg(E) <= 0) break;
            }
            if (spoly_deg(E) > 0) Gsf = spoly_divexact(Gsf, E, R);
            if (spoly_deg(Gsf) <= 0) return;
        }
        int d = br.modulus.deg();
        acc.distinct += (long long)d * spoly_deg(Gsf);
        if (!direct_mode) {
            acc.mult += (long long)d * br.res_mult;
        } else {
            long long msum = 0;
            for (const auto& [u, k] : spoly_squarefree_decomposition(G, R)) {
                SPoly common = spoly_gcd(u, Gsf, R);
                msum += (long long)k * std::max(0, spoly_deg(common));
            }
            acc.mult += (long long)d * br.res_mult * msum;
        }
    } catch (const SplitRequest& sr) {
        UPoly rest = br.modulus.divexact(sr.factor).monic();
        work.push_back({sr.factor, br.res_mult});
        work.push_back({rest, br.res_mult});
    }
}

SolutionCount count_oriented(const BiPoly& p, const BiPoly& q,
                             const std::vector<BiPoly>& validators,
                             const std::vector<std::vector<BiPoly>>& exclusions) {
    // Orientation: eliminate s, keep t as the base variable.
    bool direct_mode = false;
    UPoly eliminant;
    BiPoly lift_eq = q;
    if (p.degs() > 0 && q.degs() > 0) {
        eliminant = resultant(p, q, Var::s);
        if (eliminant.is_zero())
            throw std::logic_error("vanishing resultant after coprimality check");
    } else if (p.degs() == 0) {
        direct_mode = true;
        eliminant = p.s_coeff(0);
        lift_eq = q;
    } else {
        direct_mode = true;
        eliminant = q.s_coeff(0);
        lift_eq = p;
    }
    SolutionCount out;
    if (eliminant.deg() <= 0) return out; // no finite base roots
    std::deque<Branch> work;
    for (const auto& [f, m] : squarefree_decomposition(eliminant)) work.push_back({f, m});
    Accumulator acc;
    while (!work.empty()) {
        Branch br = work.front();
        work.pop_front();
        process_branch(br, p, direct_mode ? lift_eq : q, direct_mode, validators, exclusions,
                       work, acc);
    }
    out.with_multiplicity = acc.mult;
    out.distinct = acc.distinct;
    return out;
}

} // namespace

SolutionCount count_affine(const BiPoly& p, const BiPoly& q,
                           const std::vector<BiPoly>& validators,
                           const std::vector<std::vector<BiPoly>>& exclusions) {
    SolutionCount out;
    if (p.is_zero() || q.is_zero()) {
        out.finite = false;
        return out;
    }
    if (p.is_constant() || q.is_constant()) return out; // nonzero constant: empty system
    BiPoly g = bigcd(p, q);
    if (!g.is_constant()) {
        out.finite = false;
        return out;
    }
    bool s_free = p.degs() == 0 && q.degs() == 0;
    bool t_free = p.degt() == 0 && q.degt() == 0;
    if (s_free || t_free) return out; // coprime univariate pair: no common zero
    if (p.degs() > 0 && q.degs() > 0) return count_oriented(p, q, validators, exclusions);
    if (p.degt() > 0 && q.degt() > 0) {
        // Work in swapped variables, eliminating the old t.
        std::vector<BiPoly> vs;
        vs.reserve(validators.size());
        for (const auto& v : validators) vs.push_back(v.swap_vars());
        std::vector<std::vector<BiPoly>> ex;
        ex.reserve(exclusions.size());
        for (const auto& list : exclusions) {
            std::vector<BiPoly> l;
            l.reserve(list.size());
            for (const auto& e : list) l.push_back(e.swap_vars());
            ex.push_back(std::move(l));
        }
        return count_oriented(p.swap_vars(), q.swap_vars(), vs, ex);
    }
    return count_oriented(p, q, validators, exclusions);
}

SolutionCount count_solutions(const BiPoly& p, const BiPoly& q,
                              const std::vector<BiPoly>& validators) {
    return count_affine(p, q, validators, {});
}

UniCount count_univariate_system(const std::vector<UPoly>& conditions,
                                 const std::vector<std::vector<UPoly>>& exclusions) {
    UniCount out;
    UPoly g;
    bool any_nonzero = false;
    for (const auto& c : conditions) {
        if (c.is_zero()) continue;
        any_nonzero = true;
        g = g.is_zero() ? c.monic() : gcd(g, c);
        if (g.deg() == 0) break;
    }
    if (!any_nonzero) {
        // Conditions vanish along the whole line. If some exclusion list also
        // vanishes identically, the line is excluded pointwise and contributes
        // nothing; otherwise the solutions are genuinely positive-dimensional.
        for (const auto& list : exclusions) {
            if (list.empty()) continue;
            bool listzero = true;
            for (const auto& m : list)
                if (!m.is_zero()) { listzero = false; break; }
            if (listzero) return out;
        }
        out.all_zero = true;
        return out;
    }
    if (g.deg() <= 0) return out;
    for (const auto& list : exclusions) {
        UPoly e = g;
        bool vacuous = true;
        for (const auto& m : list) {
            if (m.is_zero()) continue;
            vacuous = false;
            e = gcd(e, m);
            if (e.deg() == 0) break;
        }
        if (vacuous) e = g; // whole list vanishes identically: strike everything
        if (e.deg() <= 0) continue;
        // Remove the struck roots entirely, multiplicities included.
        UPoly rad = squarefree_part(e);
        while (true) {
            UPoly common = gcd(g, rad);
            if (common.deg() <= 0) break;
            g = g.divexact(common);
        }
        if (g.deg() <= 0) return out;
    }
    out.with_multiplicity = g.deg();
    out.distinct = squarefree_part(g).deg();
    return out;
}

} // namespace congruence
