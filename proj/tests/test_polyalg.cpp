#include <doctest.h>

#include <numeric>
#include <set>

#include "congruence/chart.hpp"
#include "congruence/quotient.hpp"
#include "congruence/solve.hpp"

using namespace congruence;

namespace {

BiPoly S() { return BiPoly::var_s(); }
BiPoly T() { return BiPoly::var_t(); }
BiPoly C(long v) { return BiPoly::constant(rat(v)); }

// a s + b t + c
BiPoly lin(long a, long b, long c) {
    return S().scaled(rat(a)) + T().scaled(rat(b)) + C(c);
}

} // namespace

TEST_CASE("ring operations on pinned examples") {
    CHECK((S() * S() * T()).dds() == (S() * T()).scaled(rat(2)));
    CHECK((S() * S() + T() * T()).eval(rat(3), rat(4)) == rat(25));
    CHECK((S() + T()) * (S() - T()) == S() * S() - T() * T());
}

TEST_CASE("resultant on pinned examples") {
    CHECK(resultant(S() - T(), S() + T(), Var::s) == UPoly::from_longs({0, 2}));
    CHECK(resultant(S() * S() - T(), S() - C(1), Var::s) == UPoly::from_longs({1, -1}));
    CHECK(resultant(S() - T(), S() - T(), Var::s).is_zero());
    CHECK_THROWS_AS(resultant(T(), S() - T(), Var::s), std::invalid_argument);
}

TEST_CASE("resultant vanishes exactly on planted common factors") {
    Sampler smp(5, 20);
    for (int trial = 0; trial < 12; ++trial) {
        BiPoly u = lin(smp.rand_int(1, 5), smp.rand_int(-4, 4), smp.rand_int(-4, 4));
        BiPoly a = lin(smp.rand_int(1, 5), smp.rand_int(-4, 4), smp.rand_int(-4, 4));
        BiPoly b = lin(smp.rand_int(1, 5), smp.rand_int(-4, 4), smp.rand_int(-4, 4));
        if (!bigcd(a, b).is_constant()) continue;
        CHECK(resultant(u * a, u * b, Var::s).is_zero());
        CHECK(!resultant(a, b, Var::s).is_zero());
        // a common factor of s-degree 0 does not kill the resultant
        BiPoly w = T() - C(3);
        UPoly res = resultant(a.mul_t(w.s_coeff(0)), b.mul_t(w.s_coeff(0)), Var::s);
        CHECK(!res.is_zero());
    }
}

TEST_CASE("squarefree on pinned examples") {
    BiPoly tm1 = T() - C(1);
    CHECK(squarefree(tm1 * tm1 * tm1) == tm1);
    CHECK(squarefree(T() * T() - C(1)) == T() * T() - C(1));
    CHECK(squarefree(T() * T() * T() - T() * T()) == T() * T() - T());
    CHECK_THROWS_AS(squarefree(BiPoly::zero()), std::invalid_argument);
}

TEST_CASE("squarefree part is coprime with its derivative") {
    Sampler smp(9, 10);
    for (int trial = 0; trial < 20; ++trial) {
        UPoly p = UPoly::constant(Rat(1));
        for (int f = 0; f < 3; ++f) {
            UPoly lin(std::vector<Rat>{rat(smp.rand_int(-4, 4)), Rat(1)});
            int mult = 1 + int(smp.rand_int(0, 2));
            for (int k = 0; k < mult; ++k) p = p * lin;
        }
        UPoly sf = squarefree_part(p);
        CHECK(gcd(sf, sf.derivative()).deg() == 0);
    }
}

TEST_CASE("count_solutions on pinned examples") {
    auto one = count_solutions(S(), T(), {});
    CHECK(one.finite);
    CHECK(one.with_multiplicity == 1);
    CHECK(one.distinct == 1);

    auto lift2 = count_solutions(S() * S() - T(), T() - C(1), {});
    CHECK(lift2.finite);
    CHECK(lift2.with_multiplicity == 2);
    CHECK(lift2.distinct == 2);

    auto pd = count_solutions(S() - T(), (S() - T()).scaled(rat(2)), {});
    CHECK(!pd.finite);

    CHECK(!count_solutions(BiPoly::zero(), T(), {}).finite);

    // tangential contact counts with multiplicity two
    auto tang = count_solutions(S() * S() - T(), T(), {});
    CHECK(tang.finite);
    CHECK(tang.with_multiplicity == 2);
    CHECK(tang.distinct == 1);

    // validators discard solutions
    auto val = count_solutions(S() * (S() - C(1)), T(), {S() - C(1)});
    CHECK(val.finite);
    CHECK(val.distinct == 1);
}

TEST_CASE("validators filter irrational lifts branch by branch") {
    // the two solutions above t = 1 have s = +-sqrt(2)
    auto keep = count_solutions(S() * S() - C(2), T() - C(1), {S() * S() - C(2)});
    CHECK(keep.distinct == 2);
    CHECK(keep.with_multiplicity == 2);
    auto kill = count_solutions(S() * S() - C(2), T() - C(1), {S() - C(1)});
    CHECK(kill.distinct == 0);
    // a validator true on one rational branch only
    auto split = count_solutions((S() - C(1)) * (S() - C(2)), T() - C(5), {S() - C(2)});
    CHECK(split.distinct == 1);
}

TEST_CASE("count_solutions agrees with pairwise-intersection oracle on planted systems") {
    Sampler smp(13, 12);
    int done = 0;
    while (done < 20) {
        std::vector<BiPoly> ps, qs;
        for (int i = 0; i < 2; ++i)
            ps.push_back(lin(smp.rand_int(1, 6), smp.rand_int(-5, 5), smp.rand_int(-5, 5)));
        for (int i = 0; i < 2; ++i)
            qs.push_back(lin(smp.rand_int(-5, 5), smp.rand_int(1, 6), smp.rand_int(-5, 5)));
        BiPoly p = ps[0] * ps[1];
        BiPoly q = qs[0] * qs[1];
        if (!bigcd(p, q).is_constant()) continue;
        // oracle: solve every line pair exactly
        std::set<std::pair<std::string, std::string>> pts;
        bool degenerate = false;
        for (const auto& a : ps)
            for (const auto& b : qs) {
                // a: a1 s + a2 t + a0, b likewise
                Rat a1 = a.s_coeff(1).coeff(0), a2 = a.s_coeff(0).coeff(1),
                    a0 = a.s_coeff(0).coeff(0);
                Rat b1 = b.s_coeff(1).coeff(0), b2 = b.s_coeff(0).coeff(1),
                    b0 = b.s_coeff(0).coeff(0);
                Rat det = a1 * b2 - a2 * b1;
                if (is_zero(det)) {
                    degenerate = true;
                    continue;
                }
                Rat sv = (-a0 * b2 + a2 * b0) / det;
                Rat tv = (-a1 * b0 + a0 * b1) / det;
                pts.insert({rat_str(sv), rat_str(tv)});
            }
        if (degenerate) continue;
        auto sc = count_solutions(p, q, {});
        CHECK(sc.finite);
        CHECK(sc.distinct == (long long)pts.size());
        if (pts.size() == 4) CHECK(sc.with_multiplicity == 4);
        ++done;
    }
}

TEST_CASE("count_solutions agrees with a rational-point scan on boxed systems") {
    // systems whose solutions are planted rational points inside a small box
    BiPoly p = (S() - C(1)) * (S() + C(2));
    BiPoly q = (T() - C(3)) * (S() - T());
    auto sc = count_solutions(p, q, {});
    long long scan = 0;
    for (long pn = -8; pn <= 8; ++pn)
        for (long pq = 1; pq <= 3; ++pq) {
            if (std::gcd(std::abs(pn), pq) != 1) continue;
            for (long tn = -8; tn <= 8; ++tn)
                for (long tq = 1; tq <= 3; ++tq) {
                    if (std::gcd(std::abs(tn), tq) != 1) continue;
                    Rat sv = rat(pn, pq), tv = rat(tn, tq);
                    if (is_zero(p.eval(sv, tv)) && is_zero(q.eval(sv, tv))) ++scan;
                }
        }
    CHECK(sc.finite);
    CHECK(sc.distinct == scan);
}

TEST_CASE("counts never exceed the Bezout ceiling") {
    Sampler smp(17, 8);
    for (int trial = 0; trial < 10; ++trial) {
        BiPoly p, q;
        for (int ds = 0; ds <= 1; ++ds)
            for (int dt = 0; dt <= 1; ++dt) {
                p = p + BiPoly::monomial(rat(smp.rand_int(-6, 6)), ds, dt);
                q = q + BiPoly::monomial(rat(smp.rand_int(-6, 6)), ds, dt);
            }
        p = p + BiPoly::monomial(rat(smp.rand_int(1, 6)), 2, 0);
        q = q + BiPoly::monomial(rat(smp.rand_int(1, 6)), 0, 2);
        if (!bigcd(p, q).is_constant()) continue;
        auto sc = count_solutions(p, q, {});
        if (!sc.finite) continue;
        CHECK(sc.with_multiplicity <= (long long)p.total_degree() * q.total_degree());
        CHECK(sc.distinct <= sc.with_multiplicity);
    }
}

TEST_CASE("counts are independent of the variable orientation") {
    std::vector<std::pair<BiPoly, BiPoly>> systems = {
        {(S() - T()) * (S() + T() * T()), (S() - C(2)) * (T() - C(3))},
        {S() * S() - T(), T() * T() - S()},
        {(S() * S() - T()) * (S() - C(1)), T() - C(1)},
    };
    for (auto& [p, q] : systems) {
        auto a = count_solutions(p, q, {});
        auto b = count_solutions(p.swap_vars(), q.swap_vars(), {});
        CHECK(a.finite == b.finite);
        CHECK(a.with_multiplicity == b.with_multiplicity);
        CHECK(a.distinct == b.distinct);
    }
}

TEST_CASE("quotient-ring gcd splits zero divisors transparently") {
    // modulus with two rational roots so the lift differs per branch
    UPoly f = UPoly::from_longs({2, -3, 1}); // (t-1)(t-2)
    QuotientRing R(f);
    // a = s - t: gcd with s - 1 should split the modulus
    SPoly a = {UPoly::from_longs({0, -1}), UPoly::constant(Rat(1))};
    SPoly b = {UPoly::constant(Rat(-1)), UPoly::constant(Rat(1))};
    CHECK_THROWS_AS((void)spoly_gcd(a, b, R), SplitRequest);
}

TEST_CASE("bivariate gcd finds planted factors") {
    Sampler smp(19, 9);
    for (int trial = 0; trial < 10; ++trial) {
        BiPoly u = lin(smp.rand_int(1, 4), smp.rand_int(-3, 3), smp.rand_int(-3, 3));
        BiPoly a = lin(smp.rand_int(1, 4), smp.rand_int(-3, 3), smp.rand_int(-3, 3));
        BiPoly b = lin(smp.rand_int(-3, 3), smp.rand_int(1, 4), smp.rand_int(-3, 3));
        if (!bigcd(a, b).is_constant()) continue;
        BiPoly g = bigcd(u * a, u * b);
        CHECK(g == u.normalized());
    }
}
