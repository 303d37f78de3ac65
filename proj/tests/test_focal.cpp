#include <doctest.h>

#include "congruence/catalog.hpp"
#include "congruence/classify.hpp"
#include "congruence/focal.hpp"

using namespace congruence;

namespace {

// Lines joining (1, t, 0, 0) on one axis line to (0, 0, 1, s) on a skew one.
Chart two_lines_chart() {
    Chart c;
    c.r = 1;
    c.N = 3;
    c.declared_birational = true;
    BiPoly s = BiPoly::var_s(), t = BiPoly::var_t();
    c.rows = {
        {BiPoly::constant(rat(1)), t, BiPoly::zero(), BiPoly::zero()},
        {BiPoly::zero(), BiPoly::zero(), BiPoly::constant(rat(1)), s},
    };
    return c;
}

std::vector<Rat> fiber_point(const Chart& c, const Rat& s0, const Rat& t0,
                             const std::vector<Rat>& coeffs) {
    Mat m = c.eval(s0, t0);
    std::vector<Rat> p(m.cols(), Rat(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) p[j] += coeffs[i] * m.at(i, j);
    return p;
}

} // namespace

TEST_CASE("characteristic pair on the two-lines family") {
    Chart c = two_lines_chart();
    Rat s0 = rat(5, 2), t0 = rat(-3);
    // moving along the pencil (s varies) fixes the point on the second line,
    // so the focal direction pair vanishes exactly at the first line's point
    CharPair along_s = characteristic_pair(c, s0, t0, rat(1), rat(0));
    CHECK(!along_s.degenerate());
    // x = (1, 0) realizes (1, t0, 0, 0)
    CHECK(is_zero(along_s.f1[0] * 1 + along_s.f1[1] * 0));
    CHECK(is_zero(along_s.f2[0] * 1 + along_s.f2[1] * 0));
    bool vanishes_at_other =
        is_zero(along_s.f1[1]) && is_zero(along_s.f2[1]);
    CHECK(!vanishes_at_other);

    CharPair along_t = characteristic_pair(c, s0, t0, rat(0), rat(1));
    CHECK(is_zero(along_t.f1[1]));
    CHECK(is_zero(along_t.f2[1]));
}

TEST_CASE("direction with no motion gives the zero pair") {
    Chart c;
    c.r = 1;
    c.N = 3;
    BiPoly s = BiPoly::var_s();
    c.rows = {
        {BiPoly::constant(rat(1)), s, BiPoly::zero(), BiPoly::zero()},
        {BiPoly::zero(), BiPoly::zero(), BiPoly::constant(rat(1)), s + BiPoly::constant(rat(1))},
    };
    CharPair p = characteristic_pair(c, rat(2), rat(7), rat(0), rat(1));
    CHECK(p.degenerate());
}

TEST_CASE("focal quadric of the chord family vanishes at the contact points") {
    Chart secant = case1(1);
    // (s, t) = (1, 0) is the chord through nu(0) and nu(1)
    FocalQuadric q = focal_quadric(secant, rat(1), rat(0));
    CHECK(quadric_rank(q) == 2);
    CHECK(is_zero(quadric_value_at_ambient(q, {Rat(1), Rat(0), Rat(0), Rat(0)})));
    CHECK(is_zero(quadric_value_at_ambient(q, {Rat(1), Rat(1), Rat(1), Rat(1)})));
    // a third point of the chord is not focal
    CHECK(!is_zero(quadric_value_at_ambient(q, {Rat(3), Rat(1), Rat(1), Rat(1)})));
}

TEST_CASE("two-lines family splits into the two trace points") {
    Chart c = two_lines_chart();
    Rat s0 = rat(1, 3), t0 = rat(4);
    FocalQuadric q = focal_quadric(c, s0, t0);
    CHECK(quadric_rank(q) == 2);
    QuadricSplit sp = split_quadric(q);
    CHECK(sp.kind == SplitKind::two_hyperplanes);
    REQUIRE(sp.components.size() == 2);
    std::vector<std::vector<Rat>> pts;
    for (const auto& cov : sp.components)
        pts.push_back(realize_fiber_hyperplane(q, cov).basis().row(0));
    Subspace first = Subspace::span(3, Mat::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}}));
    Subspace second = Subspace::span(3, Mat::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}}));
    int on_first = 0, on_second = 0;
    for (const auto& p : pts) {
        if (first.contains_point(p)) ++on_first;
        if (second.contains_point(p)) ++on_second;
    }
    CHECK(on_first == 1);
    CHECK(on_second == 1);
}

TEST_CASE("cone family has a double hyperplane along the fixed plane") {
    auto d = case3(3);
    Sampler smp(21, 300);
    for (int i = 0; i < 5; ++i) {
        FocalQuadric q = focal_quadric(d.chart, smp.rand_rat(), smp.rand_rat());
        CHECK(quadric_rank(q) == 1);
        QuadricSplit sp = split_quadric(q);
        CHECK(sp.kind == SplitKind::double_hyperplane);
        Subspace h = realize_fiber_hyperplane(q, sp.components[0]);
        CHECK(d.plane.contains(h));
        // and it equals the trace of the fiber on the plane
        Subspace fiber = eval_chart(d.chart, q.s0, q.t0);
        auto trace = meet(fiber, d.plane);
        REQUIRE(trace);
        CHECK(*trace == h);
    }
}

TEST_CASE("directional loci of the cone family live on the plane trace") {
    auto d = case3(2);
    Sampler smp(29, 150);
    Rat s0 = rat(3, 4), t0 = rat(-2);
    Subspace fiber = eval_chart(d.chart, s0, t0);
    auto trace = meet(fiber, d.plane);
    REQUIRE(trace);
    Mat m = d.chart.eval(s0, t0);
    int nontrivial = 0;
    for (int trial = 0; trial < 8; ++trial) {
        Rat a = smp.rand_rat(20), b = smp.rand_rat(20);
        if (is_zero(a) && is_zero(b)) continue;
        CharPair pr = characteristic_pair(d.chart, s0, t0, a, b);
        if (pr.degenerate()) continue;
        Mat forms(2, d.chart.r + 1);
        forms.set_row(0, pr.f1);
        forms.set_row(1, pr.f2);
        Mat ker = kernel_basis(forms);
        for (int i = 0; i < ker.rows(); ++i) {
            std::vector<Rat> p(m.cols(), Rat(0));
            for (int k = 0; k < m.rows(); ++k)
                for (int j = 0; j < m.cols(); ++j) p[j] += ker.at(i, k) * m.at(k, j);
            CHECK(trace->contains_point(p));
            ++nontrivial;
        }
    }
    CHECK(nontrivial > 0);
    // the pencil direction is developable: its locus is the whole trace
    CharPair pencil_dir = characteristic_pair(d.chart, s0, t0, rat(1), rat(0));
    REQUIRE(!pencil_dir.degenerate());
    Mat forms(2, d.chart.r + 1);
    forms.set_row(0, pencil_dir.f1);
    forms.set_row(1, pencil_dir.f2);
    Mat ker = kernel_basis(forms);
    Mat pts = ker.mul(m);
    CHECK(Subspace::span(d.chart.N, pts) == *trace);
}

TEST_CASE("plane-family quadric is an irreducible conic") {
    Chart c = case1(2);
    Sampler smp(22, 300);
    FocalQuadric q = focal_quadric(c, smp.rand_rat(), smp.rand_rat());
    CHECK(quadric_rank(q) == 3);
    CHECK(split_quadric(q).kind == SplitKind::irreducible);
}

TEST_CASE("quadric rank stays within the structural bound on catalog charts") {
    Sampler smp(23, 200);
    std::vector<Chart> charts = {case1(1), case1(2), case1(3), case2_nodal().chart,
                                 case2_normal(3, 0).chart, case3(3).chart};
    for (const auto& c : charts) {
        int done = 0;
        for (int i = 0; i < 60 && done < 20; ++i) {
            try {
                FocalQuadric q = focal_quadric(c, smp.rand_rat(), smp.rand_rat());
                CHECK(quadric_rank(q) <= 4);
                ++done;
            } catch (const BasePointError&) {
            } catch (const GenericityFailure&) {
            }
        }
        CHECK(done == 20);
    }
}

TEST_CASE("focal quadric is stable under chart reparametrization") {
    Chart secant = case1(1);
    FocalQuadric q1 = focal_quadric(secant, rat(1), rat(0));
    // (s, t) = (a s' + b, c t' + d) maps (s', t') = (-1, 2) to (1, 0)
    Chart re = secant.reparametrized(rat(3), rat(4), rat(-2), rat(4));
    FocalQuadric q2 = focal_quadric(re, rat(-1), rat(2));
    CHECK(q1.gram == q2.gram); // both normalized to leading entry 1
}

TEST_CASE("directional focal loci lie on the focal quadric") {
    Chart c = case1(2);
    Sampler smp(24, 150);
    Rat s0 = rat(2, 3), t0 = rat(-1, 2);
    FocalQuadric q = focal_quadric(c, s0, t0);
    for (int trial = 0; trial < 10; ++trial) {
        Rat a = smp.rand_rat(20), b = smp.rand_rat(20);
        if (is_zero(a) && is_zero(b)) continue;
        CharPair pr = characteristic_pair(c, s0, t0, a, b);
        if (pr.degenerate()) continue;
        Mat forms(2, c.r + 1);
        forms.set_row(0, pr.f1);
        forms.set_row(1, pr.f2);
        Mat ker = kernel_basis(forms);
        for (int i = 0; i < ker.rows(); ++i) {
            Rat acc(0);
            for (int u = 0; u <= c.r; ++u)
                for (int v = 0; v <= c.r; ++v)
                    acc += ker.at(i, u) * q.gram.at(u, v) * ker.at(i, v);
            CHECK(is_zero(acc));
        }
    }
}

TEST_CASE("fundamental points of the chord family are the curve points") {
    Chart secant = case1(1);
    for (long u : {0, 1, -2, 5}) {
        Rat uu = rat(u);
        CHECK(is_fundamental(secant, {Rat(1), uu, uu * uu, uu * uu * uu}));
    }
    Sampler smp(25, 400);
    for (int i = 0; i < 10; ++i) CHECK(!is_fundamental(secant, smp.rand_vector(4)));
}

TEST_CASE("every point of the cone plane is fundamental") {
    auto d = case3(2);
    Sampler smp(26, 200);
    for (int i = 0; i < 5; ++i) {
        std::vector<Rat> p(d.chart.N + 1, Rat(0));
        std::vector<Rat> co = smp.rand_vector(d.plane.basis().rows());
        for (int r = 0; r < d.plane.basis().rows(); ++r)
            for (int jc = 0; jc <= d.chart.N; ++jc) p[jc] += co[r] * d.plane.basis().at(r, jc);
        bool nonzero = false;
        for (const auto& x : p)
            if (!is_zero(x)) nonzero = true;
        if (!nonzero) continue;
        CHECK(is_fundamental(d.chart, p));
    }
}

TEST_CASE("on a fiber, fundamental points are exactly the quadric zeros") {
    Chart c = two_lines_chart();
    Rat s0 = rat(2), t0 = rat(-1);
    FocalQuadric q = focal_quadric(c, s0, t0);
    for (long num = -3; num <= 3; ++num)
        for (long den = 1; den <= 2; ++den) {
            // walk the fiber line through x = (1, lambda) and x = (0, 1)
            std::vector<Rat> coords = {Rat(1), rat(num, den)};
            auto p = fiber_point(c, s0, t0, coords);
            CHECK(is_fundamental(c, p) == is_zero(quadric_value_at_ambient(q, p)));
        }
    auto pinf = fiber_point(c, s0, t0, {Rat(0), Rat(1)});
    CHECK(is_fundamental(c, pinf) == is_zero(quadric_value_at_ambient(q, pinf)));
}

TEST_CASE("focal samples land on the focal locus and are fundamental") {
    Sampler smp(27, 300);
    {
        Chart secant = case1(1);
        auto samples = focal_samples(secant, 8, smp);
        REQUIRE(int(samples.size()) == 8);
        std::vector<std::vector<UPoly>> cubic(1, std::vector<UPoly>(4));
        for (int j = 0; j < 4; ++j) cubic[0][j] = UPoly::monomial(Rat(1), j);
        for (const auto& s : samples) {
            CHECK(point_on_parametrized_family(cubic, s.point));
            CHECK(is_fundamental(secant, s.point));
        }
    }
    {
        auto d = case2_nodal();
        auto samples = focal_samples(d.chart, 8, smp);
        REQUIRE(int(samples.size()) == 8);
        for (const auto& s : samples) {
            bool ok = d.plane.contains_point(s.point) ||
                      point_on_parametrized_family(d.generators, s.point);
            CHECK(ok);
            CHECK(is_fundamental(d.chart, s.point));
        }
    }
}

TEST_CASE("focal locus of a section is the sectioned focal locus") {
    Config cfg;
    Sampler smp(28, 500);
    ScrollSpec sp;
    sp.parts = {1, 2};
    auto d = case2_scroll(sp, smp);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Mat L = smp.rand_matrix(4, 5);
        if (rank(L) != 4) continue;
        Subspace Ls = Subspace::span(4, L);
        Chart sec;
        try {
            sec = section(d.chart, Ls, smp);
        } catch (const NonGenericSection&) {
            continue;
        }
        auto samples = focal_samples(sec, 6, smp);
        REQUIRE(!samples.empty());
        for (const auto& s : samples) {
            std::vector<Rat> lift(5, Rat(0));
            for (size_t k = 0; k < s.point.size(); ++k)
                for (int j = 0; j < 5; ++j) lift[j] += s.point[k] * Ls.basis().at(int(k), j);
            bool ok = d.plane.contains_point(lift) ||
                      point_on_parametrized_family(d.generators, lift);
            CHECK(ok);
        }
        return;
    }
    FAIL("no generic section subspace found");
    (void)cfg;
}
