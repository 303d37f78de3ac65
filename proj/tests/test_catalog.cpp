#include <doctest.h>

#include "congruence/catalog.hpp"
#include "congruence/classify.hpp"

using namespace congruence;

TEST_CASE("every catalog constructor has order one") {
    Config cfg;
    Sampler smp(201, 1500);
    std::vector<Chart> charts = {pencil_plane_default(1), case1(1), case1(2),
                                 case2_nodal().chart,     case3(1).chart, case3(3).chart,
                                 case2_normal(2, 1).chart};
    ScrollSpec one, two;
    one.parts = {1};
    two.parts = {2};
    charts.push_back(case2_scroll(one, smp).chart);
    charts.push_back(case2_scroll(two, smp).chart);
    for (const auto& c : charts) CHECK(order(c, smp, cfg) == 1);
}

TEST_CASE("scroll class equals the sum of the parts") {
    Config cfg;
    Sampler smp(202, 1500);
    for (auto parts : std::vector<std::vector<int>>{{1}, {2}, {1, 2}, {1, 1}, {2, 2}}) {
        ScrollSpec sp;
        sp.parts = parts;
        auto d = case2_scroll(sp, smp);
        int n = 0;
        for (int p : parts) n += p;
        CHECK(class_(d.chart, smp, cfg) == n);
    }
}

TEST_CASE("chord family of the twisted cubic through the scroll machinery") {
    Config cfg;
    Sampler smp(210, 1500);
    ScrollSpec sp;
    sp.parts = {3};
    auto d = case2_scroll(sp, smp);
    CHECK(bidegree(d.chart, smp, cfg) == Bidegree{1, 3});
    // the pencil line is a chord: two curve parameters land inside it
    CHECK(generators_in_plane(d.chart, d.plane, smp) == 2);
    CHECK(classify(d.chart, smp, cfg).smooth == SmoothVerdict::singular);
}

TEST_CASE("cone family class and degree") {
    Config cfg;
    Sampler smp(203, 1500);
    for (int n : {1, 2, 3}) {
        auto d = case3(n);
        CHECK(class_(d.chart, smp, cfg) == n);
        CHECK(plucker_degree(d.chart, smp, cfg) == n + 1);
    }
}

TEST_CASE("normal models accept exactly the admissible invariants") {
    CHECK_THROWS_AS((void)case2_normal(3, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)case2_normal(2, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)case2_normal(0, 0), std::invalid_argument);
    CHECK(case2_normal(4, 1).chart.r == 4);
}

TEST_CASE("pencil-plane construction validates its inputs") {
    Mat base(1, 4);
    base.at(0, 0) = 1;
    Mat mov(3, 4);
    mov.at(0, 0) = 1; // meets the base
    mov.at(1, 1) = 1;
    mov.at(2, 2) = 1;
    CHECK_THROWS_AS(
        (void)pencil_plane(1, Subspace::span(3, base), Subspace::span(3, mov)),
        std::invalid_argument);
    Chart ok = pencil_plane_default(3);
    CHECK(ok.r == 3);
    CHECK(ok.N == 5);
}

TEST_CASE("each scroll generator lies in exactly one pencil") {
    Sampler smp(204, 900);
    ScrollSpec sp;
    sp.parts = {1, 2};
    auto d = case2_scroll(sp, smp);
    Rat t0 = rat(3);
    // containment conditions of the generator at t0 inside the moving fiber
    std::vector<std::vector<BiPoly>> grows;
    for (const auto& g : d.generators) {
        std::vector<BiPoly> row;
        for (const auto& e : g) row.push_back(BiPoly::constant(e.eval(t0)));
        grows.push_back(std::move(row));
    }
    BiPoly gcd_all;
    for (const auto& grow : grows) {
        std::vector<std::vector<BiPoly>> stacked = d.chart.rows;
        stacked.push_back(grow);
        for (const auto& m : maximal_minors(stacked)) {
            if (m.is_zero()) continue;
            gcd_all = gcd_all.is_zero() ? m.normalized() : bigcd(gcd_all, m);
        }
    }
    REQUIRE(!gcd_all.is_zero());
    // exactly the pencil line t = t0
    CHECK(gcd_all.degs() == 0);
    CHECK(gcd_all.degt() == 1);
    CHECK(is_zero(gcd_all.eval(Rat(0), t0)));
}

TEST_CASE("case II and III fibers meet the plane in a hyperplane of the fiber") {
    Sampler smp(205, 700);
    ScrollSpec sp;
    sp.parts = {1, 2};
    auto scroll = case2_scroll(sp, smp);
    auto cone = case3(3);
    auto normal = case2_normal(3, 0);
    struct Item {
        const Chart* c;
        const Subspace* plane;
    };
    for (Item it : {Item{&scroll.chart, &scroll.plane}, Item{&cone.chart, &cone.plane},
                    Item{&normal.chart, &normal.plane}}) {
        for (int i = 0; i < 5; ++i) {
            Subspace fiber = eval_chart(*it.c, smp.rand_rat(100), smp.rand_rat(100));
            auto m = meet(fiber, *it.plane);
            REQUIRE(m);
            CHECK(m->dim() >= it.c->r - 1);
        }
    }
}

TEST_CASE("fixed-point-free case II and III charts satisfy the class bound") {
    Config cfg;
    Sampler smp(206, 1200);
    struct Item {
        Chart chart;
        int r;
    };
    std::vector<Item> items;
    items.push_back({case2_normal(3, 0).chart, 3});
    items.push_back({case2_normal(2, 1).chart, 2});
    items.push_back({case3(2).chart, 2});
    items.push_back({case3(3).chart, 3});
    ScrollSpec sp;
    sp.parts = {1, 2};
    items.push_back({case2_scroll(sp, smp).chart, 2});
    for (const auto& it : items) {
        CHECK(!fixed_locus(it.chart, smp));
        CHECK(class_(it.chart, smp, cfg) >= it.r);
    }
}

TEST_CASE("case3 sections keep the class") {
    Config cfg;
    Sampler smp(207, 900);
    Chart c21 = case3_section(2, 1, smp, cfg);
    CHECK(bidegree(c21, smp, cfg) == Bidegree{1, 2});
    Chart c22 = case3_section(2, 2, smp, cfg);
    CHECK(c22.rows == case3(2).chart.rows);
}

TEST_CASE("nodal family data") {
    Config cfg;
    Sampler smp(208, 900);
    auto d = case2_nodal();
    CHECK(bidegree(d.chart, smp, cfg) == Bidegree{1, 3});
    CHECK(plucker_degree(d.chart, smp, cfg) == 4);
    // the node lies on the pencil line
    CHECK(d.plane.contains_point({Rat(0), Rat(1), Rat(1), Rat(0)}));
    // and the curve passes through it twice
    CHECK(point_on_parametrized_family(d.generators, {Rat(0), Rat(1), Rat(1), Rat(0)}));
}

TEST_CASE("scroll constructor validates divisors and centers") {
    Sampler smp(209, 500);
    ScrollSpec bad;
    bad.parts = {1, 2};
    bad.divisor = {UPoly(), UPoly()};
    CHECK_THROWS_AS((void)case2_scroll(bad, smp), std::invalid_argument);
    ScrollSpec toolarge;
    toolarge.parts = {2};
    toolarge.divisor = {UPoly::from_longs({1, 2, 3})};
    CHECK_THROWS_AS((void)case2_scroll(toolarge, smp), std::invalid_argument);
    ScrollSpec meets;
    meets.parts = {1, 3};
    meets.divisor = {UPoly(), UPoly::from_longs({2, -3, 1})};
    Mat center(1, 6);
    center.at(0, 0) = 1; // a point of the scroll (on the first curve)
    center.at(0, 1) = 0;
    meets.center = center;
    CHECK_THROWS_AS((void)case2_scroll(meets, smp), std::invalid_argument);
}
