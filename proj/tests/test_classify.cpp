#include <doctest.h>

#include <json.hpp>

#include "congruence/catalog.hpp"
#include "congruence/classify.hpp"

using namespace congruence;

TEST_CASE("catalog charts come back with their own tags") {
    Config cfg;
    Sampler smp(301, 1200);
    {
        Report r = classify(case1(1), smp, cfg);
        CHECK(r.case_tag == CaseTag::I);
        CHECK(r.class_ == 3);
        CHECK(r.fixed_dim == -1);
        CHECK(r.smooth == SmoothVerdict::smooth);
    }
    {
        Report r = classify(case1(2), smp, cfg);
        CHECK(r.case_tag == CaseTag::I);
        CHECK(r.class_ == 3);
        CHECK(r.generic_quadric_rank >= 3);
        CHECK(r.smooth == SmoothVerdict::smooth);
    }
    {
        Report r = classify(case2_nodal().chart, smp, cfg);
        CHECK(r.case_tag == CaseTag::II);
        CHECK(r.class_ == 3);
        CHECK(r.smooth == SmoothVerdict::singular);
    }
    {
        Report r = classify(case2_normal(3, 0).chart, smp, cfg);
        CHECK(r.case_tag == CaseTag::II);
        CHECK(r.class_ == 3);
        CHECK(r.smooth == SmoothVerdict::smooth);
    }
    {
        Report r = classify(case3(4).chart, smp, cfg);
        CHECK(r.case_tag == CaseTag::III);
        CHECK(r.class_ == 4);
        CHECK(r.smooth == SmoothVerdict::singular);
        CHECK(r.generic_quadric_rank == 1);
    }
    {
        Report r = classify(pencil_plane_default(1), smp, cfg);
        CHECK(r.case_tag == CaseTag::plane_pencil);
        CHECK(r.class_ == 0);
        CHECK(r.fixed_dim == 0);
        CHECK(r.smooth == SmoothVerdict::smooth);
    }
}

TEST_CASE("classification commutes with the cone embedding") {
    Config cfg;
    Sampler smp(302, 1000);
    ScrollSpec sp;
    sp.parts = {2};
    auto conic = case2_scroll(sp, smp);
    Report base = classify(conic.chart, smp, cfg);
    CHECK(base.case_tag == CaseTag::II);
    CHECK(base.fixed_dim == -1);

    Mat pt(1, 5);
    pt.at(0, 4) = 1;
    Chart cone = cone_embed(conic.chart, Subspace::span(4, pt));
    Report lifted = classify(cone, smp, cfg);
    CHECK(lifted.case_tag == base.case_tag);
    CHECK(lifted.class_ == base.class_);
    CHECK(lifted.fixed_dim == base.fixed_dim + 0 + 1);
    CHECK(lifted.smooth == base.smooth);

    Chart vcone = cone_embed(case1(1), Subspace::span(4, pt));
    Report vrep = classify(vcone, smp, cfg);
    CHECK(vrep.case_tag == CaseTag::I);
    CHECK(vrep.class_ == 3);
    CHECK(vrep.fixed_dim == 0);
    CHECK(vrep.smooth == SmoothVerdict::smooth);
}

TEST_CASE("generators_in_plane counts the trace of the scroll") {
    Sampler smp(303, 900);
    {
        ScrollSpec sp;
        sp.parts = {1};
        auto d = case2_scroll(sp, smp);
        CHECK(generators_in_plane(d.chart, d.plane, smp) == 0);
    }
    {
        ScrollSpec sp;
        sp.parts = {2};
        auto d = case2_scroll(sp, smp);
        CHECK(generators_in_plane(d.chart, d.plane, smp) == 1);
    }
    {
        auto d = case2_nodal();
        CHECK(generators_in_plane(d.chart, d.plane, smp) == 2);
    }
    {
        auto d = case2_normal(4, 1);
        CHECK(generators_in_plane(d.chart, d.plane, smp) == 0);
    }
}

TEST_CASE("recover_focal_plane finds the construction plane") {
    Sampler smp(304, 900);
    {
        auto d = case3(2);
        CHECK(recover_focal_plane(d.chart, smp) == d.plane);
    }
    {
        ScrollSpec sp;
        sp.parts = {2};
        auto d = case2_scroll(sp, smp);
        CHECK(recover_focal_plane(d.chart, smp) == d.plane);
    }
    {
        ScrollSpec sp;
        sp.parts = {1};
        auto d = case2_scroll(sp, smp);
        auto candidates = recover_focal_plane_candidates(d.chart, smp);
        CHECK(candidates.size() == 2); // both rulings are lines
    }
    CHECK_THROWS_AS((void)recover_focal_plane(case1(1), smp), GenericityFailure);
}

TEST_CASE("report serialization carries the stable field names") {
    Config cfg;
    Sampler smp(305, 900);
    Report rep = classify(case3(2).chart, smp, cfg);
    auto j = nlohmann::json::parse(report_to_json(rep));
    CHECK(j.at("order").get<long long>() == 1);
    CHECK(j.at("class").get<long long>() == 2);
    CHECK(j.at("case_tag").get<std::string>() == "III");
    CHECK(j.at("focal_summary").at("generic_rank").get<int>() == 1);
    CHECK(j.at("focal_summary").at("split").get<std::string>() == "double_hyperplane");
    CHECK(j.at("smooth").get<std::string>() == "singular");
    CHECK(j.at("fixed_dim").get<int>() == -1);
    CHECK(j.at("diagnostics").is_array());
}

TEST_CASE("order-one precondition is enforced") {
    Config cfg;
    Sampler smp(306, 900);
    // chords of a plane conic are degenerate; classification refuses them
    Chart bad;
    bad.r = 1;
    bad.N = 3;
    BiPoly s = BiPoly::var_s(), t = BiPoly::var_t();
    bad.rows = {
        {BiPoly::constant(rat(1)), s, s * s, BiPoly::zero()},
        {BiPoly::constant(rat(1)), t, t * t, BiPoly::zero()},
    };
    CHECK_THROWS_AS((void)classify(bad, smp, cfg), DegenerateCongruence);

    // lines joining two disjoint conics form an order-four family: the
    // engine counts it and the classifier rejects it
    Chart quartic;
    quartic.r = 1;
    quartic.N = 3;
    quartic.declared_birational = true;
    quartic.rows = {
        {BiPoly::constant(rat(1)), s, s * s, BiPoly::zero()},
        {BiPoly::zero(), BiPoly::constant(rat(1)), t, t * t},
    };
    CHECK(order(quartic, smp, cfg) == 4);
    CHECK(class_(quartic, smp, cfg) == 4);
    CHECK(plucker_degree(quartic, smp, cfg) == 8);
    CHECK_THROWS_AS((void)classify(quartic, smp, cfg), std::invalid_argument);
}

TEST_CASE("sections of the cone family stay in the cone case") {
    Config cfg;
    Sampler smp(309, 900);
    Chart c = case3_section(3, 1, smp, cfg);
    Report rep = classify(c, smp, cfg);
    CHECK(rep.case_tag == CaseTag::III);
    CHECK(rep.class_ == 3);
    CHECK(rep.smooth == SmoothVerdict::singular);
}

TEST_CASE("smoothness thresholds across the catalog") {
    Config cfg;
    Sampler smp(307, 1200);
    // same class, opposite verdicts
    CHECK(classify(case1(1), smp, cfg).smooth == SmoothVerdict::smooth);          // (1,3)
    CHECK(classify(case2_nodal().chart, smp, cfg).smooth == SmoothVerdict::singular); // (1,3)
    // class n = r and n = r+1 ruled models are smooth
    CHECK(classify(case2_normal(2, 1).chart, smp, cfg).smooth == SmoothVerdict::smooth);
    CHECK(classify(case2_normal(3, 2).chart, smp, cfg).smooth == SmoothVerdict::smooth);
    // cones of class at least two are singular; the class-one member passes
    // as the smooth quadric
    CHECK(classify(case3(2).chart, smp, cfg).smooth == SmoothVerdict::singular);
    Report quadric = classify(case3(1).chart, smp, cfg);
    CHECK(quadric.class_ == 1);
    CHECK(quadric.smooth == SmoothVerdict::smooth);
}

TEST_CASE("largest catalog members classify end to end") {
    Config cfg;
    Sampler smp(310, 1500);
    Report big = classify(case2_normal(5, 0).chart, smp, cfg);
    CHECK(big.case_tag == CaseTag::II);
    CHECK(big.class_ == 5);
    CHECK(big.smooth == SmoothVerdict::smooth);
    Report cone = classify(case3(5).chart, smp, cfg);
    CHECK(cone.case_tag == CaseTag::III);
    CHECK(cone.class_ == 5);
    CHECK(cone.smooth == SmoothVerdict::singular);
}

TEST_CASE("iterated cone embeddings stack the fixed dimension") {
    Config cfg;
    Sampler smp(311, 1000);
    ScrollSpec sp;
    sp.parts = {1};
    Chart skew = case2_scroll(sp, smp).chart;
    Mat p1(1, 5);
    p1.at(0, 4) = 1;
    Chart cone1 = cone_embed(skew, Subspace::span(4, p1));
    Mat p2(1, 6);
    p2.at(0, 5) = 1;
    Chart cone2 = cone_embed(cone1, Subspace::span(5, p2));
    Report r = classify(cone2, smp, cfg);
    CHECK(r.case_tag == CaseTag::II);
    CHECK(r.class_ == 1);
    CHECK(r.fixed_dim == 1);
    CHECK(r.smooth == SmoothVerdict::smooth);
}

TEST_CASE("jacobian cross-check reports no failures on a smooth model") {
    Config cfg;
    Sampler smp(308, 500);
    Report rep = classify(case1(1), smp, cfg, true);
    bool found = false;
    for (const auto& d : rep.diagnostics)
        if (d.find("jacobian immersion failures: 0/") != std::string::npos) found = true;
    CHECK(found);
}
