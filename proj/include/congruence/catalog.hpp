#ifndef CONGRUENCE_CATALOG_HPP
#define CONGRUENCE_CATALOG_HPP

#include <optional>

#include "congruence/family.hpp"

namespace congruence {

// Scroll-backed family: the projected scroll X, the plane the pencils sweep
// through, and the divisor of X cut out by that plane.
struct ScrollSpec {
    std::vector<int> parts;      // n_1, ..., n_r, each >= 1
    std::vector<UPoly> divisor;  // per part, degree <= n_i - 1; zero entries
                                 // allowed; empty vector selects the default
                                 // (distinct small roots, no common root)
    std::optional<Mat> center;   // explicit projection center rows (overrides
                                 // the seeded draw inside the divisor span)
};

struct Case2Data {
    Chart chart;
    Subspace plane;                             // the linear focal component
    std::vector<std::vector<UPoly>> generators; // generator rows G(t)
};

struct Case3Data {
    Chart chart;
    Subspace plane;
};

// Family of r-planes containing a fixed (r-1)-plane; the moving point sweeps
// a complementary 2-plane.
Chart pencil_plane(int r, const Subspace& base, const Subspace& moving_plane);
Chart pencil_plane_default(int r);

// The three fixed-point-free families with irreducible cubic focal locus.
Chart case1(int r);

Case2Data case2_scroll(const ScrollSpec& spec, Sampler& smp);

// Plane nodal cubic with the pencil line through the node.
Case2Data case2_nodal();

// Linearly normal model in G(n, n+2) with ruled-surface invariant e.
Case2Data case2_normal(int n, int e);

// Cone family: pencils through the osculating-dual hyperplanes of a rational
// normal curve in the fixed plane.
Case3Data case3(int n);

Chart case3_section(int n, int r, Sampler& smp, const Config& cfg);

} // namespace congruence

#endif
