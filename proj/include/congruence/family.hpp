#ifndef CONGRUENCE_FAMILY_HPP
#define CONGRUENCE_FAMILY_HPP

#include <optional>

#include "congruence/chart.hpp"
#include "congruence/errors.hpp"
#include "congruence/solve.hpp"

namespace congruence {

struct Config {
    unsigned long long seed = 1729;
    long rational_height_bound = 10000;
    int retry_limit = 6;
};

struct Bidegree {
    long long order = 0;
    long long class_ = 0;
    bool operator==(const Bidegree&) const = default;
};

// Number of fibers through a generic point, counted with multiplicity over
// the completed parameter space. Every randomized answer is drawn twice and
// must agree. Throws DegenerateCongruence when no draw produces a finite
// positive count, GenericityFailure when draws keep disagreeing.
long long order(const Chart& c, Sampler& smp, const Config& cfg);

// Number of fibers meeting a generic plane in at least a line.
long long class_(const Chart& c, Sampler& smp, const Config& cfg);

Bidegree bidegree(const Chart& c, Sampler& smp, const Config& cfg);

// Degree of the image surface under the Plucker embedding; requires a
// birational chart (spot-checked by counting preimages of one random fiber).
long long plucker_degree(const Chart& c, Sampler& smp, const Config& cfg);

bool is_degenerate(const Chart& c, Sampler& smp, const Config& cfg);

// Chart of the sectioned family (s, t) -> fiber ∩ L, re-coordinatized inside
// L. L must be an (l+2)-dimensional subspace, 1 <= l < r, generic for c.
Chart section(const Chart& c, const Subspace& L, Sampler& smp);

// Draws generic subspaces until section succeeds.
Chart section_random(const Chart& c, int l, Sampler& smp, const Config& cfg);

// Largest subspace contained in every fiber, or nullopt. The sampled
// candidate is certified by polynomial identities before being returned.
std::optional<Subspace> fixed_locus(const Chart& c, Sampler& smp);

// Joins every fiber with T inside P^(r+2), r = k + dim T + 1. T empty gives
// the chart back unchanged.
Chart cone_embed(const Chart& c, const std::optional<Subspace>& T);

// Exposed for the focal/classify layers: counts (s, t) parameters whose fiber
// is contained in the given subspace, over the completed parameter space.
long long containment_count(const Chart& c, const Subspace& target, bool* positive_dimensional);

} // namespace congruence

#endif
