#ifndef CONGRUENCE_CLASSIFY_HPP
#define CONGRUENCE_CLASSIFY_HPP

#include <string>
#include <vector>

#include "congruence/focal.hpp"

namespace congruence {

enum class CaseTag { I, II, III, plane_pencil };
enum class SmoothVerdict { smooth, singular, undetermined };

std::string case_tag_name(CaseTag t);
std::string smooth_name(SmoothVerdict v);

struct Report {
    long long order = 0;
    long long class_ = 0;
    int fixed_dim = -1;
    CaseTag case_tag = CaseTag::I;
    int generic_quadric_rank = 0;
    std::string split_outcome;
    SmoothVerdict smooth = SmoothVerdict::undetermined;
    std::vector<std::string> diagnostics;
};

std::string report_to_json(const Report& rep);

// Rows of the generator family G(t): the intersection of two members of the
// same pencil, taken from the s-free chart rows when those already form it.
std::vector<std::vector<UPoly>> generator_family(const Chart& c, Sampler& smp);

// Number of base-curve parameters (with multiplicity, infinity included)
// whose generator lies inside the plane.
long long generators_in_plane(const Chart& c, const Subspace& plane, Sampler& smp);

// Fixed r-planes spanned by matching linear focal components across sampled
// parameters. Usually a single plane; two for the line-pair family.
std::vector<Subspace> recover_focal_plane_candidates(const Chart& c, Sampler& smp);

// The fixed plane spanned by the linear focal components across parameters.
Subspace recover_focal_plane(const Chart& c, Sampler& smp);

Report classify(const Chart& c, Sampler& smp, const Config& cfg, bool jacobian_check = false);

} // namespace congruence

#endif
