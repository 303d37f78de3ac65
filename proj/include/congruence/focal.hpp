#ifndef CONGRUENCE_FOCAL_HPP
#define CONGRUENCE_FOCAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "congruence/family.hpp"

namespace congruence {

// Images of a tangent direction under the characteristic map: two linear
// forms on the fiber, expressed as covectors in the coordinates of the
// evaluated chart rows.
struct CharPair {
    std::vector<Rat> f1, f2;
    bool degenerate() const;
};

struct FocalQuadric {
    int fiber_dim = 0;   // r
    Mat gram;            // symmetric (r+1)x(r+1), first nonzero entry 1
    Rat s0, t0;
    Mat fiber_rows;      // evaluated chart rows; fiber coords refer to these
};

enum class SplitKind { two_hyperplanes, double_hyperplane, irreducible, conjugate_pair };

struct QuadricSplit {
    SplitKind kind;
    // covectors (fiber coordinates) of the rational linear components
    std::vector<std::vector<Rat>> components;
};

std::string split_kind_name(SplitKind k);

CharPair characteristic_pair(const Chart& c, const Rat& s0, const Rat& t0, const Rat& dir_s,
                             const Rat& dir_t);

// Quadratic form cutting the focal locus out of the fiber at (s0, t0).
FocalQuadric focal_quadric(const Chart& c, const Rat& s0, const Rat& t0);

// rank of the gram matrix; values above 4 indicate an internal error.
int quadric_rank(const FocalQuadric& q);

QuadricSplit split_quadric(const FocalQuadric& q);

// Realization in P^(r+2) of the zero hyperplane of a fiber covector.
Subspace realize_fiber_hyperplane(const FocalQuadric& q, const std::vector<Rat>& covector);

// Evaluate the quadratic form at ambient point p (must lie on the fiber).
Rat quadric_value_at_ambient(const FocalQuadric& q, const std::vector<Rat>& p);

// True when a 1-dimensional family of fibers passes through the point.
bool is_fundamental(const Chart& c, const std::vector<Rat>& point);
bool is_fundamental(const Chart& c, const Subspace& point);

struct FocalSample {
    std::vector<Rat> point; // ambient coordinates
    Rat s0, t0;
};

// Rational points on focal quadric components at sampled parameters. Tries
// random parameters first, then a small deterministic grid; components with
// no rational point found within the search budget contribute nothing.
std::vector<FocalSample> focal_samples(const Chart& c, int k, Sampler& smp);

// Membership of a rational point in the closure of a one-parameter family of
// subspaces given by polynomial rows (parameter at infinity included).
bool point_on_parametrized_family(const std::vector<std::vector<UPoly>>& rows_t,
                                  const std::vector<Rat>& p);

} // namespace congruence

#endif
