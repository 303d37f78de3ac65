#ifndef CONGRUENCE_SOLVE_HPP
#define CONGRUENCE_SOLVE_HPP

#include <vector>

#include "congruence/bipoly.hpp"

namespace congruence {

// Outcome of solving the system p = q = 0 in the affine (s, t) chart.
// Complex solutions are counted through degrees of squarefree factors over Q;
// no root is ever approximated numerically.
struct SolutionCount {
    bool finite = true;
    long long with_multiplicity = 0;
    long long distinct = 0;
};

// Counts affine common zeros of p and q that annihilate every validator.
// Positive-dimensional when either input is identically zero or the two
// share a common factor.
SolutionCount count_solutions(const BiPoly& p, const BiPoly& q,
                              const std::vector<BiPoly>& validators);

// Extended form: a solution is additionally discarded when, for some
// exclusion list, every polynomial in that list vanishes at it (used to
// strike rank-drop parameters of a chart out of incidence counts).
SolutionCount count_affine(const BiPoly& p, const BiPoly& q,
                           const std::vector<BiPoly>& validators,
                           const std::vector<std::vector<BiPoly>>& exclusions);

// Number of distinct roots (degree of the squarefree part) and degree with
// multiplicity of the valid part of a univariate gcd system: used for the
// parameter-at-infinity charts. conditions must all vanish; exclusion lists
// strike roots where a whole list vanishes.
struct UniCount {
    bool all_zero = false; // every condition identically zero
    long long with_multiplicity = 0;
    long long distinct = 0;
};
UniCount count_univariate_system(const std::vector<UPoly>& conditions,
                                 const std::vector<std::vector<UPoly>>& exclusions);

} // namespace congruence

#endif
