#ifndef CONGRUENCE_ERRORS_HPP
#define CONGRUENCE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace congruence {

// Realization of the family has dimension < r+2 (no finite incidence count exists).
struct DegenerateCongruence : std::runtime_error {
    explicit DegenerateCongruence(const std::string& what) : std::runtime_error(what) {}
};

// Randomized draws kept disagreeing within the retry budget.
struct GenericityFailure : std::runtime_error {
    explicit GenericityFailure(const std::string& what) : std::runtime_error(what) {}
};

// Chart evaluated at a parameter where its rows drop rank.
struct BasePointError : std::runtime_error {
    explicit BasePointError(const std::string& what) : std::runtime_error(what) {}
};

// Section subspace failed the genericity validation; caller should redraw.
struct NonGenericSection : std::runtime_error {
    explicit NonGenericSection(const std::string& what) : std::runtime_error(what) {}
};

} // namespace congruence

#endif
