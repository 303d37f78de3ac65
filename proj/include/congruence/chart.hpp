#ifndef CONGRUENCE_CHART_HPP
#define CONGRUENCE_CHART_HPP

#include <random>
#include <string>
#include <vector>

#include "congruence/bipoly.hpp"
#include "congruence/linalg.hpp"

namespace congruence {

// Two-parameter family of r-planes in P^N: the rows span the fiber at (s, t).
struct Chart {
    int r = 0;
    int N = 0;
    std::vector<std::vector<BiPoly>> rows; // (r+1) x (N+1)
    bool declared_birational = false;

    Mat eval(const Rat& s0, const Rat& t0) const;

    // Row-wise cleared substitution s -> 1/s and/or t -> 1/t; evaluating the
    // result at 0 gives the limit fibers at parameter infinity.
    Chart swapped(bool in_s, bool in_t) const;

    // Substitute s -> a s + b, t -> c t + d (a, c nonzero).
    Chart reparametrized(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const;
    // Left-multiply the row matrix by an invertible constant matrix.
    Chart row_transformed(const Mat& g) const;
    // Right-multiply by an invertible (N+1)x(N+1) matrix (coordinate change).
    Chart coordinate_transformed(const Mat& g) const;

    std::string to_json() const;
    static Chart from_json(const std::string& text);
};

// Fiber as a subspace; throws BasePointError where the rows drop rank.
Subspace eval_chart(const Chart& c, const Rat& s0, const Rat& t0);

// Seeded source of height-bounded rationals. Passed explicitly everywhere.
class Sampler {
public:
    explicit Sampler(unsigned long long seed, long height = 10000)
        : gen_(seed), height_(height < 2 ? 2 : height) {}

    long height() const { return height_; }
    Rat rand_rat();
    Rat rand_rat(long height);
    long rand_int(long lo, long hi);
    std::vector<Rat> rand_vector(int len);
    Mat rand_matrix(int rows, int cols);

private:
    std::mt19937_64 gen_;
    long height_;
};

// Determinants of all maximal square submatrices, subset order lexicographic
// (column subsets when rows <= cols, row subsets otherwise).
std::vector<BiPoly> maximal_minors(const std::vector<std::vector<BiPoly>>& m);
std::vector<UPoly> maximal_minors_u(const std::vector<std::vector<UPoly>>& m);

// All (r+1)x(r+1) minors of the chart rows: simultaneous vanishing marks the
// chart's rank-drop parameters.
std::vector<BiPoly> chart_rank_minors(const Chart& c);

// Plucker coordinate vector of the chart rows, common factor removed.
std::vector<BiPoly> chart_plucker(const Chart& c);

} // namespace congruence

#endif
