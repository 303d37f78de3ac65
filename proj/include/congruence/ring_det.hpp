#ifndef CONGRUENCE_RING_DET_HPP
#define CONGRUENCE_RING_DET_HPP

#include <cstddef>
#include <vector>

#include "congruence/rat.hpp"

namespace congruence {

// Ring operations used by the fraction-free routines. Specialized for Rat
// here and for the polynomial types in their own headers.
template <class T>
struct RingOps;

template <>
struct RingOps<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& x) { return sgn(x) == 0; }
    static Rat divexact(const Rat& a, const Rat& b) { return Rat(a / b); }
    static size_t size_hint(const Rat& x) {
        return mpz_sizeinbase(x.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
    }
};

// Bareiss fraction-free determinant. Works over any integral domain with
// exact division; all intermediate divisions are exact by construction.
template <class T>
T det_bareiss(std::vector<std::vector<T>> m) {
    using R = RingOps<T>;
    const size_t n = m.size();
    if (n == 0) return R::one();
    bool negate = false;
    T prev = R::one();
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = n;
        size_t best = 0;
        for (size_t i = k; i < n; ++i) {
            if (R::is_zero(m[i][k])) continue;
            size_t h = R::size_hint(m[i][k]);
            if (pivot == n || h < best) { pivot = i; best = h; }
        }
        if (pivot == n) return R::zero();
        if (pivot != k) { std::swap(m[pivot], m[k]); negate = !negate; }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                T num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = R::divexact(num, prev);
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k];
    }
    T d = m[n - 1][n - 1];
    if (negate) d = R::zero() - d;
    return d;
}

// Lexicographically ordered k-subsets of {0,...,n-1}.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace congruence

#endif
