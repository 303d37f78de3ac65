#ifndef CONGRUENCE_LINALG_HPP
#define CONGRUENCE_LINALG_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "congruence/rat.hpp"

namespace congruence {

// Dense exact rational matrix, row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}
    static Mat identity(int n);
    static Mat from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static Mat from_rat_rows(const std::vector<std::vector<Rat>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    std::vector<Rat> row(int i) const;
    void set_row(int i, const std::vector<Rat>& r);

    Mat transpose() const;
    Mat mul(const Mat& other) const;
    Mat stack(const Mat& below) const;
    Mat select_columns(const std::vector<int>& cols) const;
    Mat select_rows(const std::vector<int>& idx) const;

    bool operator==(const Mat& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Fraction-free rank over the integers after clearing row denominators.
int rank(const Mat& m);

Rat det(const Mat& m);

// Reduced row echelon form; pivot column indices reported in order.
Mat rref(const Mat& m, std::vector<int>* pivot_cols = nullptr);

// Row basis of the right kernel {v : m v = 0}; one row per kernel vector.
Mat kernel_basis(const Mat& m);

// Row basis of the left kernel {x : x m = 0}.
Mat left_kernel(const Mat& m);

Mat inverse(const Mat& m);

// A projective subspace of P^N spanned by the rows of a full-rank matrix,
// stored in RREF so equality is a syntactic check.
class Subspace {
public:
    // rows span the subspace; redundant rows are dropped. All-zero span is invalid.
    static Subspace span(int ambient_dim, const Mat& rows);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows() - 1; }
    const Mat& basis() const { return basis_; }

    bool contains_point(const std::vector<Rat>& p) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

private:
    Subspace(int ambient, Mat reduced) : ambient_(ambient), basis_(std::move(reduced)) {}
    int ambient_;
    Mat basis_;
};

// Projective intersection of row spaces; empty when dim(a ∩ b) = -1.
std::optional<Subspace> meet(const Subspace& a, const Subspace& b);

Subspace join(const Subspace& a, const Subspace& b);

// All (k+1)x(k+1) minors of the spanning matrix, lexicographic column-subset
// order, scaled so the first nonzero coordinate is 1.
std::vector<Rat> plucker_embed(const Subspace& s);

} // namespace congruence

#endif
