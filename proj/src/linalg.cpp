#include "congruence/linalg.hpp"

#include <stdexcept>

#include "congruence/ring_det.hpp"

namespace congruence {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    int r = int(rows.size());
    int c = r == 0 ? 0 : int(rows.begin()->size());
    Mat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (int(row.size()) != c) throw std::invalid_argument("ragged matrix literal");
        int j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

Mat Mat::from_rat_rows(const std::vector<std::vector<Rat>>& rows) {
    int r = int(rows.size());
    int c = r == 0 ? 0 : int(rows.front().size());
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rat> Mat::row(int i) const {
    std::vector<Rat> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

void Mat::set_row(int i, const std::vector<Rat>& r) {
    if (int(r.size()) != cols_) throw std::invalid_argument("row length mismatch");
    for (int j = 0; j < cols_; ++j) at(i, j) = r[j];
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::mul(const Mat& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat p(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (is_zero(at(i, k))) continue;
            for (int j = 0; j < other.cols_; ++j)
                p.at(i, j) += at(i, k) * other.at(k, j);
        }
    return p;
}

Mat Mat::stack(const Mat& below) const {
    if (cols_ != below.cols_) throw std::invalid_argument("stack width mismatch");
    Mat s(rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) s.at(i, j) = at(i, j);
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) s.at(rows_ + i, j) = below.at(i, j);
    return s;
}

Mat Mat::select_columns(const std::vector<int>& cols) const {
    Mat s(rows_, int(cols.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols.size(); ++j) s.at(i, int(j)) = at(i, cols[j]);
    return s;
}

Mat Mat::select_rows(const std::vector<int>& idx) const {
    Mat s(int(idx.size()), cols_);
    for (size_t i = 0; i < idx.size(); ++i)
        for (int j = 0; j < cols_; ++j) s.at(int(i), j) = at(idx[i], j);
    return s;
}

int rank(const Mat& m) {
    // Clear denominators per row, then fraction-free elimination over Z.
    int r = m.rows(), c = m.cols();
    std::vector<std::vector<Int>> a(r, std::vector<Int>(c));
    for (int i = 0; i < r; ++i) {
        Int lcm = 1;
        for (int j = 0; j < c; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < c; ++j) {
            Rat v = m.at(i, j) * Rat(lcm);
            a[i][j] = v.get_num();
        }
    }
    int rk = 0;
    Int prev = 1;
    for (int col = 0; col < c && rk < r; ++col) {
        int pivot = -1;
        for (int i = rk; i < r; ++i)
            if (sgn(a[i][col]) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rk]);
        for (int i = rk + 1; i < r; ++i) {
            for (int j = col + 1; j < c; ++j) {
                Int num = a[i][j] * a[rk][col] - a[i][col] * a[rk][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

Rat det(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
    return det_bareiss(std::move(a));
}

Mat rref(const Mat& m, std::vector<int>* pivot_cols) {
    Mat a = m;
    int r = a.rows(), c = a.cols();
    if (pivot_cols) pivot_cols->clear();
    int lead = 0;
    for (int col = 0; col < c && lead < r; ++col) {
        int pivot = -1;
        for (int i = lead; i < r; ++i)
            if (!is_zero(a.at(i, col))) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < c; ++j) std::swap(a.at(pivot, j), a.at(lead, j));
        Rat inv = 1 / a.at(lead, col);
        for (int j = col; j < c; ++j) a.at(lead, j) *= inv;
        for (int i = 0; i < r; ++i) {
            if (i == lead || is_zero(a.at(i, col))) continue;
            Rat f = a.at(i, col);
            for (int j = col; j < c; ++j) a.at(i, j) -= f * a.at(lead, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++lead;
    }
    return a;
}

Mat kernel_basis(const Mat& m) {
    std::vector<int> pivots;
    Mat r = rref(m, &pivots);
    int c = m.cols();
    std::vector<bool> is_pivot(c, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < c; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat k(int(free_cols.size()), c);
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int f = free_cols[fi];
        k.at(int(fi), f) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            k.at(int(fi), pivots[pi]) = -r.at(int(pi), f);
    }
    return k;
}

Mat left_kernel(const Mat& m) { return kernel_basis(m.transpose()); }

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> pivots;
    Mat r = rref(aug, &pivots);
    if (int(pivots.size()) != n || pivots[n - 1] != n - 1)
        throw std::invalid_argument("matrix not invertible");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

Subspace Subspace::span(int ambient_dim, const Mat& rows) {
    if (rows.cols() != ambient_dim + 1)
        throw std::invalid_argument("spanning rows do not match ambient dimension");
    std::vector<int> pivots;
    Mat r = rref(rows, &pivots);
    if (pivots.empty()) throw std::invalid_argument("empty span is not a subspace");
    Mat reduced = r.select_rows([&] {
        std::vector<int> idx(pivots.size());
        for (size_t i = 0; i < pivots.size(); ++i) idx[i] = int(i);
        return idx;
    }());
    return Subspace(ambient_dim, std::move(reduced));
}

bool Subspace::contains_point(const std::vector<Rat>& p) const {
    Mat stacked = basis_.stack(Mat::from_rat_rows({p}));
    return rank(stacked) == basis_.rows();
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) return false;
    Mat stacked = basis_.stack(other.basis());
    return rank(stacked) == basis_.rows();
}

std::optional<Subspace> meet(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("meet of subspaces in different ambients");
    Mat stacked = a.basis().stack(b.basis());
    Mat lk = left_kernel(stacked);
    if (lk.rows() == 0) return std::nullopt;
    // Each left-kernel row (u, v) gives the common vector u * basis(a).
    int p = a.basis().rows();
    Mat coeff = lk.select_columns([&] {
        std::vector<int> idx(p);
        for (int i = 0; i < p; ++i) idx[i] = i;
        return idx;
    }());
    Mat pts = coeff.mul(a.basis());
    return Subspace::span(a.ambient_dim(), pts);
}

Subspace join(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("join of subspaces in different ambients");
    return Subspace::span(a.ambient_dim(), a.basis().stack(b.basis()));
}

std::vector<Rat> plucker_embed(const Subspace& s) {
    const Mat& m = s.basis();
    int k1 = m.rows();
    auto subsets = k_subsets(m.cols(), k1);
    std::vector<Rat> coords;
    coords.reserve(subsets.size());
    for (const auto& cols : subsets) coords.push_back(det(m.select_columns(cols)));
    Rat scale(0);
    for (const auto& c : coords)
        if (!is_zero(c)) { scale = c; break; }
    if (is_zero(scale)) throw std::invalid_argument("rank-deficient subspace matrix");
    for (auto& c : coords) c /= scale;
    return coords;
}

} // namespace congruence
