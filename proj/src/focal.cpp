#include "congruence/focal.hpp"

#include <stdexcept>

#include "congruence/ring_det.hpp"

namespace congruence {

bool CharPair::degenerate() const {
    for (const auto& v : f1)
        if (!is_zero(v)) return false;
    for (const auto& v : f2)
        if (!is_zero(v)) return false;
    return true;
}

std::string split_kind_name(SplitKind k) {
    switch (k) {
        case SplitKind::two_hyperplanes: return "two_hyperplanes";
        case SplitKind::double_hyperplane: return "double_hyperplane";
        case SplitKind::irreducible: return "irreducible";
        case SplitKind::conjugate_pair: return "conjugate_pair";
    }
    return "?";
}

CharPair characteristic_pair(const Chart& c, const Rat& s0, const Rat& t0, const Rat& dir_s,
                             const Rat& dir_t) {
    Mat M = c.eval(s0, t0);
    if (rank(M) != c.r + 1) throw BasePointError("characteristic map at a rank-drop parameter");
    int n = c.N + 1;
    Mat D(c.r + 1, n);
    for (int i = 0; i <= c.r; ++i)
        for (int j = 0; j < n; ++j) {
            Rat ds = c.rows[i][j].dds().eval(s0, t0);
            Rat dt = c.rows[i][j].ddt().eval(s0, t0);
            D.at(i, j) = dir_s * ds + dir_t * dt;
        }
    // Extend M to a square invertible matrix with unit vectors at the
    // non-pivot columns; the last two inverse columns project modulo the fiber.
    std::vector<int> pivots;
    rref(M, &pivots);
    std::vector<bool> is_piv(n, false);
    for (int p : pivots) is_piv[p] = true;
    Mat ext(2, n);
    int kk = 0;
    for (int j = 0; j < n && kk < 2; ++j)
        if (!is_piv[j]) ext.at(kk++, j) = 1;
    Mat big = M.stack(ext);
    Mat inv = inverse(big);
    CharPair out;
    out.f1.assign(c.r + 1, Rat(0));
    out.f2.assign(c.r + 1, Rat(0));
    for (int i = 0; i <= c.r; ++i)
        for (int j = 0; j < n; ++j) {
            out.f1[i] += D.at(i, j) * inv.at(j, n - 2);
            out.f2[i] += D.at(i, j) * inv.at(j, n - 1);
        }
    return out;
}

FocalQuadric focal_quadric(const Chart& c, const Rat& s0, const Rat& t0) {
    static const long dirs[][4] = {{1, 0, 0, 1}, {1, 1, 1, -1}, {1, 2, 3, 1}, {2, -1, 1, 3}};
    for (const auto& d : dirs) {
        CharPair a = characteristic_pair(c, s0, t0, rat(d[0]), rat(d[1]));
        if (a.degenerate()) continue;
        CharPair b = characteristic_pair(c, s0, t0, rat(d[2]), rat(d[3]));
        if (b.degenerate()) continue;
        int m = c.r + 1;
        Mat gram(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                Rat v = a.f1[i] * b.f2[j] + a.f1[j] * b.f2[i] - b.f1[i] * a.f2[j] -
                        b.f1[j] * a.f2[i];
                gram.at(i, j) = v / 2;
            }
        Rat scale(0);
        for (int i = 0; i < m && is_zero(scale); ++i)
            for (int j = 0; j < m; ++j)
                if (!is_zero(gram.at(i, j))) { scale = gram.at(i, j); break; }
        if (is_zero(scale)) continue; // identically zero form: try another basis
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) gram.at(i, j) /= scale;
        FocalQuadric q;
        q.fiber_dim = c.r;
        q.gram = gram;
        q.s0 = s0;
        q.t0 = t0;
        q.fiber_rows = c.eval(s0, t0);
        int rk = rank(q.gram);
        if (rk > 4) throw std::logic_error("focal quadric rank exceeds 4");
        return q;
    }
    throw GenericityFailure("no nondegenerate pair of directions at this parameter");
}

int quadric_rank(const FocalQuadric& q) {
    int rk = rank(q.gram);
    if (rk > 4) throw std::logic_error("focal quadric rank exceeds 4");
    return rk;
}

namespace {

std::vector<Rat> primitive_covector(std::vector<Rat> v) {
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& x : v) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    if (sgn(num_gcd) == 0) return v;
    Rat scale = rat(den_lcm, num_gcd);
    for (auto& x : v) x *= scale;
    for (const auto& x : v) {
        if (is_zero(x)) continue;
        if (sgn(x) < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

} // namespace

QuadricSplit split_quadric(const FocalQuadric& q) {
    int rk = quadric_rank(q);
    int m = q.gram.rows();
    QuadricSplit out;
    if (rk == 0) throw std::runtime_error("identically zero focal quadric");
    if (rk >= 3) {
        out.kind = SplitKind::irreducible;
        return out;
    }
    if (rk == 1) {
        out.kind = SplitKind::double_hyperplane;
        for (int i = 0; i < m; ++i) {
            bool nz = false;
            for (int j = 0; j < m; ++j)
                if (!is_zero(q.gram.at(i, j))) nz = true;
            if (nz) {
                out.components.push_back(primitive_covector(q.gram.row(i)));
                break;
            }
        }
        return out;
    }
    // rank 2: restrict to the two-dimensional row space and factor there.
    std::vector<int> pivots;
    rref(q.gram, &pivots);
    Mat B(2, m);
    {
        Mat rr = rref(q.gram, &pivots);
        for (int j = 0; j < m; ++j) {
            B.at(0, j) = rr.at(0, j);
            B.at(1, j) = rr.at(1, j);
        }
    }
    // Solve G = B^T S B for the symmetric 2x2 S.
    Mat BBt = B.mul(B.transpose());
    Mat BBt_inv = inverse(BBt);
    Mat S = BBt_inv.mul(B.mul(q.gram.mul(B.transpose().mul(BBt_inv))));
    Rat al = S.at(0, 0), be = S.at(0, 1), ga = S.at(1, 1);
    Rat disc = be * be - al * ga;
    auto root = rat_sqrt(disc);
    if (!root) {
        out.kind = SplitKind::conjugate_pair;
        return out;
    }
    std::vector<Rat> a2, b2;
    if (!is_zero(al)) {
        Rat r1 = (-be + *root) / al;
        Rat r2 = (-be - *root) / al;
        a2 = {Rat(1), -r1};
        b2 = {Rat(1), -r2};
    } else {
        // q = y1 (2 be y0 + ga y1)
        a2 = {Rat(0), Rat(1)};
        b2 = {2 * be, ga};
    }
    std::vector<Rat> u(m, Rat(0)), v(m, Rat(0));
    for (int j = 0; j < m; ++j) {
        u[j] = a2[0] * B.at(0, j) + a2[1] * B.at(1, j);
        v[j] = b2[0] * B.at(0, j) + b2[1] * B.at(1, j);
    }
    out.kind = SplitKind::two_hyperplanes;
    out.components.push_back(primitive_covector(u));
    out.components.push_back(primitive_covector(v));
    std::sort(out.components.begin(), out.components.end(),
              [](const std::vector<Rat>& x, const std::vector<Rat>& y) {
                  for (size_t i = 0; i < x.size(); ++i) {
                      if (x[i] < y[i]) return true;
                      if (y[i] < x[i]) return false;
                  }
                  return false;
              });
    return out;
}

Subspace realize_fiber_hyperplane(const FocalQuadric& q, const std::vector<Rat>& covector) {
    Mat cov(1, int(covector.size()));
    cov.set_row(0, covector);
    Mat K = kernel_basis(cov); // fiber-coordinate points annihilated by the covector
    Mat pts = K.mul(q.fiber_rows);
    return Subspace::span(q.fiber_rows.cols() - 1, pts);
}

Rat quadric_value_at_ambient(const FocalQuadric& q, const std::vector<Rat>& p) {
    // Solve x * fiber_rows = p.
    Mat rowsT = q.fiber_rows.transpose();
    Mat aug(rowsT.rows(), rowsT.cols() + 1);
    for (int i = 0; i < rowsT.rows(); ++i) {
        for (int j = 0; j < rowsT.cols(); ++j) aug.at(i, j) = rowsT.at(i, j);
        aug.at(i, rowsT.cols()) = p[i];
    }
    std::vector<int> pivots;
    Mat r = rref(aug, &pivots);
    for (int piv : pivots)
        if (piv == rowsT.cols())
            throw std::invalid_argument("point does not lie on the fiber");
    std::vector<Rat> x(rowsT.cols(), Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(int(i), rowsT.cols());
    Rat acc(0);
    for (int i = 0; i < q.gram.rows(); ++i)
        for (int j = 0; j < q.gram.cols(); ++j) acc += x[i] * q.gram.at(i, j) * x[j];
    return acc;
}

bool is_fundamental(const Chart& c, const std::vector<Rat>& point) {
    std::vector<std::vector<BiPoly>> stacked = c.rows;
    std::vector<BiPoly> row(c.N + 1);
    for (int j = 0; j <= c.N; ++j) row[j] = BiPoly::constant(point[j]);
    stacked.push_back(std::move(row));
    BiPoly g;
    bool any = false;
    for (auto& m : maximal_minors(stacked)) {
        if (m.is_zero()) continue;
        any = true;
        g = g.is_zero() ? m : bigcd(g, m);
        if (g.is_constant()) return false;
    }
    if (!any) return true; // fixed point of the family
    return !g.is_constant();
}

bool is_fundamental(const Chart& c, const Subspace& point) {
    if (point.dim() != 0) throw std::invalid_argument("fundamental test expects a point");
    return is_fundamental(c, point.basis().row(0));
}

namespace {

std::vector<Rat> random_point_on(const Subspace& s, Sampler& smp) {
    const Mat& b = s.basis();
    while (true) {
        std::vector<Rat> p(b.cols(), Rat(0));
        bool nz = false;
        for (int i = 0; i < b.rows(); ++i) {
            Rat co = smp.rand_rat(9);
            for (int j = 0; j < b.cols(); ++j) p[j] += co * b.at(i, j);
        }
        for (const auto& x : p)
            if (!is_zero(x)) nz = true;
        if (nz) return p;
    }
}

bool try_collect_samples(const Chart& c, const Rat& s0, const Rat& t0, Sampler& smp,
                         std::vector<FocalSample>& out) {
    FocalQuadric q;
    try {
        q = focal_quadric(c, s0, t0);
    } catch (const BasePointError&) {
        return false;
    } catch (const GenericityFailure&) {
        return false;
    } catch (const std::runtime_error&) {
        return false;
    }
    QuadricSplit sp = split_quadric(q);
    bool found = false;
    if (sp.kind == SplitKind::two_hyperplanes || sp.kind == SplitKind::double_hyperplane) {
        for (const auto& cov : sp.components) {
            Subspace h = realize_fiber_hyperplane(q, cov);
            out.push_back({random_point_on(h, smp), s0, t0});
            found = true;
        }
        return found;
    }
    if (sp.kind == SplitKind::conjugate_pair) return false;
    // Irreducible: section with lines in fiber coordinates.
    int m = q.gram.rows();
    for (int i = 0; i < m; ++i)
        if (is_zero(q.gram.at(i, i))) {
            std::vector<Rat> x(m, Rat(0));
            x[i] = 1;
            Mat xm(1, m);
            xm.set_row(0, x);
            out.push_back({xm.mul(q.fiber_rows).row(0), s0, t0});
            return true;
        }
    for (int tries = 0; tries < 40; ++tries) {
        std::vector<Rat> a = smp.rand_vector(m), b = smp.rand_vector(m);
        auto form = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
            Rat acc(0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) acc += x[i] * q.gram.at(i, j) * y[j];
            return acc;
        };
        Rat A = form(b, b), B = 2 * form(a, b), C = form(a, a);
        if (is_zero(A)) continue;
        auto root = rat_sqrt(B * B - 4 * A * C);
        if (!root) continue;
        Rat lam = (-B + *root) / (2 * A);
        std::vector<Rat> x(m);
        bool nz = false;
        for (int i = 0; i < m; ++i) {
            x[i] = a[i] + lam * b[i];
            if (!is_zero(x[i])) nz = true;
        }
        if (!nz) continue;
        Mat xm(1, m);
        xm.set_row(0, x);
        out.push_back({xm.mul(q.fiber_rows).row(0), s0, t0});
        return true;
    }
    return false;
}

} // namespace

std::vector<FocalSample> focal_samples(const Chart& c, int k, Sampler& smp) {
    if (k < 1) throw std::invalid_argument("focal_samples needs k >= 1");
    std::vector<FocalSample> out;
    for (int i = 0; i < 4 * k && int(out.size()) < k; ++i)
        try_collect_samples(c, smp.rand_rat(30), smp.rand_rat(30), smp, out);
    // Deterministic small grid for charts whose quadric splits only at
    // special parameters.
    for (long a = -6; a <= 6 && int(out.size()) < k; ++a)
        for (long b = -6; b <= 6 && int(out.size()) < k; ++b)
            try_collect_samples(c, rat(a), rat(b), smp, out);
    if (int(out.size()) > k) out.resize(k);
    return out;
}

bool point_on_parametrized_family(const std::vector<std::vector<UPoly>>& rows_t,
                                  const std::vector<Rat>& p) {
    std::vector<std::vector<UPoly>> stacked = rows_t;
    std::vector<UPoly> prow;
    for (const auto& x : p) prow.push_back(UPoly::constant(x));
    stacked.push_back(std::move(prow));
    UPoly g;
    bool any = false;
    for (auto& m : maximal_minors_u(stacked)) {
        if (m.is_zero()) continue;
        any = true;
        g = g.is_zero() ? m.monic() : gcd(g, m);
    }
    if (!any || g.deg() > 0) return true;
    // parameter at infinity
    std::vector<std::vector<UPoly>> rev = rows_t;
    for (auto& row : rev) {
        int d = 0;
        for (const auto& e : row) d = std::max(d, e.deg());
        for (auto& e : row) e = e.is_zero() ? e : e.reversed(d);
    }
    Mat lim(int(rev.size()) + 1, int(rev[0].size()));
    for (size_t i = 0; i < rev.size(); ++i)
        for (size_t j = 0; j < rev[i].size(); ++j) lim.at(int(i), int(j)) = rev[i][j].eval(Rat(0));
    for (size_t j = 0; j < p.size(); ++j) lim.at(int(rev.size()), int(j)) = p[j];
    Mat top = lim.select_rows([&] {
        std::vector<int> idx(rev.size());
        for (size_t i = 0; i < rev.size(); ++i) idx[i] = int(i);
        return idx;
    }());
    return rank(lim) == rank(top);
}

} // namespace congruence
