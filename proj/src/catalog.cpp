#include "congruence/catalog.hpp"

#include <numeric>
#include <stdexcept>

#include "congruence/ring_det.hpp"

namespace congruence {

namespace {

BiPoly bp(long v) { return BiPoly::constant(rat(v)); }

std::vector<BiPoly> constant_row(const std::vector<Rat>& v) {
    std::vector<BiPoly> row(v.size());
    for (size_t i = 0; i < v.size(); ++i) row[i] = BiPoly::constant(v[i]);
    return row;
}

void validate_generic_rank(const Chart& c, Sampler& smp, const char* what) {
    for (int i = 0; i < 8; ++i) {
        try {
            eval_chart(c, smp.rand_rat(50), smp.rand_rat(50));
            return;
        } catch (const BasePointError&) {
        }
    }
    throw std::invalid_argument(std::string(what) + ": chart is rank-deficient everywhere");
}

} // namespace

Chart pencil_plane(int r, const Subspace& base, const Subspace& moving_plane) {
    if (r < 1) throw std::invalid_argument("pencil_plane needs r >= 1");
    int N = r + 2;
    if (base.ambient_dim() != N || moving_plane.ambient_dim() != N)
        throw std::invalid_argument("pencil_plane ambient mismatch");
    if (base.dim() != r - 1) throw std::invalid_argument("pencil_plane base must have dim r-1");
    if (moving_plane.dim() != 2)
        throw std::invalid_argument("pencil_plane moving space must be a 2-plane");
    if (meet(base, moving_plane))
        throw std::invalid_argument("pencil_plane moving plane must be disjoint from the base");
    Chart c;
    c.r = r;
    c.N = N;
    c.declared_birational = true;
    for (int i = 0; i < base.basis().rows(); ++i) c.rows.push_back(constant_row(base.basis().row(i)));
    std::vector<BiPoly> moving(N + 1);
    const Mat& w = moving_plane.basis();
    for (int j = 0; j <= N; ++j)
        moving[j] = BiPoly::constant(w.at(0, j)) + BiPoly::monomial(Rat(1), 1, 0).scaled(w.at(1, j)) +
                    BiPoly::monomial(Rat(1), 0, 1).scaled(w.at(2, j));
    c.rows.push_back(std::move(moving));
    return c;
}

Chart pencil_plane_default(int r) {
    int N = r + 2;
    Mat base(r, N + 1);
    for (int i = 0; i < r; ++i) base.at(i, i) = 1;
    Mat mov(3, N + 1);
    for (int i = 0; i < 3; ++i) mov.at(i, r + i) = 1;
    return pencil_plane(r, Subspace::span(N, base), Subspace::span(N, mov));
}

Chart case1(int r) {
    Chart c;
    c.declared_birational = true;
    BiPoly s = BiPoly::var_s(), t = BiPoly::var_t();
    switch (r) {
        case 1: {
            // Chords of the standard rational normal cubic, parametrized by
            // the elementary symmetric functions of the two contact values.
            c.r = 1;
            c.N = 3;
            c.rows = {
                {bp(2), s, s * s - bp(2) * t, s * s * s - bp(3) * s * t},
                {bp(0), bp(1), s, s * s - t},
            };
            break;
        }
        case 2: {
            // Planes spanned by the conic images of lines u0 + s u1 + t u2 = 0
            // under the net of conics through (1:0:0).
            c.r = 2;
            c.N = 4;
            c.rows = {
                {-s, bp(0), bp(1), bp(0), bp(0)},
                {-t, -s, bp(0), bp(1), bp(0)},
                {bp(0), -t, bp(0), bp(0), bp(1)},
            };
            break;
        }
        case 3: {
            // Spans of P^1 x l inside the Segre threefold P^1 x P^2 in P^5.
            c.r = 3;
            c.N = 5;
            c.rows = {
                {-s, bp(1), bp(0), bp(0), bp(0), bp(0)},
                {-t, bp(0), bp(1), bp(0), bp(0), bp(0)},
                {bp(0), bp(0), bp(0), -s, bp(1), bp(0)},
                {bp(0), bp(0), bp(0), -t, bp(0), bp(1)},
            };
            break;
        }
        default:
            throw std::invalid_argument("case1 requires r in {1, 2, 3}");
    }
    return c;
}

namespace {

// Rational normal curves in disjoint coordinate blocks; generator row i is
// the i-th curve evaluated at t.
std::vector<std::vector<UPoly>> scroll_generator_rows(const std::vector<int>& parts) {
    int width = 0;
    for (int p : parts) width += p + 1;
    std::vector<std::vector<UPoly>> rows;
    int off = 0;
    for (int p : parts) {
        std::vector<UPoly> row(width);
        for (int j = 0; j <= p; ++j) row[off + j] = UPoly::monomial(Rat(1), j);
        rows.push_back(std::move(row));
        off += p + 1;
    }
    return rows;
}

bool center_meets_scroll(const Mat& center, const std::vector<std::vector<UPoly>>& gens) {
    // The center meets the scroll iff stacking it over some generator drops
    // rank, at a finite parameter or at infinity.
    std::vector<std::vector<UPoly>> stacked;
    for (int i = 0; i < center.rows(); ++i) {
        std::vector<UPoly> row;
        for (int j = 0; j < center.cols(); ++j) row.push_back(UPoly::constant(center.at(i, j)));
        stacked.push_back(std::move(row));
    }
    for (const auto& g : gens) stacked.push_back(g);
    UPoly g;
    for (auto& m : maximal_minors_u(stacked)) {
        if (m.is_zero()) continue;
        g = g.is_zero() ? m.monic() : gcd(g, m);
        if (g.deg() == 0) break;
    }
    if (g.is_zero() || g.deg() > 0) return true;
    // parameter at infinity
    Mat lim(center.rows() + int(gens.size()), center.cols());
    for (int i = 0; i < center.rows(); ++i)
        for (int j = 0; j < center.cols(); ++j) lim.at(i, j) = center.at(i, j);
    for (size_t i = 0; i < gens.size(); ++i) {
        int d = 0;
        for (const auto& e : gens[i]) d = std::max(d, e.deg());
        for (size_t j = 0; j < gens[i].size(); ++j)
            lim.at(center.rows() + int(i), int(j)) =
                gens[i][j].is_zero() ? Rat(0) : gens[i][j].reversed(d).eval(Rat(0));
    }
    return rank(lim) < center.rows() + int(gens.size());
}

} // namespace

Case2Data case2_scroll(const ScrollSpec& spec, Sampler& smp) {
    int r = int(spec.parts.size());
    if (r < 1) throw std::invalid_argument("case2_scroll needs at least one part");
    int n = 0;
    for (int p : spec.parts) {
        if (p < 1) throw std::invalid_argument("scroll parts must be positive");
        n += p;
    }
    int m = n + r - 1;    // scroll ambient projective dimension
    int N = r + 2;        // target ambient
    std::vector<UPoly> divisor = spec.divisor;
    if (divisor.empty()) {
        for (int i = 0; i < r; ++i) {
            UPoly d = UPoly::constant(Rat(1));
            for (int j = 1; j < spec.parts[i]; ++j) {
                UPoly lin(std::vector<Rat>{rat(-(10 * (i + 1) + j)), Rat(1)});
                d = d * lin;
            }
            divisor.push_back(d);
        }
    }
    if (int(divisor.size()) != r) throw std::invalid_argument("divisor tuple size mismatch");
    bool all_zero = true;
    for (int i = 0; i < r; ++i) {
        if (divisor[i].deg() > spec.parts[i] - 1)
            throw std::invalid_argument("divisor degree exceeds part bound");
        if (!divisor[i].is_zero()) all_zero = false;
    }
    if (all_zero) throw std::invalid_argument("divisor tuple must be nonzero");

    // The two hyperplanes through the residual divisor.
    Mat H(2, m + 1);
    int off = 0;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j <= spec.parts[i]; ++j) {
            H.at(0, off + j) = divisor[i].coeff(j);
            H.at(1, off + j) = j == 0 ? Rat(0) : divisor[i].coeff(j - 1);
        }
        off += spec.parts[i] + 1;
    }
    Mat d_span = kernel_basis(H); // rows span <D> in the scroll ambient

    auto gens_big = scroll_generator_rows(spec.parts);

    Mat proj;            // (N+1) x (m+1), rows are the projection forms
    Mat plane_src(0, 0); // spanning points of the plane before projection
    if (m > N) {
        int vrows = m - N; // affine rows of the center
        Mat V(0, 0);
        bool ok = false;
        for (int attempt = 0; attempt < 24 && !ok; ++attempt) {
            if (spec.center) {
                V = *spec.center;
                if (V.rows() != vrows || V.cols() != m + 1)
                    throw std::invalid_argument("explicit center has wrong shape");
                if (rank(d_span.stack(V)) != d_span.rows())
                    throw std::invalid_argument("center must lie in the divisor span");
            } else {
                Mat co = smp.rand_matrix(vrows, d_span.rows());
                V = co.mul(d_span);
            }
            if (rank(V) != vrows) {
                if (spec.center) throw std::invalid_argument("explicit center is degenerate");
                continue;
            }
            if (center_meets_scroll(V, gens_big)) {
                if (spec.center) throw std::invalid_argument("center meets the scroll");
                continue;
            }
            ok = true;
        }
        if (!ok) throw GenericityFailure("no valid projection center found");
        proj = kernel_basis(V);
        if (proj.rows() != N + 1) throw std::logic_error("projection form count mismatch");
        plane_src = d_span;
    } else {
        proj = Mat(N + 1, m + 1);
        for (int i = 0; i <= m; ++i) proj.at(i, i) = 1;
        plane_src = d_span;
    }

    // Plane: image of <D>, padded with fresh coordinate points when the
    // scroll ambient is smaller than the target.
    std::vector<std::vector<Rat>> plane_rows;
    for (int i = 0; i < plane_src.rows(); ++i) {
        std::vector<Rat> img(N + 1, Rat(0));
        for (int j = 0; j <= N; ++j)
            for (int k = 0; k <= m; ++k) img[j] += plane_src.at(i, k) * proj.at(j, k);
        plane_rows.push_back(std::move(img));
    }
    for (int extra = m + 1; extra <= N; ++extra) {
        std::vector<Rat> e(N + 1, Rat(0));
        e[extra] = 1;
        plane_rows.push_back(std::move(e));
    }
    if (plane_rows.empty()) throw std::logic_error("empty plane span");
    Subspace plane = Subspace::span(N, Mat::from_rat_rows(plane_rows));
    if (plane.dim() != r)
        throw GenericityFailure("projected divisor span has unexpected dimension");

    // Projected generator rows.
    std::vector<std::vector<UPoly>> gens(r, std::vector<UPoly>(N + 1));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j <= N; ++j) {
            UPoly acc;
            for (int k = 0; k <= m; ++k) {
                if (gens_big[i][k].is_zero() || is_zero(proj.at(j, k))) continue;
                acc = acc + gens_big[i][k].scaled(proj.at(j, k));
            }
            gens[i][j] = acc;
        }

    // Pencil line inside the plane.
    Chart chart;
    chart.r = r;
    chart.N = N;
    chart.declared_birational = true;
    for (int attempt = 0; attempt < 24; ++attempt) {
        Mat co = smp.rand_matrix(2, plane.basis().rows());
        Mat ab = co.mul(plane.basis());
        if (rank(ab) != 2) continue;
        Chart cand;
        cand.r = r;
        cand.N = N;
        cand.declared_birational = true;
        for (const auto& g : gens) {
            std::vector<BiPoly> row(N + 1);
            for (int j = 0; j <= N; ++j) row[j] = BiPoly::from_t_poly(g[j]);
            cand.rows.push_back(std::move(row));
        }
        std::vector<BiPoly> pencil(N + 1);
        for (int j = 0; j <= N; ++j)
            pencil[j] = BiPoly::constant(ab.at(0, j)) +
                        BiPoly::monomial(Rat(1), 1, 0).scaled(ab.at(1, j));
        cand.rows.push_back(std::move(pencil));
        try {
            validate_generic_rank(cand, smp, "case2_scroll");
            chart = cand;
            break;
        } catch (const std::invalid_argument&) {
        }
        if (attempt == 23) throw GenericityFailure("no valid pencil line found");
    }
    if (chart.rows.empty()) throw GenericityFailure("scroll chart construction failed");
    return Case2Data{chart, plane, gens};
}

Case2Data case2_nodal() {
    Chart c;
    c.r = 1;
    c.N = 3;
    c.declared_birational = true;
    BiPoly s = BiPoly::var_s(), t = BiPoly::var_t();
    c.rows = {
        {bp(1) - t * t, t, t * t * t, bp(0)},
        {bp(0), bp(1), bp(1), s},
    };
    Subspace plane = Subspace::span(3, Mat::from_rows({{0, 1, 1, 0}, {0, 0, 0, 1}}));
    std::vector<std::vector<UPoly>> gens(1, std::vector<UPoly>(4));
    gens[0][0] = UPoly::from_longs({1, 0, -1});
    gens[0][1] = UPoly::monomial(Rat(1), 1);
    gens[0][2] = UPoly::monomial(Rat(1), 3);
    gens[0][3] = UPoly();
    return Case2Data{c, plane, gens};
}

Case2Data case2_normal(int n, int e) {
    if (n < 1) throw std::invalid_argument("case2_normal needs n >= 1");
    if (e < 0 || e > n - 1) throw std::invalid_argument("case2_normal needs 0 <= e <= n-1");
    if ((n - e) % 2 != 1) throw std::invalid_argument("case2_normal needs n - e odd");
    int k1 = (n - e - 1) / 2;
    int k2 = (n + e - 1) / 2;
    int N = n + 2;
    Chart c;
    c.r = n;
    c.N = N;
    c.declared_birational = true;
    // Kernel rows of the moving hyperplane covector
    // (1, t, ..., t^k1, s, st, ..., s t^k2) inside the fixed plane x_{n+1} =
    // x_{n+2} = 0, plus the pencil point on the complementary line.
    for (int j = 0; j < k1; ++j) {
        std::vector<BiPoly> row(N + 1);
        row[j] = BiPoly::var_t();
        row[j + 1] = bp(-1);
        c.rows.push_back(std::move(row));
    }
    {
        std::vector<BiPoly> bridge(N + 1);
        bridge[0] = BiPoly::var_s();
        bridge[k1 + 1] = bp(-1);
        c.rows.push_back(std::move(bridge));
    }
    for (int i = 0; i < k2; ++i) {
        std::vector<BiPoly> row(N + 1);
        row[k1 + 1 + i] = BiPoly::var_t();
        row[k1 + 2 + i] = bp(-1);
        c.rows.push_back(std::move(row));
    }
    {
        std::vector<BiPoly> p(N + 1);
        p[n + 1] = bp(1);
        p[n + 2] = BiPoly::var_t();
        c.rows.push_back(std::move(p));
    }
    Mat plane_rows(n + 1, N + 1);
    for (int i = 0; i <= n; ++i) plane_rows.at(i, i) = 1;
    Subspace plane = Subspace::span(N, plane_rows);
    // Generators: the s-free rows.
    std::vector<std::vector<UPoly>> gens;
    for (const auto& row : c.rows) {
        bool sfree = true;
        for (const auto& entry : row)
            if (entry.degs() > 0) sfree = false;
        if (!sfree) continue;
        std::vector<UPoly> g(N + 1);
        for (int j = 0; j <= N; ++j) g[j] = row[j].s_coeff(0);
        gens.push_back(std::move(g));
    }
    return Case2Data{c, plane, gens};
}

Case3Data case3(int n) {
    if (n < 1) throw std::invalid_argument("case3 needs n >= 1");
    int N = n + 2;
    Chart c;
    c.r = n;
    c.N = N;
    c.declared_birational = true;
    for (int i = 0; i < n; ++i) {
        std::vector<BiPoly> row(N + 1);
        row[i] = BiPoly::var_t();
        row[i + 1] = bp(-1);
        c.rows.push_back(std::move(row));
    }
    std::vector<BiPoly> pencil(N + 1);
    pencil[0] = BiPoly::var_s();
    pencil[n + 1] = bp(1);
    pencil[n + 2] = BiPoly::var_t();
    c.rows.push_back(std::move(pencil));
    Mat plane_rows(n + 1, N + 1);
    for (int i = 0; i <= n; ++i) plane_rows.at(i, i) = 1;
    return Case3Data{c, Subspace::span(N, plane_rows)};
}

Chart case3_section(int n, int r, Sampler& smp, const Config& cfg) {
    if (r < 1 || r > n) throw std::invalid_argument("case3_section needs 1 <= r <= n");
    Case3Data base = case3(n);
    if (r == n) return base.chart;
    return section_random(base.chart, r, smp, cfg);
}

} // namespace congruence
