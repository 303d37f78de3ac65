#include "congruence/family.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "congruence/ring_det.hpp"

namespace congruence {

namespace {

struct PolySystem {
    std::vector<BiPoly> conditions;
    std::vector<std::vector<BiPoly>> exclusions;
};

using SystemBuilder = std::function<PolySystem(const Chart&)>;

struct CompletionResult {
    bool posdim = false;
    long long mult = 0;
    long long distinct = 0;
};

BiPoly gcd_chain(const std::vector<BiPoly>& ps) {
    BiPoly g;
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p.normalized() : bigcd(g, p);
        if (g.is_constant()) break;
    }
    return g;
}

CompletionResult count_affine_system(const PolySystem& sys) {
    std::vector<BiPoly> conds;
    for (const auto& c : sys.conditions)
        if (!c.is_zero()) conds.push_back(c);
    if (conds.empty()) return {true, 0, 0};
    for (const auto& c : conds)
        if (c.is_constant()) return {false, 0, 0};
    // A factor shared by every condition whose zero locus consists of
    // excluded parameters carries no solutions; strip it so the genuine
    // isolated zeros become visible to the elimination.
    BiPoly common = gcd_chain(conds);
    if (!common.is_constant()) {
        for (const auto& list : sys.exclusions) {
            BiPoly locus = gcd_chain(list);
            if (locus.is_zero() || locus.is_constant()) continue;
            BiPoly spurious = bigcd(common, locus);
            if (spurious.is_constant()) continue;
            for (auto& c : conds)
                while (true) {
                    BiPoly f = bigcd(c, spurious);
                    if (f.is_constant()) break;
                    c = c.divexact(f);
                }
            common = gcd_chain(conds);
            if (common.is_constant()) break;
        }
        if (!common.is_constant()) return {true, 0, 0};
        std::vector<BiPoly> kept;
        for (const auto& c : conds) {
            if (c.is_zero()) return {true, 0, 0};
            if (c.is_constant()) return {false, 0, 0};
            kept.push_back(c);
        }
        conds = std::move(kept);
    }
    if (conds.size() == 1) return {true, 0, 0};
    std::stable_sort(conds.begin(), conds.end(), [](const BiPoly& a, const BiPoly& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a.monomials().size() < b.monomials().size();
    });
    size_t cap = std::min(conds.size(), size_t(6));
    for (size_t i = 0; i < cap; ++i)
        for (size_t j = i + 1; j < conds.size(); ++j) {
            if (!bigcd(conds[i], conds[j]).is_constant()) continue;
            std::vector<BiPoly> validators;
            for (size_t k = 0; k < conds.size(); ++k)
                if (k != i && k != j) validators.push_back(conds[k]);
            SolutionCount sc = count_affine(conds[i], conds[j], validators, sys.exclusions);
            if (!sc.finite) continue;
            return {false, sc.with_multiplicity, sc.distinct};
        }
    return {true, 0, 0};
}

CompletionResult count_completion(const Chart& c, const SystemBuilder& build) {
    CompletionResult total;
    {
        CompletionResult aff = count_affine_system(build(c));
        if (aff.posdim) return {true, 0, 0};
        total.mult += aff.mult;
        total.distinct += aff.distinct;
    }
    // s at infinity, t finite.
    {
        PolySystem sys = build(c.swapped(true, false));
        std::vector<UPoly> conds;
        for (const auto& b : sys.conditions) conds.push_back(b.eval_s(Rat(0)));
        std::vector<std::vector<UPoly>> ex;
        for (const auto& list : sys.exclusions) {
            std::vector<UPoly> l;
            for (const auto& e : list) l.push_back(e.eval_s(Rat(0)));
            ex.push_back(std::move(l));
        }
        UniCount u = count_univariate_system(conds, ex);
        if (u.all_zero) return {true, 0, 0};
        total.mult += u.with_multiplicity;
        total.distinct += u.distinct;
    }
    // t at infinity, s finite.
    {
        PolySystem sys = build(c.swapped(false, true));
        std::vector<UPoly> conds;
        for (const auto& b : sys.conditions) conds.push_back(b.eval_t(Rat(0)));
        std::vector<std::vector<UPoly>> ex;
        for (const auto& list : sys.exclusions) {
            std::vector<UPoly> l;
            for (const auto& e : list) l.push_back(e.eval_t(Rat(0)));
            ex.push_back(std::move(l));
        }
        UniCount u = count_univariate_system(conds, ex);
        if (u.all_zero) return {true, 0, 0};
        total.mult += u.with_multiplicity;
        total.distinct += u.distinct;
    }
    // both parameters at infinity.
    {
        PolySystem sys = build(c.swapped(true, true));
        bool all0 = !sys.conditions.empty();
        for (const auto& b : sys.conditions)
            if (sgn(b.eval(Rat(0), Rat(0))) != 0) { all0 = false; break; }
        if (all0) {
            bool excluded = false;
            for (const auto& list : sys.exclusions) {
                if (list.empty()) continue;
                bool listzero = true;
                for (const auto& e : list)
                    if (sgn(e.eval(Rat(0), Rat(0))) != 0) { listzero = false; break; }
                if (listzero) { excluded = true; break; }
            }
            if (!excluded) {
                total.mult += 1;
                total.distinct += 1;
            }
        }
    }
    return total;
}

struct Agreed {
    long long mult = 0;
    long long distinct = 0;
};

// Runs freshly drawn systems until two consecutive finite draws agree.
Agreed agreed_count(const Chart& c, const Config& cfg,
                    const std::function<SystemBuilder()>& draw, const char* what) {
    int attempts = std::max(2, cfg.retry_limit) + 2;
    std::optional<Agreed> prev;
    bool saw_finite = false;
    for (int i = 0; i < attempts; ++i) {
        CompletionResult res = count_completion(c, draw());
        if (res.posdim) continue;
        saw_finite = true;
        Agreed cur{res.mult, res.distinct};
        if (prev && prev->mult == cur.mult && prev->distinct == cur.distinct) return cur;
        prev = cur;
    }
    if (!saw_finite)
        throw DegenerateCongruence(std::string(what) +
                                   ": positive-dimensional incidence for every draw");
    throw GenericityFailure(std::string(what) + ": counts kept disagreeing across draws");
}

std::vector<Rat> nonzero_vector(Sampler& smp, int len) {
    while (true) {
        std::vector<Rat> v = smp.rand_vector(len);
        for (const auto& x : v)
            if (!is_zero(x)) return v;
    }
}

std::vector<std::vector<BiPoly>> stacked_with_constants(const Chart& ch, const Mat& extra) {
    std::vector<std::vector<BiPoly>> m = ch.rows;
    for (int i = 0; i < extra.rows(); ++i) {
        std::vector<BiPoly> row(ch.N + 1);
        for (int j = 0; j <= ch.N; ++j) row[j] = BiPoly::constant(extra.at(i, j));
        m.push_back(std::move(row));
    }
    return m;
}

void require_classification_shape(const Chart& c, const char* what) {
    if (c.N != c.r + 2)
        throw std::invalid_argument(std::string(what) + " requires ambient dimension r+2");
    if (int(c.rows.size()) != c.r + 1)
        throw std::invalid_argument(std::string(what) + ": malformed chart");
}

} // namespace

long long order(const Chart& c, Sampler& smp, const Config& cfg) {
    require_classification_shape(c, "order");
    auto draw = [&]() -> SystemBuilder {
        Mat B(1, c.N + 1);
        B.set_row(0, nonzero_vector(smp, c.N + 1));
        return [B](const Chart& ch) {
            PolySystem sys;
            sys.conditions = maximal_minors(stacked_with_constants(ch, B));
            sys.exclusions = {chart_rank_minors(ch)};
            return sys;
        };
    };
    Agreed a = agreed_count(c, cfg, draw, "order");
    if (a.mult == 0) throw DegenerateCongruence("order: no fiber through a generic point");
    return a.mult;
}

long long class_(const Chart& c, Sampler& smp, const Config& cfg) {
    require_classification_shape(c, "class");
    auto draw = [&]() -> SystemBuilder {
        Mat L(3, c.N + 1);
        do {
            L = smp.rand_matrix(3, c.N + 1);
        } while (rank(L) != 3);
        return [L](const Chart& ch) {
            PolySystem sys;
            sys.conditions = maximal_minors(stacked_with_constants(ch, L));
            sys.exclusions = {chart_rank_minors(ch)};
            return sys;
        };
    };
    return agreed_count(c, cfg, draw, "class").mult;
}

Bidegree bidegree(const Chart& c, Sampler& smp, const Config& cfg) {
    return Bidegree{order(c, smp, cfg), class_(c, smp, cfg)};
}

namespace {

// Containment system: every chart row must lie in the target row space.
PolySystem containment_system(const Chart& ch, const Mat& target_basis) {
    PolySystem sys;
    for (const auto& row : ch.rows) {
        std::vector<std::vector<BiPoly>> stacked;
        for (int i = 0; i < target_basis.rows(); ++i) {
            std::vector<BiPoly> r(ch.N + 1);
            for (int j = 0; j <= ch.N; ++j) r[j] = BiPoly::constant(target_basis.at(i, j));
            stacked.push_back(std::move(r));
        }
        stacked.push_back(row);
        for (auto& m : maximal_minors(stacked)) sys.conditions.push_back(std::move(m));
    }
    sys.exclusions = {chart_rank_minors(ch)};
    return sys;
}

void spot_check_birational(const Chart& c, Sampler& smp, const Config& cfg) {
    int attempts = std::max(2, cfg.retry_limit);
    std::optional<long long> prev;
    for (int i = 0; i < attempts; ++i) {
        Mat fiber(0, 0);
        bool ok = false;
        for (int k = 0; k < 8 && !ok; ++k) {
            try {
                fiber = eval_chart(c, smp.rand_rat(), smp.rand_rat()).basis();
                ok = true;
            } catch (const BasePointError&) {
            }
        }
        if (!ok) throw GenericityFailure("birationality check: chart evaluates nowhere");
        Mat basis = fiber;
        CompletionResult res = count_completion(
            c, [&basis](const Chart& ch) { return containment_system(ch, basis); });
        if (res.posdim) continue;
        if (res.distinct != 1)
            throw GenericityFailure("chart declared birational but a generic fiber has " +
                                    std::to_string(res.distinct) + " preimages");
        if (prev) return;
        prev = res.distinct;
    }
    if (!prev) throw GenericityFailure("birationality check kept hitting degenerate draws");
}

} // namespace

long long plucker_degree(const Chart& c, Sampler& smp, const Config& cfg) {
    require_classification_shape(c, "plucker_degree");
    if (!c.declared_birational)
        throw std::invalid_argument("plucker_degree requires a birational chart");
    spot_check_birational(c, smp, cfg);
    int ncoords = int(k_subsets(c.N + 1, c.r + 1).size());
    auto draw = [&]() -> SystemBuilder {
        std::vector<Rat> a = nonzero_vector(smp, ncoords);
        std::vector<Rat> b = nonzero_vector(smp, ncoords);
        return [a, b](const Chart& ch) {
            std::vector<BiPoly> pl = chart_plucker(ch);
            BiPoly ha, hb;
            for (size_t i = 0; i < pl.size(); ++i) {
                ha = ha + pl[i].scaled(a[i]);
                hb = hb + pl[i].scaled(b[i]);
            }
            PolySystem sys;
            sys.conditions = {ha, hb};
            sys.exclusions = {pl, chart_rank_minors(ch)};
            return sys;
        };
    };
    return agreed_count(c, cfg, draw, "plucker_degree").mult;
}

bool is_degenerate(const Chart& c, Sampler& smp, const Config& cfg) {
    try {
        order(c, smp, cfg);
        return false;
    } catch (const DegenerateCongruence&) {
        return true;
    }
}

namespace {

std::vector<std::vector<BiPoly>> bipoly_adjugate(const std::vector<std::vector<BiPoly>>& T) {
    int n = int(T.size());
    std::vector<std::vector<BiPoly>> adj(n, std::vector<BiPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<std::vector<BiPoly>> minor;
            for (int a = 0; a < n; ++a) {
                if (a == j) continue;
                std::vector<BiPoly> row;
                for (int b = 0; b < n; ++b) {
                    if (b == i) continue;
                    row.push_back(T[a][b]);
                }
                minor.push_back(std::move(row));
            }
            BiPoly d = minor.empty() ? BiPoly::constant(Rat(1)) : det_bareiss(std::move(minor));
            adj[i][j] = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

} // namespace

Chart section(const Chart& c, const Subspace& L, Sampler& smp) {
    require_classification_shape(c, "section");
    if (L.ambient_dim() != c.N) throw std::invalid_argument("section subspace ambient mismatch");
    int l = L.dim() - 2;
    if (l < 1 || l >= c.r) throw std::invalid_argument("section target out of range");
    // The intersection must have the expected dimension at several parameters.
    int checked = 0;
    for (int k = 0; k < 12 && checked < 3; ++k) {
        try {
            Subspace fiber = eval_chart(c, smp.rand_rat(), smp.rand_rat());
            auto m = meet(fiber, L);
            if (!m || m->dim() != l) throw NonGenericSection("fiber meets L in wrong dimension");
            ++checked;
        } catch (const BasePointError&) {
        }
    }
    if (checked < 3) throw NonGenericSection("could not validate section genericity");

    Mat E = kernel_basis(L.basis()); // covectors cutting out L
    int cols = c.r - l;
    std::vector<std::vector<BiPoly>> W(c.r + 1, std::vector<BiPoly>(cols));
    for (int i = 0; i <= c.r; ++i)
        for (int j = 0; j < cols; ++j) {
            BiPoly acc;
            for (int k = 0; k <= c.N; ++k) acc = acc + c.rows[i][k].scaled(E.at(j, k));
            W[i][j] = acc;
        }
    // Pick rows of W forming a generically invertible square block.
    std::vector<int> pivot_rows;
    for (int tries = 0; tries < 12 && pivot_rows.empty(); ++tries) {
        Rat s0 = smp.rand_rat(), t0 = smp.rand_rat();
        Mat W0(c.r + 1, cols);
        for (int i = 0; i <= c.r; ++i)
            for (int j = 0; j < cols; ++j) W0.at(i, j) = W[i][j].eval(s0, t0);
        std::vector<int> piv;
        rref(W0.transpose(), &piv);
        if (int(piv.size()) == cols) pivot_rows = piv;
    }
    if (pivot_rows.empty()) throw NonGenericSection("polynomial intersection block is singular");

    std::vector<std::vector<BiPoly>> T(cols, std::vector<BiPoly>(cols));
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j) T[i][j] = W[pivot_rows[i]][j];
    std::vector<std::vector<BiPoly>> adjT = bipoly_adjugate(T);
    BiPoly detT = det_bareiss(std::vector<std::vector<BiPoly>>(T));

    std::vector<bool> in_block(c.r + 1, false);
    for (int p : pivot_rows) in_block[p] = true;

    std::vector<int> lpivots;
    rref(L.basis(), &lpivots); // basis is already reduced; pivots give coordinates

    Chart out;
    out.r = l;
    out.N = l + 2;
    out.declared_birational = c.declared_birational;
    for (int j = 0; j <= c.r; ++j) {
        if (in_block[j]) continue;
        // coefficient vector x: x[pivot_rows[k]] = -(w_j adj(T))_k, x[j] = det T
        std::vector<BiPoly> x(c.r + 1);
        for (int k = 0; k < cols; ++k) {
            BiPoly acc;
            for (int m = 0; m < cols; ++m) acc = acc + W[j][m] * adjT[m][k];
            x[pivot_rows[k]] = -acc;
        }
        x[j] = detT;
        std::vector<BiPoly> z(c.N + 1);
        for (int col = 0; col <= c.N; ++col) {
            BiPoly acc;
            for (int i = 0; i <= c.r; ++i) {
                if (x[i].is_zero()) continue;
                acc = acc + x[i] * c.rows[i][col];
            }
            z[col] = acc;
        }
        BiPoly content;
        for (const auto& e : z) {
            if (e.is_zero()) continue;
            content = content.is_zero() ? e : bigcd(content, e);
            if (content.is_constant()) break;
        }
        if (!content.is_zero() && !content.is_constant())
            for (auto& e : z)
                if (!e.is_zero()) e = e.divexact(content);
        std::vector<BiPoly> y(l + 3);
        for (size_t k = 0; k < lpivots.size(); ++k) y[k] = z[lpivots[k]];
        out.rows.push_back(std::move(y));
    }
    // The sectioned rows must span an l-plane generically.
    bool validated = false;
    for (int k = 0; k < 12 && !validated; ++k) {
        try {
            eval_chart(out, smp.rand_rat(), smp.rand_rat());
            validated = true;
        } catch (const BasePointError&) {
        }
    }
    if (!validated) throw NonGenericSection("sectioned chart is rank-deficient");
    // ... and still sweep a two-parameter family (sectioning by a fiber span
    // collapses the image to a curve).
    {
        std::vector<BiPoly> pl = maximal_minors(out.rows);
        std::vector<BiPoly> dpl_s, dpl_t;
        for (const auto& p : pl) {
            dpl_s.push_back(p.dds());
            dpl_t.push_back(p.ddt());
        }
        bool two_dim = false;
        for (int k = 0; k < 8 && !two_dim; ++k) {
            Rat s0 = smp.rand_rat(), t0 = smp.rand_rat();
            Mat jac(3, int(pl.size()));
            for (size_t j = 0; j < pl.size(); ++j) {
                jac.at(0, int(j)) = pl[j].eval(s0, t0);
                jac.at(1, int(j)) = dpl_s[j].eval(s0, t0);
                jac.at(2, int(j)) = dpl_t[j].eval(s0, t0);
            }
            if (rank(jac) == 3) two_dim = true;
        }
        if (!two_dim) throw NonGenericSection("sectioned family is not two-dimensional");
    }
    return out;
}

Chart section_random(const Chart& c, int l, Sampler& smp, const Config& cfg) {
    for (int i = 0; i < std::max(2, cfg.retry_limit); ++i) {
        Mat m = smp.rand_matrix(l + 3, c.N + 1);
        if (rank(m) != l + 3) continue;
        try {
            return section(c, Subspace::span(c.N, m), smp);
        } catch (const NonGenericSection&) {
        }
    }
    throw GenericityFailure("no generic section subspace found");
}

namespace {

bool fixed_candidate_verified(const Chart& c, const Subspace& T) {
    for (int v = 0; v < T.basis().rows(); ++v) {
        std::vector<std::vector<BiPoly>> stacked = c.rows;
        std::vector<BiPoly> row(c.N + 1);
        for (int j = 0; j <= c.N; ++j) row[j] = BiPoly::constant(T.basis().at(v, j));
        stacked.push_back(std::move(row));
        for (const auto& m : maximal_minors(stacked))
            if (!m.is_zero()) return false;
    }
    return true;
}

} // namespace

std::optional<Subspace> fixed_locus(const Chart& c, Sampler& smp) {
    std::optional<Subspace> T;
    int stable = 0;
    for (int iter = 0; iter < 60; ++iter) {
        Subspace fiber = [&] {
            while (true) {
                try {
                    return eval_chart(c, smp.rand_rat(), smp.rand_rat());
                } catch (const BasePointError&) {
                }
            }
        }();
        if (!T) {
            T = fiber;
            continue;
        }
        auto m = meet(*T, fiber);
        if (!m) return std::nullopt;
        if (*m == *T) ++stable;
        else {
            T = *m;
            stable = 0;
        }
        if (stable >= 2) {
            if (fixed_candidate_verified(c, *T)) return T;
            stable = 0;
        }
    }
    throw GenericityFailure("fixed locus did not stabilize");
}

Chart cone_embed(const Chart& c, const std::optional<Subspace>& T) {
    if (!T) return c;
    if (c.N != c.r + 2) throw std::invalid_argument("cone_embed source must live in P^(k+2)");
    int k = c.r;
    int tdim = T->dim();
    int r = k + tdim + 1;
    if (T->ambient_dim() != r + 2)
        throw std::invalid_argument("cone_embed ambient bookkeeping mismatch");
    std::vector<int> pivots;
    rref(T->basis(), &pivots);
    std::vector<bool> is_piv(r + 3, false);
    for (int p : pivots) is_piv[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < r + 3; ++j)
        if (!is_piv[j]) free_cols.push_back(j);
    if (int(free_cols.size()) != k + 3)
        throw std::invalid_argument("cone_embed dimension bookkeeping mismatch");
    Chart out;
    out.r = r;
    out.N = r + 2;
    out.declared_birational = c.declared_birational;
    for (const auto& row : c.rows) {
        std::vector<BiPoly> wide(r + 3);
        for (int j = 0; j <= c.N; ++j) wide[free_cols[j]] = row[j];
        out.rows.push_back(std::move(wide));
    }
    for (int i = 0; i < T->basis().rows(); ++i) {
        std::vector<BiPoly> wide(r + 3);
        for (int j = 0; j < r + 3; ++j) wide[j] = BiPoly::constant(T->basis().at(i, j));
        out.rows.push_back(std::move(wide));
    }
    return out;
}

long long containment_count(const Chart& c, const Subspace& target, bool* positive_dimensional) {
    Mat basis = target.basis();
    CompletionResult res =
        count_completion(c, [&basis](const Chart& ch) { return containment_system(ch, basis); });
    if (positive_dimensional) *positive_dimensional = res.posdim;
    return res.posdim ? 0 : res.distinct;
}

} // namespace congruence
