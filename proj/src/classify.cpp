#include "congruence/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "congruence/ring_det.hpp"

namespace congruence {

std::string case_tag_name(CaseTag t) {
    switch (t) {
        case CaseTag::I: return "I";
        case CaseTag::II: return "II";
        case CaseTag::III: return "III";
        case CaseTag::plane_pencil: return "plane_pencil";
    }
    return "?";
}

std::string smooth_name(SmoothVerdict v) {
    switch (v) {
        case SmoothVerdict::smooth: return "smooth";
        case SmoothVerdict::singular: return "singular";
        case SmoothVerdict::undetermined: return "undetermined";
    }
    return "?";
}

std::string report_to_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["order"] = rep.order;
    j["class"] = rep.class_;
    j["fixed_dim"] = rep.fixed_dim;
    j["case_tag"] = case_tag_name(rep.case_tag);
    j["focal_summary"] = {{"generic_rank", rep.generic_quadric_rank},
                          {"split", rep.split_outcome}};
    j["smooth"] = smooth_name(rep.smooth);
    j["diagnostics"] = rep.diagnostics;
    return j.dump(2) + "\n";
}

namespace {

std::vector<UPoly> content_cleared(std::vector<UPoly> row) {
    UPoly g;
    for (const auto& e : row) {
        if (e.is_zero()) continue;
        g = g.is_zero() ? e.monic() : gcd(g, e);
        if (g.deg() == 0) break;
    }
    if (!g.is_zero() && g.deg() > 0)
        for (auto& e : row)
            if (!e.is_zero()) e = e.divexact(g);
    return row;
}

} // namespace

std::vector<std::vector<UPoly>> generator_family(const Chart& c, Sampler& smp) {
    int r = c.r;
    // Fast path: the chart already carries the generator as its s-free rows.
    std::vector<std::vector<UPoly>> sfree;
    for (const auto& row : c.rows) {
        bool ok = true;
        for (const auto& e : row)
            if (e.degs() > 0) ok = false;
        if (!ok) continue;
        std::vector<UPoly> g(c.N + 1);
        for (int j = 0; j <= c.N; ++j) g[j] = row[j].s_coeff(0);
        sfree.push_back(std::move(g));
    }
    if (int(sfree.size()) == r) {
        Mat probe(r, c.N + 1);
        Rat t0 = smp.rand_rat(50);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j <= c.N; ++j) probe.at(i, j) = sfree[i][j].eval(t0);
        if (rank(probe) == r) return sfree;
    }
    // Fallback: meet of two members of the same pencil, computed symbolically.
    for (int attempt = 0; attempt < 10; ++attempt) {
        Rat s1 = smp.rand_rat(60), s2 = smp.rand_rat(60);
        if (s1 == s2) continue;
        auto eval_rows = [&](const Rat& sv) {
            std::vector<std::vector<UPoly>> out;
            for (const auto& row : c.rows) {
                std::vector<UPoly> o(c.N + 1);
                for (int j = 0; j <= c.N; ++j) o[j] = row[j].eval_s(sv);
                out.push_back(std::move(o));
            }
            return out;
        };
        auto A = eval_rows(s1);
        auto B = eval_rows(s2);
        // Covectors of the linear conditions "v lies in the row space of B".
        int ncols = c.N + 1;
        auto subsets = k_subsets(ncols, c.r + 2);
        std::vector<std::vector<UPoly>> covectors;
        for (const auto& J : subsets) {
            std::vector<UPoly> w(ncols);
            for (size_t pos = 0; pos < J.size(); ++pos) {
                std::vector<std::vector<UPoly>> sub;
                for (int i = 0; i <= c.r; ++i) {
                    std::vector<UPoly> rw;
                    for (size_t q = 0; q < J.size(); ++q)
                        if (q != pos) rw.push_back(B[i][J[q]]);
                    sub.push_back(std::move(rw));
                }
                UPoly d = det_bareiss(std::move(sub));
                w[J[pos]] = (int(c.r + 1 + pos) % 2 == 0) ? d : -d;
            }
            covectors.push_back(std::move(w));
        }
        // C[i][k] = (row i of A) . covector_k ; generically rank one.
        std::vector<std::vector<UPoly>> C(c.r + 1, std::vector<UPoly>(covectors.size()));
        for (int i = 0; i <= c.r; ++i)
            for (size_t k = 0; k < covectors.size(); ++k) {
                UPoly acc;
                for (int j = 0; j < ncols; ++j) {
                    if (A[i][j].is_zero() || covectors[k][j].is_zero()) continue;
                    acc = acc + A[i][j] * covectors[k][j];
                }
                C[i][k] = acc;
            }
        Rat tprobe = smp.rand_rat(60);
        int kstar = -1, j0 = -1;
        for (size_t k = 0; k < covectors.size() && kstar < 0; ++k)
            for (int i = 0; i <= c.r; ++i)
                if (sgn(C[i][k].eval(tprobe)) != 0) {
                    kstar = int(k);
                    j0 = i;
                    break;
                }
        if (kstar < 0) continue;
        std::vector<std::vector<UPoly>> gens;
        for (int i = 0; i <= c.r; ++i) {
            if (i == j0) continue;
            // kernel vector  c_{j0} e_i - c_i e_{j0}
            std::vector<UPoly> z(ncols);
            for (int col = 0; col < ncols; ++col) {
                UPoly acc = C[j0][kstar] * A[i][col] - C[i][kstar] * A[j0][col];
                z[col] = acc;
            }
            gens.push_back(content_cleared(std::move(z)));
        }
        Mat probe(int(gens.size()), ncols);
        for (size_t i = 0; i < gens.size(); ++i)
            for (int j = 0; j < ncols; ++j) probe.at(int(i), j) = gens[i][j].eval(tprobe);
        if (rank(probe) != r) continue;
        return gens;
    }
    throw GenericityFailure("generator family extraction failed");
}

long long generators_in_plane(const Chart& c, const Subspace& plane, Sampler& smp) {
    auto gens = generator_family(c, smp);
    auto conditions_of = [&](const std::vector<std::vector<UPoly>>& rows) {
        std::vector<UPoly> conds;
        for (const auto& g : rows) {
            std::vector<std::vector<UPoly>> stacked;
            for (int i = 0; i < plane.basis().rows(); ++i) {
                std::vector<UPoly> rw;
                for (int j = 0; j < plane.basis().cols(); ++j)
                    rw.push_back(UPoly::constant(plane.basis().at(i, j)));
                stacked.push_back(std::move(rw));
            }
            stacked.push_back(g);
            for (auto& m : maximal_minors_u(stacked)) conds.push_back(std::move(m));
        }
        return conds;
    };
    auto gcd_of = [](const std::vector<UPoly>& conds, bool* all_zero) {
        UPoly g;
        bool any = false;
        for (const auto& m : conds) {
            if (m.is_zero()) continue;
            any = true;
            g = g.is_zero() ? m.monic() : gcd(g, m);
            if (g.deg() == 0) break;
        }
        *all_zero = !any;
        return g;
    };
    bool all_zero = false;
    UPoly g = gcd_of(conditions_of(gens), &all_zero);
    if (all_zero)
        throw DegenerateCongruence("generator family lies inside the plane identically");
    long long total = g.deg();
    // base-curve parameter at infinity
    std::vector<std::vector<UPoly>> rev = gens;
    for (auto& row : rev) {
        int d = 0;
        for (const auto& e : row) d = std::max(d, e.deg());
        for (auto& e : row)
            if (!e.is_zero()) e = e.reversed(d);
    }
    bool rev_zero = false;
    UPoly grev = gcd_of(conditions_of(rev), &rev_zero);
    if (!rev_zero && grev.deg() > 0) {
        int mult0 = 0;
        while (mult0 <= grev.deg() && sgn(grev.coeff(mult0)) == 0) ++mult0;
        total += mult0;
    }
    return total;
}

namespace {

struct SampledSplit {
    FocalQuadric quadric;
    QuadricSplit split;
};

std::vector<SampledSplit> sample_splits(const Chart& c, int want, Sampler& smp) {
    std::vector<SampledSplit> out;
    for (int i = 0; i < 30 * want && int(out.size()) < want; ++i) {
        try {
            FocalQuadric q = focal_quadric(c, smp.rand_rat(200), smp.rand_rat(200));
            QuadricSplit sp = split_quadric(q);
            out.push_back({std::move(q), std::move(sp)});
        } catch (const BasePointError&) {
        } catch (const GenericityFailure&) {
        } catch (const std::runtime_error&) {
        }
    }
    if (int(out.size()) < want)
        throw GenericityFailure("could not sample enough focal quadrics");
    return out;
}

} // namespace

std::vector<Subspace> recover_focal_plane_candidates(const Chart& c, Sampler& smp) {
    int r = c.r;
    int want = std::max(r + 3, 5);
    auto splits = sample_splits(c, want, smp);
    for (const auto& s : splits) {
        if (s.split.kind == SplitKind::irreducible)
            throw GenericityFailure("focal quadric is irreducible at a generic parameter");
        if (s.split.kind == SplitKind::conjugate_pair)
            throw GenericityFailure("focal components are conjugate over Q");
    }
    std::vector<std::vector<Subspace>> comps;
    for (const auto& s : splits) {
        std::vector<Subspace> reals;
        for (const auto& cov : s.split.components)
            reals.push_back(realize_fiber_hyperplane(s.quadric, cov));
        comps.push_back(std::move(reals));
    }
    // Beam over partial joins: a fixed plane must absorb one component from
    // every sampled parameter without growing past dimension r.
    std::vector<Subspace> beam = comps[0];
    for (size_t i = 1; i < comps.size() && !beam.empty(); ++i) {
        std::vector<Subspace> next;
        for (const Subspace& cand : beam)
            for (const Subspace& comp : comps[i]) {
                Subspace j = join(cand, comp);
                if (j.dim() > r) continue;
                bool dup = false;
                for (const auto& seen : next)
                    if (seen == j) dup = true;
                if (!dup && int(next.size()) < 32) next.push_back(j);
            }
        beam = std::move(next);
    }
    std::vector<Subspace> candidates;
    for (const Subspace& cand : beam)
        if (cand.dim() == r) candidates.push_back(cand);
    return candidates;
}

Subspace recover_focal_plane(const Chart& c, Sampler& smp) {
    auto candidates = recover_focal_plane_candidates(c, smp);
    if (candidates.empty())
        throw GenericityFailure("no fixed planar focal component found");
    return candidates.front();
}

Report classify(const Chart& c, Sampler& smp, const Config& cfg, bool jacobian_check) {
    Report rep;
    rep.order = order(c, smp, cfg);
    if (rep.order != 1)
        throw std::invalid_argument("classification requires a congruence of order 1");
    auto T = fixed_locus(c, smp);
    rep.fixed_dim = T ? T->dim() : -1;
    int r = c.r;
    if (rep.fixed_dim == r - 1) {
        rep.case_tag = CaseTag::plane_pencil;
        rep.class_ = class_(c, smp, cfg);
        rep.generic_quadric_rank = 0;
        rep.split_outcome = "none";
        rep.smooth = SmoothVerdict::smooth;
        rep.diagnostics.push_back("every fiber contains the fixed (r-1)-plane");
        return rep;
    }
    Chart red = c;
    if (T) {
        int k = r - rep.fixed_dim - 1;
        red = section_random(c, k, smp, cfg);
        rep.diagnostics.push_back("reduced by the fixed locus to a congruence of " +
                                  std::to_string(k) + "-planes");
    }
    // Generic focal rank: max over five samples, two confirming extras on
    // disagreement (the rank only drops on closed subsets).
    std::vector<int> ranks;
    {
        auto splits = sample_splits(red, 5, smp);
        for (const auto& s : splits) ranks.push_back(quadric_rank(s.quadric));
        if (*std::min_element(ranks.begin(), ranks.end()) !=
            *std::max_element(ranks.begin(), ranks.end())) {
            auto extra = sample_splits(red, 2, smp);
            for (const auto& s : extra) ranks.push_back(quadric_rank(s.quadric));
        }
    }
    int grank = *std::max_element(ranks.begin(), ranks.end());
    rep.generic_quadric_rank = grank;
    {
        std::string d = "focal ranks:";
        for (int v : ranks) d += " " + std::to_string(v);
        rep.diagnostics.push_back(d);
    }
    rep.class_ = class_(red, smp, cfg);
    if (grank >= 3) {
        rep.case_tag = CaseTag::I;
        rep.split_outcome = "irreducible";
        rep.smooth = SmoothVerdict::smooth;
    } else if (grank == 1) {
        rep.case_tag = CaseTag::III;
        rep.split_outcome = "double_hyperplane";
        rep.smooth = rep.class_ >= 2 ? SmoothVerdict::singular : SmoothVerdict::smooth;
        if (rep.class_ >= 2) rep.diagnostics.push_back("cone vertex is a singular point");
    } else {
        try {
            auto candidates = recover_focal_plane_candidates(red, smp);
            if (candidates.empty())
                throw GenericityFailure("no fixed planar focal component found");
            rep.case_tag = CaseTag::II;
            rep.split_outcome = "two_hyperplanes";
            // The scroll side must not lie inside the chosen plane; with two
            // fixed planes (the line-pair family) the other candidate works.
            long long g = -1;
            for (const Subspace& pi : candidates) {
                try {
                    g = generators_in_plane(red, pi, smp);
                    break;
                } catch (const DegenerateCongruence&) {
                }
            }
            if (g < 0)
                throw DegenerateCongruence("scroll component lies inside every fixed plane");
            rep.diagnostics.push_back("generators inside the fixed plane: " + std::to_string(g));
            rep.smooth = g <= 1 ? SmoothVerdict::smooth : SmoothVerdict::singular;
        } catch (const GenericityFailure& e) {
            if (red.r == 1) {
                // On lines the focal pair is conjugate at a generic parameter
                // exactly when no component sweeps a fixed line.
                rep.case_tag = CaseTag::I;
                rep.split_outcome = "conjugate_pair";
                rep.smooth = SmoothVerdict::smooth;
                rep.diagnostics.push_back("focal points sweep an irreducible curve");
            } else {
                rep.case_tag = CaseTag::II;
                rep.split_outcome = "conjugate_pair";
                rep.smooth = SmoothVerdict::undetermined;
                rep.diagnostics.push_back(std::string("focal split undetermined: ") + e.what());
            }
        }
    }
    int r_reduced = r - rep.fixed_dim - 1;
    if (rep.class_ < r_reduced - 1)
        rep.diagnostics.push_back("warning: class below the reduced-dimension bound");
    if (jacobian_check) {
        std::vector<BiPoly> pl = chart_plucker(c);
        std::vector<BiPoly> dpl_s, dpl_t;
        for (const auto& p : pl) {
            dpl_s.push_back(p.dds());
            dpl_t.push_back(p.ddt());
        }
        int failures = 0, checked = 0;
        for (int i = 0; i < 80 && checked < 25; ++i) {
            Rat s0 = smp.rand_rat(), t0 = smp.rand_rat();
            Mat jac(3, int(pl.size()));
            bool allz = true;
            for (size_t j = 0; j < pl.size(); ++j) {
                jac.at(0, int(j)) = pl[j].eval(s0, t0);
                jac.at(1, int(j)) = dpl_s[j].eval(s0, t0);
                jac.at(2, int(j)) = dpl_t[j].eval(s0, t0);
                if (!is_zero(jac.at(0, int(j)))) allz = false;
            }
            if (allz) continue;
            ++checked;
            if (rank(jac) != 3) ++failures;
        }
        rep.diagnostics.push_back("jacobian immersion failures: " + std::to_string(failures) +
                                  "/" + std::to_string(checked));
    }
    return rep;
}

} // namespace congruence
