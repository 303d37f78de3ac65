#include "congruence/chart.hpp"

#include <stdexcept>

#include <json.hpp>

#include "congruence/errors.hpp"
#include "congruence/ring_det.hpp"

namespace congruence {

Mat Chart::eval(const Rat& s0, const Rat& t0) const {
    Mat m(int(rows.size()), N + 1);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j <= N; ++j) m.at(int(i), j) = rows[i][j].eval(s0, t0);
    return m;
}

Chart Chart::swapped(bool in_s, bool in_t) const {
    Chart out = *this;
    for (auto& row : out.rows) {
        int ds = 0, dt = 0;
        for (const auto& e : row) {
            ds = std::max(ds, e.degs());
            dt = std::max(dt, e.degt());
        }
        for (auto& e : row) {
            if (in_s) e = e.reversed_s(ds);
            if (in_t) e = e.reversed_t(dt);
        }
    }
    return out;
}

Chart Chart::reparametrized(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
    if (is_zero(a) || is_zero(c)) throw std::invalid_argument("degenerate reparametrization");
    Chart out = *this;
    for (auto& row : out.rows)
        for (auto& e : row) e = e.compose_affine(a, b, c, d);
    return out;
}

Chart Chart::row_transformed(const Mat& g) const {
    int k = int(rows.size());
    if (g.rows() != k || g.cols() != k) throw std::invalid_argument("row transform shape");
    Chart out = *this;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= N; ++j) {
            BiPoly acc;
            for (int l = 0; l < k; ++l) acc = acc + rows[l][j].scaled(g.at(i, l));
            out.rows[i][j] = acc;
        }
    return out;
}

Chart Chart::coordinate_transformed(const Mat& g) const {
    if (g.rows() != N + 1 || g.cols() != N + 1)
        throw std::invalid_argument("coordinate transform shape");
    Chart out = *this;
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j <= N; ++j) {
            BiPoly acc;
            for (int l = 0; l <= N; ++l) acc = acc + rows[i][l].scaled(g.at(l, j));
            out.rows[i][j] = acc;
        }
    return out;
}

std::string Chart::to_json() const {
    nlohmann::ordered_json j;
    j["r"] = r;
    j["N"] = N;
    j["declared_birational"] = declared_birational;
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (const auto& e : row) {
            nlohmann::ordered_json jentry = nlohmann::ordered_json::array();
            for (const auto& [ds, dt, v] : e.monomials())
                jentry.push_back({ds, dt, rat_str(v)});
            jrow.push_back(jentry);
        }
        jrows.push_back(jrow);
    }
    j["rows"] = jrows;
    return j.dump(2) + "\n";
}

Chart Chart::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Chart c;
    c.r = j.at("r").get<int>();
    c.N = j.at("N").get<int>();
    c.declared_birational = j.value("declared_birational", false);
    const auto& jrows = j.at("rows");
    if (int(jrows.size()) != c.r + 1) throw std::invalid_argument("chart rows count mismatch");
    for (const auto& jrow : jrows) {
        if (int(jrow.size()) != c.N + 1)
            throw std::invalid_argument("chart row width mismatch");
        std::vector<BiPoly> row;
        for (const auto& jentry : jrow) {
            std::vector<std::tuple<int, int, Rat>> ms;
            for (const auto& jm : jentry) {
                int ds = jm.at(0).get<int>();
                int dt = jm.at(1).get<int>();
                Rat v = rat_parse(jm.at(2).get<std::string>());
                if (ds < 0 || dt < 0) throw std::invalid_argument("negative exponent");
                ms.emplace_back(ds, dt, v);
            }
            row.push_back(BiPoly::from_monomials(ms));
        }
        c.rows.push_back(std::move(row));
    }
    return c;
}

Subspace eval_chart(const Chart& c, const Rat& s0, const Rat& t0) {
    Mat m = c.eval(s0, t0);
    if (rank(m) != c.r + 1)
        throw BasePointError("chart rows drop rank at (" + rat_str(s0) + ", " + rat_str(t0) + ")");
    return Subspace::span(c.N, m);
}

Rat Sampler::rand_rat() { return rand_rat(height_); }

Rat Sampler::rand_rat(long height) {
    std::uniform_int_distribution<long> num(-height, height);
    std::uniform_int_distribution<long> den(1, height);
    return rat(num(gen_), den(gen_));
}

long Sampler::rand_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen_);
}

std::vector<Rat> Sampler::rand_vector(int len) {
    std::vector<Rat> v(len);
    for (auto& x : v) x = rand_rat();
    return v;
}

Mat Sampler::rand_matrix(int rows, int cols) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rand_rat();
    return m;
}

std::vector<BiPoly> maximal_minors(const std::vector<std::vector<BiPoly>>& m) {
    int r = int(m.size());
    int c = r == 0 ? 0 : int(m[0].size());
    std::vector<BiPoly> out;
    if (r <= c) {
        for (const auto& cols : k_subsets(c, r)) {
            std::vector<std::vector<BiPoly>> sub(r, std::vector<BiPoly>(r));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) sub[i][j] = m[i][cols[j]];
            out.push_back(det_bareiss(std::move(sub)));
        }
    } else {
        for (const auto& rows : k_subsets(r, c)) {
            std::vector<std::vector<BiPoly>> sub(c, std::vector<BiPoly>(c));
            for (int i = 0; i < c; ++i)
                for (int j = 0; j < c; ++j) sub[i][j] = m[rows[i]][j];
            out.push_back(det_bareiss(std::move(sub)));
        }
    }
    return out;
}

std::vector<UPoly> maximal_minors_u(const std::vector<std::vector<UPoly>>& m) {
    int r = int(m.size());
    int c = r == 0 ? 0 : int(m[0].size());
    std::vector<UPoly> out;
    if (r <= c) {
        for (const auto& cols : k_subsets(c, r)) {
            std::vector<std::vector<UPoly>> sub(r, std::vector<UPoly>(r));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) sub[i][j] = m[i][cols[j]];
            out.push_back(det_bareiss(std::move(sub)));
        }
    } else {
        for (const auto& rows : k_subsets(r, c)) {
            std::vector<std::vector<UPoly>> sub(c, std::vector<UPoly>(c));
            for (int i = 0; i < c; ++i)
                for (int j = 0; j < c; ++j) sub[i][j] = m[rows[i]][j];
            out.push_back(det_bareiss(std::move(sub)));
        }
    }
    return out;
}

std::vector<BiPoly> chart_rank_minors(const Chart& c) {
    return maximal_minors(c.rows);
}

std::vector<BiPoly> chart_plucker(const Chart& c) {
    std::vector<BiPoly> pl = maximal_minors(c.rows);
    BiPoly content;
    for (const auto& p : pl) {
        if (p.is_zero()) continue;
        content = content.is_zero() ? p : bigcd(content, p);
        if (content.is_constant()) break;
    }
    if (!content.is_zero() && !content.is_constant())
        for (auto& p : pl)
            if (!p.is_zero()) p = p.divexact(content);
    return pl;
}

} // namespace congruence
