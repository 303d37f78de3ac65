#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "congruence/catalog.hpp"
#include "congruence/classify.hpp"

using namespace congruence;

namespace {

struct Options {
    unsigned long long seed = 1729;
    long height = 10000;
    int retries = 6;
    std::string output;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty() || opt.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(opt.output, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output path: " + opt.output);
    os << text;
}

Chart load_chart(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::invalid_argument("cannot read chart file: " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return Chart::from_json(ss.str());
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, std::string> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

int require_int(const std::map<std::string, std::string>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("missing parameter " + key);
    return std::stoi(it->second);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::vector<UPoly> parse_divisor(const std::string& text) {
    std::vector<UPoly> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '|')) {
        std::vector<Rat> coeffs;
        if (!part.empty() && part != "0") {
            std::stringstream ps(part);
            std::string tok;
            while (std::getline(ps, tok, ',')) coeffs.push_back(rat_parse(tok));
        }
        out.push_back(UPoly(std::move(coeffs)));
    }
    return out;
}

Chart construct_chart(const std::string& family, const std::map<std::string, std::string>& params,
                      Sampler& smp, const Config& cfg) {
    if (family == "pencil-plane") return pencil_plane_default(require_int(params, "r"));
    if (family == "case1") return case1(require_int(params, "r"));
    if (family == "case2-scroll") {
        ScrollSpec spec;
        auto it = params.find("parts");
        if (it == params.end()) throw std::invalid_argument("missing parameter parts");
        spec.parts = parse_int_list(it->second);
        auto dv = params.find("divisor");
        if (dv != params.end()) spec.divisor = parse_divisor(dv->second);
        return case2_scroll(spec, smp).chart;
    }
    if (family == "case2-nodal") return case2_nodal().chart;
    if (family == "case2-normal")
        return case2_normal(require_int(params, "n"), require_int(params, "e")).chart;
    if (family == "case3") return case3(require_int(params, "n")).chart;
    if (family == "case3-section")
        return case3_section(require_int(params, "n"), require_int(params, "r"), smp, cfg);
    if (family == "cone-embed") {
        auto it = params.find("chart");
        if (it == params.end()) throw std::invalid_argument("missing parameter chart");
        Chart base = load_chart(it->second);
        int tdim = require_int(params, "tdim");
        if (tdim < 0) return base;
        int r = base.r + tdim + 1;
        Mat trows(tdim + 1, r + 3);
        for (int i = 0; i <= tdim; ++i) trows.at(i, base.N + 1 + i) = 1;
        return cone_embed(base, Subspace::span(r + 2, trows));
    }
    throw std::invalid_argument("unknown family: " + family);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and classification of order-1 congruences of r-planes"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--seed", opt.seed, "PRNG seed");
    app.add_option("--height", opt.height, "height bound for random rationals")
        ->check(CLI::Range(100L, 1000000000L));
    app.add_option("--retries", opt.retries, "retry budget for randomized draws")
        ->check(CLI::Range(1, 64));
    app.add_option("--output", opt.output, "output path (default stdout)");

    auto* c_construct = app.add_subcommand("construct", "emit a catalog chart as JSON");
    std::string family;
    std::vector<std::string> kvs;
    c_construct->add_option("family", family, "family name")->required();
    c_construct->add_option("params", kvs, "key=value parameters");

    auto* c_invars = app.add_subcommand("invariants", "order, class, degree, fixed locus");
    std::string chart_path_i;
    c_invars->add_option("chart", chart_path_i, "chart JSON path")->required();

    auto* c_classify = app.add_subcommand("classify", "full classification report");
    std::string chart_path_c;
    bool jacobian = false;
    c_classify->add_option("chart", chart_path_c, "chart JSON path")->required();
    c_classify->add_flag("--jacobian-check", jacobian, "cross-validate by differential rank");

    auto* c_focal = app.add_subcommand("focal", "focal quadric data at one fiber");
    std::string chart_path_f, s_text = "0", t_text = "0";
    c_focal->add_option("chart", chart_path_f, "chart JSON path")->required();
    c_focal->add_option("--s", s_text, "s parameter, rational p/q")->required();
    c_focal->add_option("--t", t_text, "t parameter, rational p/q")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Config cfg;
    cfg.seed = opt.seed;
    cfg.rational_height_bound = opt.height;
    cfg.retry_limit = opt.retries;
    Sampler smp(cfg.seed, cfg.rational_height_bound);

    try {
        if (c_construct->parsed()) {
            Chart c = construct_chart(family, parse_params(kvs), smp, cfg);
            emit(opt, c.to_json());
        } else if (c_invars->parsed()) {
            Chart c = load_chart(chart_path_i);
            nlohmann::ordered_json j;
            j["order"] = order(c, smp, cfg);
            j["class"] = class_(c, smp, cfg);
            j["plucker_degree"] = plucker_degree(c, smp, cfg);
            auto T = fixed_locus(c, smp);
            j["fixed_dim"] = T ? T->dim() : -1;
            emit(opt, j.dump(2) + "\n");
        } else if (c_classify->parsed()) {
            Chart c = load_chart(chart_path_c);
            Report rep = classify(c, smp, cfg, jacobian);
            emit(opt, report_to_json(rep));
        } else if (c_focal->parsed()) {
            Chart c = load_chart(chart_path_f);
            Rat s0 = rat_parse(s_text), t0 = rat_parse(t_text);
            FocalQuadric q = focal_quadric(c, s0, t0);
            QuadricSplit sp = split_quadric(q);
            nlohmann::ordered_json j;
            nlohmann::ordered_json gram = nlohmann::ordered_json::array();
            for (int i = 0; i < q.gram.rows(); ++i) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (int k = 0; k < q.gram.cols(); ++k) row.push_back(rat_str(q.gram.at(i, k)));
                gram.push_back(row);
            }
            j["gram"] = gram;
            j["rank"] = quadric_rank(q);
            j["split"] = split_kind_name(sp.kind);
            nlohmann::ordered_json pts = nlohmann::ordered_json::array();
            for (const auto& cov : sp.components) {
                Subspace h = realize_fiber_hyperplane(q, cov);
                for (int i = 0; i < h.basis().rows(); ++i) {
                    nlohmann::ordered_json pt = nlohmann::ordered_json::array();
                    for (int k = 0; k < h.basis().cols(); ++k)
                        pt.push_back(rat_str(h.basis().at(i, k)));
                    pts.push_back(pt);
                }
            }
            j["sample_points"] = pts;
            emit(opt, j.dump(2) + "\n");
        }
    } catch (const DegenerateCongruence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const GenericityFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const BasePointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
