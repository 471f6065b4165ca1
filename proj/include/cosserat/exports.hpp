#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include "cosserat/material_io.hpp"
#include "cosserat/stability.hpp"
#include "cosserat/symbol.hpp"

namespace cosserat {

namespace detail_io {

/// Locale-independent shortest round-trip formatting.
inline std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace detail_io

/// Writes through a temporary file in the target directory, then renames.
inline void write_text_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

inline Json vec3_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

inline Json mat3_json(const Mat3& m) {
    Json rows = Json::array();
    for (int r = 0; r < 3; ++r) rows.push_back(Json::array({m(r, 0), m(r, 1), m(r, 2)}));
    return rows;
}

inline Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

inline Json condition_json(const ConditionResult& r) {
    Json j;
    j["verdict"] = r.verdict;
    j["margin"] = r.margin;
    j["boundary"] = r.boundary;
    Json w;
    w["n"] = vec3_json(r.witness_n);
    if (r.witness_q) w["q"] = vec3_json(*r.witness_q);
    if (r.witness_tensor) w["tensor"] = mat3_json(*r.witness_tensor);
    j["witness"] = w;
    return j;
}

inline Json report_json(const StabilityReport& r) {
    Json j;
    j["conditions"] = {{"PD_C", condition_json(r.pd_cauchy)},
                       {"PD_B", condition_json(r.pd_cosserat)},
                       {"SE_C", condition_json(r.se_cauchy)},
                       {"SE_B", condition_json(r.se_cosserat)},
                       {"SSE_C", condition_json(r.sse_cauchy)},
                       {"SSE_B", condition_json(r.sse_cosserat)},
                       {"E", condition_json(r.ellipticity)},
                       {"WP", condition_json(r.wave_propagation)}};
    j["hierarchy_consistent"] = r.hierarchy_consistent;
    j["notes"] = r.notes;
    j["options"] = {{"sweep_density", r.options.sweep_density},
                    {"refine_cells", r.options.refine_cells},
                    {"refine_rounds", r.options.refine_rounds},
                    {"tolerance", r.options.tol_rel},
                    {"boundary_band", r.options.boundary_band}};
    return j;
}

inline Json antiplane_json(const AntiplaneMaterial& m, const AntiplaneConditions& c) {
    Json j;
    j["moduli"] = {{"c44", m.c44}, {"c55", m.c55}, {"b1", m.b1},
                   {"b2", m.b2},   {"b3", m.b3},   {"b4", m.b4}};
    j["derived"] = {{"b0", m.b0()}, {"beta", m.beta()}, {"gamma", m.gamma()}};
    j["conditions"] = {{"PD_C", c.pd_cauchy}, {"PD_B", c.pd_cosserat},
                       {"SE_C", c.se_cauchy}, {"SE_B", c.se_cosserat},
                       {"E", c.ellipticity},  {"WP", c.wave_propagation}};
    RegimeResult reg = classify(m.beta(), m.gamma());
    j["regime"] = reg.label();
    Json roots = Json::array();
    for (const Complex& z : reg.roots) roots.push_back(complex_json(z));
    j["characteristic_roots"] = roots;
    Json normals = Json::array();
    for (const Vec2& nn : reg.discontinuity_normals)
        normals.push_back(Json::array({nn.x(), nn.y()}));
    j["discontinuity_normals"] = normals;
    return j;
}

inline Json symbol_diag_json(const SymbolEvaluation& ev) {
    Json j;
    j["n"] = vec3_json(ev.n);
    j["k"] = ev.k;
    j["tau_nu"] = ev.tau_nu;
    j["lambda2"] = ev.lambda2;
    j["lambda3"] = ev.lambda3;
    j["det_total"] = ev.det_total;
    j["det_modified"] = ev.det_modified;
    j["modifier"] = ev.modifier;
    j["det_dn"] = complex_json(ev.det_dn);
    return j;
}

/// CSV with one row per (wavenumber, branch): fixed column order, period
/// decimal separator.
inline std::string dispersion_csv(const std::vector<WaveSolution>& solutions) {
    std::string out = "k,branch_index,omega_sq,V,d1,d2,d3\n";
    for (const WaveSolution& s : solutions)
        for (int b = 0; b < 3; ++b) {
            const WaveBranch& br = s.branches[static_cast<std::size_t>(b)];
            out += detail_io::fmt(s.wavenumber) + "," + std::to_string(b) + "," +
                   detail_io::fmt(br.omega_squared) + "," + detail_io::fmt(br.phase_velocity) +
                   "," + detail_io::fmt(br.amplitude[0]) + "," + detail_io::fmt(br.amplitude[1]) +
                   "," + detail_io::fmt(br.amplitude[2]) + "\n";
        }
    return out;
}

inline std::string sh_dispersion_csv(const std::vector<std::pair<double, ShDispersion>>& rows) {
    std::string out = "k,V_s,A33\n";
    for (const auto& [k, d] : rows)
        out += detail_io::fmt(k) + "," + detail_io::fmt(d.phase_velocity) + "," +
               detail_io::fmt(d.a33) + "\n";
    return out;
}

inline std::string regime_csv(const RegimeMap& map) {
    std::string out = "beta,gamma,label\n";
    for (int ib = 0; ib < map.res_beta; ++ib)
        for (int ig = 0; ig < map.res_gamma; ++ig)
            out += detail_io::fmt(map.beta_of(ib)) + "," + detail_io::fmt(map.gamma_of(ig)) +
                   "," + to_string(map.at(ib, ig)) + "\n";
    return out;
}

/// Structural SVG raster of the regime map: one rect per cell with a
/// class naming its regime, one polyline per analytic boundary curve, one
/// text label per regime present. Styling is fixed and documented so tests
/// can assert on element counts rather than pixels.
inline std::string regime_svg(const RegimeMap& map, int width = 720, int height = 720) {
    const std::map<Regime, std::string> fill = {{Regime::EI, "#4e79a7"},
                                                {Regime::EC, "#59a14f"},
                                                {Regime::H, "#e15759"},
                                                {Regime::P, "#f2be2b"}};
    auto x_of = [&](double beta) {
        return (beta - map.beta_min) / (map.beta_max - map.beta_min) * width;
    };
    auto y_of = [&](double gamma) {
        return height - (gamma - map.gamma_min) / (map.gamma_max - map.gamma_min) * height;
    };
    double cw = static_cast<double>(width) / map.res_beta;
    double ch = static_cast<double>(height) / map.res_gamma;

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    std::map<Regime, std::pair<double, double>> centroid;
    std::map<Regime, int> count;
    for (int ib = 0; ib < map.res_beta; ++ib)
        for (int ig = 0; ig < map.res_gamma; ++ig) {
            Regime r = map.at(ib, ig);
            double x = x_of(map.beta_of(ib)) - 0.5 * cw;
            double y = y_of(map.gamma_of(ig)) - 0.5 * ch;
            svg += "<rect class=\"regime-" + to_string(r) + "\" x=\"" + detail_io::fmt(x) +
                   "\" y=\"" + detail_io::fmt(y) + "\" width=\"" + detail_io::fmt(cw) +
                   "\" height=\"" + detail_io::fmt(ch) + "\" fill=\"" + fill.at(r) + "\"/>\n";
            centroid[r].first += x_of(map.beta_of(ib));
            centroid[r].second += y_of(map.gamma_of(ig));
            count[r] += 1;
        }
    const std::vector<std::string> boundary_class = {"boundary-EIP", "boundary-ECH"};
    for (std::size_t bi = 0; bi < map.boundaries.size(); ++bi) {
        svg += "<polyline class=\"" +
               (bi < boundary_class.size() ? boundary_class[bi] : "boundary") +
               "\" fill=\"none\" stroke=\"" + (bi == 0 ? "#d62728" : "#1f77b4") +
               "\" stroke-width=\"3\" points=\"";
        for (const Vec2& p : map.boundaries[bi])
            svg += detail_io::fmt(x_of(p.x())) + "," + detail_io::fmt(y_of(p.y())) + " ";
        svg += "\"/>\n";
    }
    for (const auto& [r, c] : centroid) {
        double x = c.first / count.at(r), y = c.second / count.at(r);
        svg += "<text class=\"label-" + to_string(r) + "\" x=\"" + detail_io::fmt(x) +
               "\" y=\"" + detail_io::fmt(y) + "\" font-size=\"28\" text-anchor=\"middle\">" +
               to_string(r) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace cosserat
