// Command-line front end: stability reports, regime maps, dispersion curves,
// and discontinuity-system analyses for couple-stress materials.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "cosserat/cosserat.hpp"

namespace {

using namespace cosserat;

constexpr int kExitOk = 0;
constexpr int kExitConditionFailed = 1;
constexpr int kExitInputError = 2;

MaterialData resolve_material(const std::string& ref) {
    if (std::filesystem::exists(ref)) return load_material(ref);
    if (const Preset* p = find_preset(ref)) return parse_material(p->material);
    throw material_error("no such file or preset: " + ref);
}

Vec3 parse_vec3(const std::string& text) {
    Vec3 v;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &v[0], &v[1], &v[2]) != 3)
        throw material_error("expected a comma-separated triple, got: " + text);
    return v;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_atomic(out_path, content);
}

struct CommonFlags {
    int sweep_density = 4096;
    double tolerance = 1e-10;
    bool json = false;
    std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--sweep-density", f.sweep_density, "directions per sphere sweep");
    cmd->add_option("--tolerance", f.tolerance, "relative verdict tolerance");
    cmd->add_flag("--json", f.json, "machine-readable output");
    cmd->add_option("--out", f.out, "write output to this file instead of stdout");
}

AnalysisOptions to_options(const CommonFlags& f) {
    AnalysisOptions o;
    o.sweep_density = f.sweep_density;
    o.tol_rel = f.tolerance;
    return o;
}

int run_check(const std::string& material_ref, const CommonFlags& flags,
              const std::string& conditions_csv, bool verbose_symbols) {
    MaterialData m = resolve_material(material_ref);
    AnalysisOptions opts = to_options(flags);
    StabilityReport rep = full_report(m.cauchy, m.cosserat, opts);

    Json j = report_json(rep);
    j["material"] = m.source;
    try {
        AntiplaneMaterial ap = extract_antiplane(m.cauchy, m.cosserat);
        j["antiplane"] = antiplane_json(ap, antiplane_conditions(ap));
    } catch (const std::exception& e) {
        j["antiplane"] = nullptr;
        j["antiplane_skipped"] = e.what();
    }
    if (verbose_symbols) {
        Json diags = Json::array();
        for (const Vec3& n : fibonacci_directions(26))
            diags.push_back(symbol_diag_json(evaluate_symbols(m.cauchy, m.cosserat, n, 1.0)));
        j["symbol_diagnostics"] = diags;
    }

    std::map<std::string, bool> verdicts = {
        {"pd", rep.pd_cauchy.verdict && rep.pd_cosserat.verdict},
        {"se", rep.se_cauchy.verdict && rep.se_cosserat.verdict},
        {"sse", rep.sse_cauchy.verdict && rep.sse_cosserat.verdict},
        {"e", rep.ellipticity.verdict},
        {"wp", rep.wave_propagation.verdict}};
    bool all_hold = true;
    {
        std::string list = conditions_csv;
        for (char& c : list) c = static_cast<char>(std::tolower(c));
        std::stringstream ss(list);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            auto it = verdicts.find(item);
            if (it == verdicts.end()) throw material_error("unknown condition: " + item);
            all_hold = all_hold && it->second;
        }
    }

    std::string payload = j.dump(2) + "\n";
    if (!flags.out.empty()) write_text_atomic(flags.out, payload);
    if (flags.json) {
        if (flags.out.empty()) std::cout << payload;
    } else {
        auto line = [](const std::string& name, const ConditionResult& r) {
            std::printf("  %-6s %-5s margin % .3e%s\n", name.c_str(),
                        r.verdict ? "true" : "false", r.margin,
                        r.boundary ? "  [boundary]" : "");
        };
        std::printf("material: %s\n", m.name.empty() ? material_ref.c_str() : m.name.c_str());
        line("PD_C", rep.pd_cauchy);
        line("PD_B", rep.pd_cosserat);
        line("SE_C", rep.se_cauchy);
        line("SE_B", rep.se_cosserat);
        line("SSE_C", rep.sse_cauchy);
        line("SSE_B", rep.sse_cosserat);
        line("E", rep.ellipticity);
        line("WP", rep.wave_propagation);
        if (j.contains("antiplane") && !j["antiplane"].is_null())
            std::printf("  antiplane regime: %s\n",
                        j["antiplane"]["regime"].get<std::string>().c_str());
    }
    return all_hold ? kExitOk : kExitConditionFailed;
}

int run_sweep(double beta_min, double beta_max, double gamma_min, double gamma_max,
              int resolution, const std::string& out_prefix) {
    RegimeMap map = regime_map(beta_min, beta_max, gamma_min, gamma_max, resolution, resolution);
    write_text_atomic(out_prefix + ".csv", regime_csv(map));
    write_text_atomic(out_prefix + ".svg", regime_svg(map));
    std::printf("wrote %s.csv and %s.svg (%dx%d cells, %zu boundary curves)\n",
                out_prefix.c_str(), out_prefix.c_str(), map.res_beta, map.res_gamma,
                map.boundaries.size());
    return kExitOk;
}

int run_dispersion(const std::string& material_ref, const std::string& direction,
                   double k_min, double k_max, int samples, const std::string& branch,
                   const CommonFlags& flags) {
    MaterialData m = resolve_material(material_ref);
    if (!m.density) throw material_error("dispersion requires a material density");
    double rho = *m.density;
    if (samples < 1) throw material_error("need at least one wavenumber sample");

    auto k_at = [&](int i) {
        return samples == 1 ? k_min : k_min + (k_max - k_min) * i / (samples - 1);
    };

    if (branch == "sh") {
        AntiplaneMaterial ap = extract_antiplane(m.cauchy, m.cosserat);
        Vec2 n2;
        double nz = 0.0;
        if (std::sscanf(direction.c_str(), "%lf,%lf,%lf", &n2[0], &n2[1], &nz) < 2)
            throw material_error("expected an in-plane direction nx,ny");
        if (nz != 0.0) throw material_error("the SH branch needs an in-plane direction");
        n2.normalize();
        std::vector<std::pair<double, ShDispersion>> rows;
        for (int i = 0; i < samples; ++i)
            rows.emplace_back(k_at(i), sh_dispersion(ap, rho, n2, k_at(i)));
        emit(sh_dispersion_csv(rows), flags.out);
        return kExitOk;
    }

    Vec3 n = parse_vec3(direction).normalized();
    std::vector<WaveSolution> sols;
    for (int i = 0; i < samples; ++i) {
        double k = k_at(i);
        if (k == 0.0) {
            // long-wave limit: classical speeds, zero frequency
            WaveSolution s;
            s.n = n;
            s.wavenumber = 0.0;
            s.density = rho;
            Vec3 values;
            Mat3 vectors;
            cosserat::detail::eigen_sym3(acoustic_cauchy(m.cauchy, n), values, vectors);
            for (int bi = 0; bi < 3; ++bi) {
                WaveBranch br;
                br.omega_squared = 0.0;
                br.amplitude = vectors.col(2 - bi);
                double v2 = values(2 - bi) / rho;
                br.propagating = v2 > 0.0;
                br.phase_velocity = v2 > 0.0 ? std::sqrt(v2) : 0.0;
                s.branches[static_cast<std::size_t>(bi)] = br;
            }
            sols.push_back(s);
        } else {
            sols.push_back(wave_solve(m.cauchy, m.cosserat, rho, n, k));
        }
    }
    emit(dispersion_csv(sols), flags.out);
    return kExitOk;
}

int run_discontinuity(const std::string& material_ref, const std::string& normal,
                      const std::string& kappa, bool reduced, const CommonFlags& flags) {
    MaterialData m = resolve_material(material_ref);
    Vec3 n = parse_vec3(normal).normalized();
    Vec3 kt = parse_vec3(kappa);

    DiscontinuitySystem sys = assemble_full_system(m.cauchy, m.cosserat, n, kt);
    Json j;
    j["n"] = vec3_json(sys.n);
    j["kappa_t"] = vec3_json(sys.kappa_t);
    Json rows = Json::array();
    for (int r = 0; r < 6; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 9; ++c) row.push_back(complex_json(sys.matrix(r, c)));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    Json sv = Json::array();
    for (int i = 0; i < 6; ++i) sv.push_back(sys.singular_values(i));
    j["singular_values"] = sv;
    j["effective_rank"] = sys.effective_rank;
    j["underdetermined"] = sys.underdetermined;

    int code = kExitOk;
    TangentSpectrum sp = tangent_spectrum(sys.a_b, n);
    double margin = sp.lambda2 / std::max(m.cosserat.scale(), 1e-300);
    bool lost = margin <= 1e-10;
    if (lost) {
        ReducedSystem red = reduced_system_at_loss(m.cauchy, m.cosserat, n, kt);
        Json rj;
        Json rrows = Json::array();
        for (int r = 0; r < 5; ++r) {
            Json row = Json::array();
            for (int c = 0; c < 5; ++c) row.push_back(complex_json(red.matrix(r, c)));
            rrows.push_back(row);
        }
        rj["matrix"] = rrows;
        rj["determinant"] = complex_json(red.determinant);
        rj["lambda2"] = red.lambda2;
        rj["lambda3"] = red.lambda3;
        Json basis = Json::array();
        for (const auto& v : red.null_space) {
            Json col = Json::array();
            for (int i = 0; i < 5; ++i) col.push_back(complex_json(v(i)));
            basis.push_back(col);
        }
        rj["null_space"] = basis;
        j["reduced_system"] = rj;
    } else {
        j["reduced_system"] = nullptr;
        if (reduced) {
            std::fprintf(stderr,
                         "material is elliptic at this direction (transverse margin %.6e); "
                         "no reduced system exists\n",
                         margin);
            code = kExitConditionFailed;
        }
    }
    emit(j.dump(2) + "\n", flags.out);
    return code;
}

int run_presets(bool json, const std::string& export_name, const std::string& out) {
    if (!export_name.empty()) {
        const Preset* p = find_preset(export_name);
        if (!p) throw material_error("no such preset: " + export_name);
        std::string path = out.empty() ? export_name + ".json" : out;
        write_text_atomic(path, p->material.dump(2) + "\n");
        std::printf("wrote %s\n", path.c_str());
        return kExitOk;
    }
    if (json) {
        Json j = Json::array();
        for (const Preset& p : preset_library()) {
            Json e;
            e["name"] = p.name;
            e["description"] = p.description;
            e["material"] = p.material;
            Json v;
            for (const auto& [cond, verdict] : p.expected_verdicts) v[cond] = verdict;
            e["expected_verdicts"] = v;
            j.push_back(e);
        }
        std::string payload = j.dump(2) + "\n";
        if (out.empty())
            std::cout << payload;
        else
            write_text_atomic(out, payload);
        return kExitOk;
    }
    for (const Preset& p : preset_library()) {
        std::printf("%-20s %s\n", p.name.c_str(), p.description.c_str());
        std::printf("%-20s expected:", "");
        for (const auto& [cond, verdict] : p.expected_verdicts)
            std::printf(" %s=%s", cond.c_str(), verdict ? "true" : "false");
        std::printf("\n");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"material stability analysis for couple-stress elastic solids"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "evaluate the stability condition hierarchy");
    std::string check_material, conditions = "pd,se,sse,e,wp";
    bool verbose_symbols = false;
    CommonFlags check_flags;
    check->add_option("material", check_material, "material file or preset name")->required();
    check->add_option("--conditions", conditions, "comma list of conditions gating the exit code");
    check->add_flag("--verbose-symbols", verbose_symbols, "include per-direction symbol diagnostics");
    add_common(check, check_flags);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "regime map over the (beta, gamma) plane");
    double beta_min = -2.0, beta_max = 3.0, gamma_min = -3.0, gamma_max = 3.0;
    int resolution = 600;
    std::string sweep_out = "regime_map";
    sweep->add_option("--beta-min", beta_min);
    sweep->add_option("--beta-max", beta_max);
    sweep->add_option("--gamma-min", gamma_min);
    sweep->add_option("--gamma-max", gamma_max);
    sweep->add_option("--resolution", resolution, "cells per axis");
    sweep->add_option("--out", sweep_out, "output file prefix");

    // dispersion
    auto* disp = app.add_subcommand("dispersion", "phase velocities over a wavenumber range");
    std::string disp_material, direction = "1,0,0", branch = "all";
    double k_min = 0.0, k_max = 5.0;
    int samples = 51;
    CommonFlags disp_flags;
    disp->add_option("material", disp_material)->required();
    disp->add_option("--direction", direction, "propagation direction (comma separated)");
    disp->add_option("--k-min", k_min);
    disp->add_option("--k-max", k_max);
    disp->add_option("--samples", samples);
    disp->add_option("--branch", branch, "all | sh");
    add_common(disp, disp_flags);

    // discontinuity
    auto* disc = app.add_subcommand("discontinuity", "jump system across a planar surface");
    std::string disc_material, normal = "1,0,0", kappa = "0,0,0";
    bool reduced = false;
    CommonFlags disc_flags;
    disc->add_option("material", disc_material)->required();
    disc->add_option("--normal", normal, "surface normal");
    disc->add_option("--kappa", kappa, "tangential surface wavevector");
    disc->add_flag("--reduced", reduced, "require the reduced square system (fails when elliptic)");
    add_common(disc, disc_flags);

    // presets
    auto* presets = app.add_subcommand("presets", "list built-in reference materials");
    bool presets_json = false;
    std::string export_name, presets_out;
    presets->add_flag("--json", presets_json);
    presets->add_option("--export", export_name, "write one preset as a material file");
    presets->add_option("--out", presets_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(check_material, check_flags, conditions, verbose_symbols);
        if (sweep->parsed())
            return run_sweep(beta_min, beta_max, gamma_min, gamma_max, resolution, sweep_out);
        if (disp->parsed())
            return run_dispersion(disp_material, direction, k_min, k_max, samples, branch,
                                  disp_flags);
        if (disc->parsed())
            return run_discontinuity(disc_material, normal, kappa, reduced, disc_flags);
        if (presets->parsed()) return run_presets(presets_json, export_name, presets_out);
    } catch (const material_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInputError;
    } catch (const precondition_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInputError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    }
    return kExitOk;
}
