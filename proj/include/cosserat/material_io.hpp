#pragma once

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "cosserat/antiplane.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

using Json = nlohmann::json;

/// Schema or semantic failure while reading a material description; the
/// message carries the offending field path.
class material_error : public std::runtime_error {
public:
    explicit material_error(const std::string& what) : std::runtime_error(what) {}
};

struct MaterialData {
    CauchyTensor cauchy;
    CosseratTensor cosserat;
    std::optional<double> density;
    std::string name;
    std::string notes;
    Json source;  // parsed document, echoed into reports
};

namespace detail_io {

inline double need_number(const Json& j, const std::string& path, const std::string& key) {
    if (!j.contains(key))
        throw material_error("missing field " + path + "/" + key);
    const Json& v = j.at(key);
    if (!v.is_number())
        throw material_error("field " + path + "/" + key + " must be a number");
    double x = v.get<double>();
    if (!std::isfinite(x))
        throw material_error("field " + path + "/" + key + " must be finite");
    return x;
}

inline std::vector<double> need_array(const Json& j, const std::string& path,
                                      const std::string& key, std::size_t count) {
    if (!j.contains(key))
        throw material_error("missing field " + path + "/" + key);
    const Json& v = j.at(key);
    if (!v.is_array() || v.size() != count)
        throw material_error("field " + path + "/" + key + " must be an array of " +
                             std::to_string(count) + " numbers");
    std::vector<double> out;
    out.reserve(count);
    for (const Json& x : v) {
        if (!x.is_number())
            throw material_error("field " + path + "/" + key + " must contain only numbers");
        double d = x.get<double>();
        if (!std::isfinite(d))
            throw material_error("field " + path + "/" + key + " must contain finite numbers");
        out.push_back(d);
    }
    return out;
}

}  // namespace detail_io

inline CauchyTensor parse_cauchy(const Json& j) {
    using detail_io::need_array;
    using detail_io::need_number;
    if (!j.is_object() || !j.contains("type"))
        throw material_error("cauchy section must be an object with a \"type\"");
    std::string type = j.at("type").get<std::string>();
    if (type == "isotropic")
        return isotropic_cauchy(need_number(j, "cauchy", "lambda"), need_number(j, "cauchy", "mu"));
    if (type == "matrix") {
        auto v = need_array(j, "cauchy", "values", 36);
        Mat6 m;
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) m(r, c) = v[static_cast<std::size_t>(r * 6 + c)];
        try {
            return CauchyTensor::from_reduced_matrix(m);
        } catch (const std::invalid_argument& e) {
            throw material_error(std::string("cauchy/values: ") + e.what());
        }
    }
    throw material_error("cauchy/type must be \"isotropic\" or \"matrix\"");
}

inline CosseratTensor parse_cosserat(const Json& j) {
    using detail_io::need_array;
    using detail_io::need_number;
    if (!j.is_object() || !j.contains("type"))
        throw material_error("cosserat section must be an object with a \"type\"");
    std::string type = j.at("type").get<std::string>();
    if (type == "isotropic")
        return isotropic_cosserat(need_number(j, "cosserat", "eta"),
                                  need_number(j, "cosserat", "eta_prime"));
    if (type == "orthotropic") {
        OrthotropicComponents oc;
        oc.b1111 = need_number(j, "cosserat", "B1111");
        oc.b1122 = need_number(j, "cosserat", "B1122");
        oc.b1212 = need_number(j, "cosserat", "B1212");
        oc.b1221 = need_number(j, "cosserat", "B1221");
        oc.b1313 = need_number(j, "cosserat", "B1313");
        oc.b1331 = need_number(j, "cosserat", "B1331");
        oc.b2121 = need_number(j, "cosserat", "B2121");
        oc.b2222 = need_number(j, "cosserat", "B2222");
        oc.b2323 = need_number(j, "cosserat", "B2323");
        oc.b2332 = need_number(j, "cosserat", "B2332");
        oc.b3131 = need_number(j, "cosserat", "B3131");
        oc.b3232 = need_number(j, "cosserat", "B3232");
        return orthotropic_cosserat(oc);
    }
    if (type == "matrix") {
        auto v = need_array(j, "cosserat", "values", 81);
        Mat9 m;
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 9; ++c) m(r, c) = v[static_cast<std::size_t>(r * 9 + c)];
        try {
            return CosseratTensor::from_reduced_matrix(m);
        } catch (const std::invalid_argument& e) {
            throw material_error(std::string("cosserat/values: ") + e.what());
        }
    }
    throw material_error("cosserat/type must be \"isotropic\", \"orthotropic\", or \"matrix\"");
}

inline MaterialData parse_material(const Json& doc) {
    if (!doc.is_object()) throw material_error("material document must be a JSON object");
    if (!doc.contains("cauchy")) throw material_error("missing field /cauchy");
    if (!doc.contains("cosserat")) throw material_error("missing field /cosserat");
    MaterialData m;
    m.cauchy = parse_cauchy(doc.at("cauchy"));
    m.cosserat = parse_cosserat(doc.at("cosserat"));
    if (doc.contains("density")) {
        double rho = detail_io::need_number(doc, "", "density");
        if (!(rho > 0.0)) throw material_error("field /density must be positive");
        m.density = rho;
    }
    if (doc.contains("name")) m.name = doc.at("name").get<std::string>();
    if (doc.contains("notes")) m.notes = doc.at("notes").get<std::string>();
    m.source = doc;
    return m;
}

inline MaterialData load_material(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw material_error("cannot open material file: " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw material_error("malformed JSON in " + path + ": " + e.what());
    }
    return parse_material(doc);
}

/// Built-in reference materials with their documented stability verdicts.
/// Keys of expected_verdicts: PD_C, PD_B, SE_C, SE_B, E, WP for full-tensor
/// checks, ap:X for the antiplane closed-form conditions.
struct Preset {
    std::string name;
    std::string description;
    Json material;
    std::vector<std::pair<std::string, bool>> expected_verdicts;
};

namespace detail_io {

inline Json isotropic_material(const std::string& name, const std::string& notes,
                               double lambda, double mu, double eta, double eta_prime,
                               double rho) {
    Json j;
    j["name"] = name;
    j["notes"] = notes;
    j["cauchy"] = {{"type", "isotropic"}, {"lambda", lambda}, {"mu", mu}};
    j["cosserat"] = {{"type", "isotropic"}, {"eta", eta}, {"eta_prime", eta_prime}};
    j["density"] = rho;
    return j;
}

inline Json antiplane_material(const std::string& name, const std::string& notes,
                               const AntiplaneMaterial& m, double rho) {
    auto [c, b] = embed_3d(m);
    Json j;
    j["name"] = name;
    j["notes"] = notes;
    Mat6 mc = c.reduced_matrix();
    std::vector<double> values;
    values.reserve(36);
    for (int r = 0; r < 6; ++r)
        for (int col = 0; col < 6; ++col) values.push_back(mc(r, col));
    j["cauchy"] = {{"type", "matrix"}, {"values", values}};
    const Tensor4& t = b.components();
    j["cosserat"] = {{"type", "orthotropic"},
                     {"B1111", t(0, 0, 0, 0)},
                     {"B1122", t(0, 0, 1, 1)},
                     {"B1212", t(0, 1, 0, 1)},
                     {"B1221", t(0, 1, 1, 0)},
                     {"B1313", t(0, 2, 0, 2)},
                     {"B1331", t(0, 2, 2, 0)},
                     {"B2121", t(1, 0, 1, 0)},
                     {"B2222", t(1, 1, 1, 1)},
                     {"B2323", t(1, 2, 1, 2)},
                     {"B2332", t(1, 2, 2, 1)},
                     {"B3131", t(2, 0, 2, 0)},
                     {"B3232", t(2, 1, 2, 1)}};
    j["density"] = rho;
    return j;
}

}  // namespace detail_io

inline const std::vector<Preset>& preset_library() {
    static const std::vector<Preset> presets = [] {
        std::vector<Preset> v;
        v.push_back({"isotropic-reference",
                     "well-behaved isotropic material; every stability condition holds",
                     detail_io::isotropic_material("isotropic-reference", "", 1.0, 1.0, 1.0, 0.0, 1.0),
                     {{"PD_C", true}, {"PD_B", true}, {"SE_C", true}, {"SE_B", true},
                      {"E", true}, {"WP", true}}});
        v.push_back({"purely-cosserat",
                     "null classical stiffness; stress arises only through couple-stress "
                     "action, waves cannot propagate and the 3D operator is degenerate",
                     detail_io::isotropic_material("purely-cosserat", "", 0.0, 0.0, 1.0, 0.0, 1.0),
                     {{"PD_C", false}, {"PD_B", true}, {"SE_C", false}, {"SE_B", true},
                      {"E", false}, {"WP", false}}});
        v.push_back({"shear-defective",
                     "null shear stiffness cured by a positive couple-stress part: "
                     "definiteness is lost yet the operator stays elliptic and waves propagate",
                     detail_io::isotropic_material("shear-defective", "", 1.0, 0.0, 1.0, 0.0, 1.0),
                     {{"PD_C", false}, {"PD_B", true}, {"SE_C", false}, {"SE_B", true},
                      {"E", true}, {"WP", true}}});
        v.push_back({"negative-shear",
                     "negative shear stiffness: elliptic but waves cannot propagate",
                     detail_io::isotropic_material("negative-shear", "", 2.0, -0.1, 1.0, 0.0, 1.0),
                     {{"PD_C", false}, {"SE_C", false}, {"E", true}, {"WP", false}}});
        AntiplaneMaterial wp_not_e{/*c44=*/0.0, /*c55=*/1.0, /*b1=*/1.0, /*b2=*/0.0,
                                   /*b3=*/0.0, /*b4=*/1.0};
        v.push_back({"wp-not-e",
                     "antiplane material whose operator degenerates along one axis while "
                     "shear waves still propagate in every direction",
                     detail_io::antiplane_material("wp-not-e", "", wp_not_e, 1.0),
                     {{"ap:PD_C", false}, {"ap:PD_B", false}, {"ap:SE_B", false},
                      {"ap:E", false}, {"ap:WP", true}}});
        AntiplaneMaterial ec_h{/*c44=*/1.0, /*c55=*/1.0, /*b1=*/1.0, /*b2=*/4.0,
                               /*b3=*/3.0, /*b4=*/1.0};
        v.push_back({"ec-h-boundary",
                     "antiplane material sitting on the boundary where the transverse "
                     "eigenvalue first vanishes; two discontinuity-surface normals exist",
                     detail_io::antiplane_material("ec-h-boundary", "", ec_h, 1.0),
                     {{"ap:PD_C", true}, {"ap:PD_B", false}, {"ap:SE_B", false},
                      {"ap:E", false}, {"ap:WP", true}}});
        return v;
    }();
    return presets;
}

inline const Preset* find_preset(const std::string& name) {
    for (const Preset& p : preset_library())
        if (p.name == name) return &p;
    return nullptr;
}

}  // namespace cosserat
