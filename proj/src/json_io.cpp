#include "diracsq/json_io.hpp"

#include <cstdio>

namespace dsq {

Json json_complex(Complex z) { return Json::array({z.real(), z.imag()}); }

Json json_vector(const CVector4& v) {
    Json out = Json::array();
    for (int i = 0; i < 4; ++i) out.push_back(json_complex(v(i)));
    return out;
}

Json json_vector2(const CVector2& v) {
    return Json::array({json_complex(v(0)), json_complex(v(1))});
}

Json json_matrix(const CMatrix4& m) {
    Json out = Json::array();
    for (int r = 0; r < 4; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 4; ++c) row.push_back(json_complex(m(r, c)));
        out.push_back(row);
    }
    return out;
}

Json json_mode(const ModeParams& m) {
    return Json{{"k1", m.k1},     {"k2", m.k2},           {"k", m.k},
                {"mass", m.M},    {"epsilon", m.epsilon}, {"p", m.p}};
}

Json json_solution(const StructuredSolution& sol) {
    Json out;
    out["rep"] = rep_name(sol.rep);
    if (const auto* tz = std::get_if<TransverseZ>(&sol.form)) {
        out["form"] = "transverse_z";
        out["plus"] = json_vector(tz->plus);
        out["minus"] = json_vector(tz->minus);
    } else {
        const auto& rp = std::get<RealPhase>(sol.form);
        out["form"] = "real_phase";
        out["k3"] = rp.k3;
        out["cos_part"] = json_vector(rp.cosPart);
        out["sin_part"] = json_vector(rp.sinPart);
    }
    return out;
}

Json json_set(const SolutionSet& set) {
    Json out;
    out["generator"] = set.generator;
    out["rep"] = rep_name(set.rep);
    out["phase_gamma"] = set.phase_gamma;
    out["mode"] = json_mode(set.mode);
    Json cols = Json::array();
    for (const auto& c : set.columns) cols.push_back(json_solution(c));
    out["columns"] = cols;
    return out;
}

Json json_root(const QuantizationRoot& r) {
    return Json{{"branch", r.branch_index},
                {"k", r.k},
                {"K", json_complex(r.K)},
                {"det_residual", r.det_residual},
                {"unit_modulus_dev", r.unit_modulus_dev}};
}

Json json_spectrum(const std::vector<QuantizationRoot>& roots) {
    Json out = Json::array();
    for (const auto& r : roots) out.push_back(json_root(r));
    return out;
}

std::string csv_spectrum(const std::vector<QuantizationRoot>& roots) {
    std::string out = "branch,k,re_K,im_K,det_residual,unit_modulus_dev\n";
    char line[256];
    for (const auto& r : roots) {
        std::snprintf(line, sizeof(line),
                      "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.branch_index,
                      r.k, r.K.real(), r.K.imag(), r.det_residual,
                      r.unit_modulus_dev);
        out += line;
    }
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dsq
