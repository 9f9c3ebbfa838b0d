#ifndef DIRACSQ_JSON_IO_HPP
#define DIRACSQ_JSON_IO_HPP

#include "diracsq/boundary.hpp"
#include "diracsq/solutions.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dsq {

using Json = nlohmann::ordered_json;

// Complex scalars serialize as two-element [re, im] arrays everywhere.
Json json_complex(Complex z);
Json json_vector(const CVector4& v);
Json json_vector2(const CVector2& v);
Json json_matrix(const CMatrix4& m);

Json json_mode(const ModeParams& m);
Json json_solution(const StructuredSolution& sol);
Json json_set(const SolutionSet& set);
Json json_root(const QuantizationRoot& r);
Json json_spectrum(const std::vector<QuantizationRoot>& roots);

// CSV with header: branch,k,re_K,im_K,det_residual,unit_modulus_dev
// (17 significant digits).
std::string csv_spectrum(const std::vector<QuantizationRoot>& roots);

// Stable 2-space-indented dump with trailing newline.
std::string dump(const Json& j);

}  // namespace dsq

#endif
