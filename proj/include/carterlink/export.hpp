#pragma once

#include "carterlink/linkage.hpp"
#include "carterlink/matrix.hpp"

#include <string>

// vendor/json.hpp (nlohmann::json single header)
#include <json.hpp>

namespace carterlink {

// {"num": n, "den": d} with den > 0 and gcd 1 (cpp_rational keeps it canonical)
nlohmann::json rat_to_json(const Rat& r);

// {"n":, "prefactor_den": k, "scaled": [[...]]} with M = (1/k) * scaled
nlohmann::json matrix_to_json(const RatMatrix& m);
// "1/k [ ... ]" text layout with a common denominator prefactor
std::string matrix_to_text(const RatMatrix& m);

nlohmann::json diagram_to_json(const CarterDiagram& d);
std::string diagram_to_dot(const CarterDiagram& d);

nlohmann::json system_to_json(const LinkageSystem& s);
std::string system_to_dot(const CarterDiagram& d, const LinkageSystem& s);

nlohmann::json orbit_to_json(const CarterDiagram& d,
                             const std::set<std::vector<int>>& orbit);

} // namespace carterlink
