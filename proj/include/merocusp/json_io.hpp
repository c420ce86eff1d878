#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "merocusp/basis_solver.hpp"
#include "merocusp/coeff_engine.hpp"
#include "merocusp/elliptic_expansion.hpp"

namespace merocusp {

using json = nlohmann::ordered_json;

// "i", "rho", or "tau=<re>,<im>"
EllipticPoint parse_point(const std::string& text, prec_t prec);
std::string point_label(const EllipticPoint& p);

json to_json(const BigComplex& z);
BigComplex complex_from_json(const json& j, prec_t prec);

json to_json(const PrincipalPart& pp);
PrincipalPart principal_part_from_json(const json& j, prec_t prec);

json to_json(const BasisRepresentation& rep);
json to_json(const LaurentSeries& s);

// {"k": K, "principal_parts": [...]}
struct BasisInput {
    int k = 0;
    std::vector<PrincipalPart> parts;
};
BasisInput basis_input_from_json(const json& j, prec_t prec);

}  // namespace merocusp
