#include "merocusp/json_io.hpp"

#include "merocusp/error.hpp"

namespace merocusp {

EllipticPoint parse_point(const std::string& text, prec_t prec) {
    if (text == "i" || text == "I") return EllipticPoint::i(prec);
    if (text == "rho" || text == "RHO") return EllipticPoint::rho(prec);
    if (text.rfind("tau=", 0) == 0) {
        auto comma = text.find(',');
        if (comma == std::string::npos) throw ParseError("expected tau=<re>,<im>", text.size());
        BigReal re = BigReal::from_string(text.substr(4, comma - 4), prec);
        BigReal im = BigReal::from_string(text.substr(comma + 1), prec);
        return EllipticPoint::generic(BigComplex(re, im));
    }
    throw ParseError("unknown point \"" + text + "\"", 0);
}

std::string point_label(const EllipticPoint& p) {
    if (p.tag != PointTag::Generic) return p.name();
    return "tau=" + p.tau.re.to_string() + "," + p.tau.im.to_string();
}

json to_json(const BigComplex& z) { return json{{"re", z.re.to_string()}, {"im", z.im.to_string()}}; }

BigComplex complex_from_json(const json& j, prec_t prec) {
    auto part = [&](const char* key) {
        if (!j.contains(key)) return BigReal(0L, prec);
        const auto& v = j.at(key);
        if (v.is_string()) return BigReal::from_string(v.get<std::string>(), prec);
        return BigReal::from_double(v.get<double>(), prec);
    };
    return {part("re"), part("im")};
}

json to_json(const PrincipalPart& pp) {
    json coeffs = json::array();
    for (auto it = pp.coeffs.rbegin(); it != pp.coeffs.rend(); ++it) {
        json c = to_json(it->second);
        c["order"] = it->first;
        coeffs.push_back(c);
    }
    json flagged = json::array();
    for (int n : pp.flagged_zero) flagged.push_back(n);
    return json{{"point", point_label(pp.point)}, {"coeffs", coeffs}, {"flagged_zero", flagged}};
}

PrincipalPart principal_part_from_json(const json& j, prec_t prec) {
    PrincipalPart pp{parse_point(j.at("point").get<std::string>(), prec), {}, {}};
    for (const auto& c : j.at("coeffs")) {
        int order = c.at("order").get<int>();
        if (order < 1) throw ParseError("principal-part orders start at 1", 0);
        BigComplex v = complex_from_json(c, prec);
        if (v.is_zero())
            pp.flagged_zero.insert(order);
        else
            pp.coeffs[order] = v;
    }
    return pp;
}

json to_json(const BasisRepresentation& rep) {
    json terms = json::array();
    for (const auto& t : rep.terms) {
        json a = to_json(t.a);
        terms.push_back(json{{"point", point_label(t.point)}, {"n", t.n}, {"a", a}});
    }
    return json{{"k", rep.k}, {"weight", 2 - 2 * rep.k}, {"terms", terms}};
}

json to_json(const LaurentSeries& s) {
    json coeffs = json::array();
    for (int n = s.lowest_order; n <= s.highest_order(); ++n) {
        json c = to_json(s.coefficient(n));
        c["order"] = n;
        coeffs.push_back(c);
    }
    return json{{"point", point_label(s.point)}, {"lowest_order", s.lowest_order}, {"coeffs", coeffs}};
}

BasisInput basis_input_from_json(const json& j, prec_t prec) {
    BasisInput in;
    in.k = j.at("k").get<int>();
    for (const auto& p : j.at("principal_parts")) in.parts.push_back(principal_part_from_json(p, prec));
    return in;
}

}  // namespace merocusp
