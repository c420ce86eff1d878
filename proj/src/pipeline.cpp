#include "merocusp/pipeline.hpp"

#include "merocusp/error.hpp"

namespace merocusp {

namespace {

Monomial require_monomial(const FormExpression& expr) {
    auto m = as_monomial(expr);
    if (!m) throw DomainError("the formula path needs a product of powers of E2, E4, E6, E10");
    if (m->e2 < 0) throw DomainError("negative powers of E2 are not supported");
    if (sgn(m->scalar) == 0) throw DomainError("zero form");
    return *m;
}

bool all_simple(const BasisRepresentation& rep) {
    for (const auto& t : rep.terms)
        if (t.n != 0 || t.point.tag == PointTag::Generic) return false;
    return true;
}

}  // namespace

FormPipeline::FormPipeline(const FormExpression& expr, prec_t prec, QuasiMethod method)
    : expr_(expr), prec_(prec), monomial_(require_monomial(expr)), f_(monomial_.modular_part()) {
    const int n = static_cast<int>(monomial_.e2);
    quasi_ = quasi_expansion(f_, 0, prec);
    if (n == 0) {
        route_ = "meromorphic";
        return;
    }
    const bool simple_ok = all_simple(quasi_.f_basis) && n < quasi_.k - 1;
    if (method == QuasiMethod::simple_pole && !simple_ok)
        throw DomainError("simple-pole route needs simple poles and E2 exponent below k - 1");
    if (method != QuasiMethod::general && simple_ok) {
        route_ = "simple_pole";
        quasi_.n = n;
        return;
    }
    route_ = "general";
    quasi_ = quasi_expansion(f_, n, prec);
}

TruncatedSum FormPipeline::coefficient(long m, long norm_bound, Execution mode) const {
    if (route_ == "meromorphic") return assemble_coefficient(quasi_.f_basis, m, norm_bound, prec_, mode);
    if (route_ == "simple_pole") return simple_pole_quasi_coeff(quasi_.f_basis, quasi_.n, m, norm_bound, prec_, mode);
    return quasi_coeff_general(quasi_, m, norm_bound, prec_, mode);
}

}  // namespace merocusp
