#pragma once

#include <optional>
#include <string>

#include "merocusp/basis_solver.hpp"
#include "merocusp/coeff_engine.hpp"
#include "merocusp/form_expression.hpp"
#include "merocusp/quasi_engine.hpp"

namespace merocusp {

enum class QuasiMethod { automatic, simple_pole, general };

// scalar * E2^n * f: solves the basis representations once, then evaluates
// any number of coefficients.
class FormPipeline {
public:
    FormPipeline(const FormExpression& expr, prec_t prec, QuasiMethod method = QuasiMethod::automatic);

    TruncatedSum coefficient(long m, long norm_bound, Execution mode = Execution::parallel) const;

    const Monomial& monomial() const { return monomial_; }
    const FormExpression& meromorphic_factor() const { return f_; }
    const BasisRepresentation& representation() const { return quasi_.f_basis; }
    const QuasiExpansion& quasi() const { return quasi_; }
    // "meromorphic", "simple_pole" or "general"
    const std::string& route() const { return route_; }

private:
    FormExpression expr_;
    prec_t prec_;
    Monomial monomial_;
    FormExpression f_;
    QuasiExpansion quasi_;
    std::string route_;
};

}  // namespace merocusp
