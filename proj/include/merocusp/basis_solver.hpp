#pragma once

#include <string>
#include <vector>

#include "merocusp/bigfloat.hpp"
#include "merocusp/elliptic_expansion.hpp"
#include "merocusp/form_expression.hpp"
#include "merocusp/special_values.hpp"

namespace merocusp {

struct BasisTerm {
    EllipticPoint point;
    int n = 0;  // raise order
    BigComplex a;
};

// f = sum a R^n[H_{2k}(tau, .)], f of weight 2 - 2k.
struct BasisRepresentation {
    int k = 0;
    std::vector<BasisTerm> terms;

    // Coefficient of the term at (tag, n), zero if absent.
    BigComplex coefficient(PointTag tag, int n, prec_t prec) const;
};

struct EpsilonTilde {
    int weight = 0;
    EllipticPoint point;
    BigComplex value;  // i omega / (2 pi) or exactly 0

    bool is_zero() const { return value.is_zero(); }
};

EpsilonTilde epsilon_tilde(int weight, const EllipticPoint& point, prec_t prec);

// Principal part of R^n[H_{2k}(tau0, .)] at tau0.
PrincipalPart basis_principal_part(int k, int n, const EllipticPoint& point, prec_t prec);

// Greedy elimination from the highest order down.  Throws CongruenceError when
// a leading order has no basis element, ResidualError when lower orders do
// not match the tails of the chosen basis elements.
BasisRepresentation solve_basis(const std::vector<PrincipalPart>& parts, int k, prec_t prec);

// Weight 2 - 2k of an expression, as k; throws unless the weight is even and negative.
int source_k(const FormExpression& expr);

// Principal parts of expr at i and rho, dropping points without a pole.
std::vector<PrincipalPart> elliptic_principal_parts(const FormExpression& expr, prec_t prec);

// Representation of a form whose poles at i and rho are all simple.
BasisRepresentation simple_pole_rep(const FormExpression& expr, prec_t prec);

}  // namespace merocusp
