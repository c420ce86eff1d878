#pragma once

#include <gmpxx.h>

#include <vector>

#include "merocusp/basis_solver.hpp"
#include "merocusp/coeff_engine.hpp"
#include "merocusp/form_expression.hpp"

namespace merocusp {

// c_{k,l,j} = (2k-l-j-2)! (2k-2l-1) / (2k-l-1)!
mpq_class ckl_coefficient(int k, int l, int j);

// (-1)^l C(n,l) (2k-2n-1)!/(2k-2n-1+l)!: weight of (2i)^l (pi/3)^{n-l} d^l(E2^{n-l} f) in F_n.
mpq_class fn_combination_coefficient(int k, int n, int l);

// Data for E2^n f with f meromorphic of weight 2 - 2k.  levels[l] is the basis
// representation of F_l (weight 2 - 2(k - l)); levels[0] represents f itself.
struct QuasiExpansion {
    int k = 0;
    int n = 0;
    FormExpression f = FormExpression::constant(1);
    BasisRepresentation f_basis;
    std::vector<BasisRepresentation> levels;
    std::vector<std::vector<mpq_class>> fn_coefficients;  // [level][l]

    mpq_class ckl(int l, int j) const { return ckl_coefficient(k, l, j); }
};

// Principal parts of F_l at i and rho, built from the E2 Taylor jet and the
// Laurent expansion of f.
std::vector<PrincipalPart> fn_principal_parts(const FormExpression& f, int k, int level, prec_t prec);

QuasiExpansion quasi_expansion(const FormExpression& f, int n, prec_t prec);

// m-th coefficient of E2^n f through
//   E2^n f = (3/pi)^n F_n - sum_{l>=1} w_{n,l} (2i)^l (3/pi)^l d^l(E2^{n-l} f)
// with d^l -> (2 pi i m)^l on coefficients.
TruncatedSum quasi_coeff_general(const QuasiExpansion& q, long m, long norm_bound, prec_t prec,
                                 Execution mode = Execution::parallel);
TruncatedSum quasi_coeff_general(const FormExpression& f, int n, long m, long norm_bound, prec_t prec,
                                 Execution mode = Execution::parallel);

// m-th coefficient of E2^j f for f = sum a H_{2k}(tau, .) with simple poles at i, rho.
TruncatedSum simple_pole_quasi_coeff(const BasisRepresentation& f_rep, int j, long m, long norm_bound, prec_t prec,
                                     Execution mode = Execution::parallel);

}  // namespace merocusp
