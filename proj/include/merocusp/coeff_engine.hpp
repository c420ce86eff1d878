#pragma once

#include <gmpxx.h>

#include <vector>

#include "merocusp/basis_solver.hpp"
#include "merocusp/bigfloat.hpp"
#include "merocusp/kernels.hpp"
#include "merocusp/special_values.hpp"

namespace merocusp {

struct TruncatedSum {
    BigComplex value;
    BigReal tail_bound;
    long norm_bound = 0;
};

// R^n[H_{2k}] = sum_j coefficient (-2i)^{n-j} d^{n-j}/dz^{n-j} H_{2k+2n, j}
struct RaisingTerm {
    int j = 0;
    mpz_class coefficient;  // (2k+n-1)!/(2k+n-1-j)! * C(n, j)
    int power = 0;          // exponent of (-2i)
    int derivative_order = 0;
};

struct RaisingExpansion {
    int k = 0;
    int n = 0;
    std::vector<RaisingTerm> terms;
};

RaisingExpansion raising_expansion(int k, int n);
// One more raising, applied termwise through
// R(H_{K,j}) = -2i d/dz H_{K+2,j} + (K - j) H_{K+2,j+1} with K = 2k + 2n.
RaisingExpansion raise_once(const RaisingExpansion& e);
bool operator==(const RaisingExpansion& a, const RaisingExpansion& b);

// m-th coefficient of F_{K,j,r}(tau0, .) at tau0 in {i, rho}; the sum runs over
// primitive ideals of norm <= norm_bound.
TruncatedSum f_series_coeff(int weight, int j, int r, const EllipticPoint& point, long m, long norm_bound,
                            prec_t prec, Execution mode = Execution::parallel);

// sum over coprime (c, d) with |c z + d|^2 <= height_bound of
// (|cz+d|^2/v)^j (2 pi i m)^r B_{K,c,d}(z, m).
TruncatedSum general_coeff_sum(int weight, const EllipticPoint& point, int j, int r, long m, long height_bound,
                               prec_t prec, Execution mode = Execution::parallel);

// m-th Fourier coefficient of sum a R^n[H_{2k}(tau, .)].
TruncatedSum assemble_coefficient(const BasisRepresentation& rep, long m, long norm_bound, prec_t prec,
                                  Execution mode = Execution::parallel);

// Series terms of a representation at one point (i or rho), scaled by `scale`.
std::vector<SeriesTerm> representation_terms(const BasisRepresentation& rep, PointTag tag, const BigComplex& scale);

// Constant-term identity for 1/E6^4 at i:
//   sum_b N^{-13} (A cos(32 theta) - 4 pi^2 E4(i) cos(28 theta)) = 27 pi^3 E4(i)^8 / D
// published: A = 9, D = 182;  derived from the coefficient formula: A = 243, D = 91.
enum class IdentityForm { published, derived };

struct IdentityCheck {
    BigReal lhs;
    BigReal rhs;
    BigReal abs_err;
    BigReal tail_bound;
};

IdentityCheck identity_check_m0(long norm_bound, prec_t prec, IdentityForm form = IdentityForm::published);

}  // namespace merocusp
