#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "merocusp/bigfloat.hpp"
#include "merocusp/form_expression.hpp"
#include "merocusp/special_values.hpp"

namespace merocusp {

// sum_i coeffs[i] (z - tau0)^(lowest_order + i); coefficients are valid
// through highest_order().
struct LaurentSeries {
    EllipticPoint point;
    int lowest_order = 0;
    std::vector<BigComplex> coeffs;

    int highest_order() const { return lowest_order + static_cast<int>(coeffs.size()) - 1; }
    // Zero below lowest_order; throws past highest_order().
    BigComplex coefficient(int order) const;
    prec_t prec() const;
};

LaurentSeries laurent_constant(const EllipticPoint& point, const BigComplex& value, int highest_order);
LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries scale(const LaurentSeries& a, const BigComplex& s);
// d/dz
LaurentSeries derivative(const LaurentSeries& a);
// Leading coefficients below 2^{-P/2} of the largest are treated as exact zeros.
LaurentSeries reciprocal(const LaurentSeries& a);
LaurentSeries power(const LaurentSeries& a, long e);

// Taylor coefficients d^n expr(tau0)/n! for 0 <= n <= depth.
LaurentSeries taylor_at(const FormExpression& expr, const EllipticPoint& point, int depth, prec_t prec);
// Valid at least through (z - tau0)^depth.
LaurentSeries laurent_at(const FormExpression& expr, const EllipticPoint& point, int depth, prec_t prec);

struct PrincipalPart {
    EllipticPoint point;
    std::map<int, BigComplex> coeffs;  // order n >= 1 -> coefficient of (z - tau0)^{-n}
    std::set<int> flagged_zero;        // orders whose computed value fell below tolerance

    int max_order() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }
    bool empty() const { return coeffs.empty(); }
    BigComplex coefficient(int order, prec_t prec) const;
    std::string to_string() const;
};

PrincipalPart principal_part(const LaurentSeries& series);
PrincipalPart principal_part(const FormExpression& expr, const EllipticPoint& point, prec_t prec);

// Leading pole order (0 if none) and its congruence n = 1 - k (mod omega)
// for a modular form of weight 2 - 2k.
bool leading_order_admissible(const PrincipalPart& pp, int k);

}  // namespace merocusp
