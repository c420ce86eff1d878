#pragma once

#include <string>
#include <utility>
#include <vector>

#include "merocusp/bigfloat.hpp"

namespace merocusp {

enum class Field { gaussian, eisenstein };

std::string field_name(Field f);

// Generator c*mu + d with mu = i (Gaussian) or rho = e^{pi i/3} (Eisenstein),
// plus a completion (a, b) with ad - bc = 1.
struct PrimitiveIdeal {
    Field field = Field::gaussian;
    long c = 0;
    long d = 1;
    long norm = 1;
    long a = 1;
    long b = 0;
};

long norm_form(Field field, long c, long d);
int unit_count(Field field);
// Generator multiplied by the unit i (resp. rho).
std::pair<long, long> unit_step(Field field, long c, long d);
// Representative with c > 0, or c = 0 and d > 0, smallest in lexicographic order.
std::pair<long, long> canonical_pair(Field field, long c, long d);

// ad - bc = 1 with 0 <= b < |d| when d != 0.
std::pair<long, long> complete_unimodular(long c, long d);

// The pair as given (not canonicalized), completed.
PrimitiveIdeal make_ideal(Field field, long c, long d);
PrimitiveIdeal canonical_ideal(Field field, long c, long d);

// One representative per unit orbit with norm <= norm_bound, sorted by (norm, c, d).
std::vector<PrimitiveIdeal> enumerate_primitive(Field field, long norm_bound);

// C_K(b, m); exact zero unless 4 | K (Gaussian) or 6 | K (Eisenstein).
BigReal c_kernel(Field field, int weight, const PrimitiveIdeal& ideal, long m, prec_t prec);

// B_{k,c,d}(z, n) with the completion supplied or computed.
BigComplex b_kernel(int k, long c, long d, long a, long b, const BigComplex& z, long n, prec_t prec);
BigComplex b_kernel(int k, long c, long d, const BigComplex& z, long n, prec_t prec);

}  // namespace merocusp
