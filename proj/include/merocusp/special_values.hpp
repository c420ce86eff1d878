#pragma once

#include <array>
#include <string>
#include <vector>

#include "merocusp/bigfloat.hpp"

namespace merocusp {

enum class PointTag { I, Rho, Generic };

struct EllipticPoint {
    PointTag tag = PointTag::I;
    BigComplex tau;
    int omega = 2;

    static EllipticPoint i(prec_t prec);
    static EllipticPoint rho(prec_t prec);  // e^{pi i/3}
    static EllipticPoint generic(const BigComplex& tau);
    static EllipticPoint from_tag(PointTag tag, prec_t prec);

    const BigReal& height() const { return tau.im; }
    std::string name() const;
};

// E2(i)=3/pi, E4(i), E6(i)=0, E2(rho)=2sqrt3/pi, E4(rho)=0, E6(rho).
BigReal closed_value(int weight, PointTag point, prec_t prec);

// q-expansion of E_w (w in {2,4,6,10}) summed at q = e^{2 pi i tau}; Im tau >= 1/2.
BigComplex qseries_eval(int weight, const BigComplex& tau, prec_t prec);

// d^r/dz^r E_w(tau0) for w in {2,4,6}, 0 <= r <= depth.
struct DerivativeJet {
    EllipticPoint point;
    int depth = 0;
    std::array<std::vector<BigComplex>, 3> table;

    const BigComplex& value(int weight, int r) const;
};

DerivativeJet derivative_jet(const EllipticPoint& point, int depth, prec_t prec);

struct E10Jet {
    EllipticPoint point;
    int depth = 0;
    std::vector<BigComplex> values;
};

E10Jet e10_jet(const EllipticPoint& point, int depth, prec_t prec);

}  // namespace merocusp
