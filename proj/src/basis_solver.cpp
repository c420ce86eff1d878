#include "merocusp/basis_solver.hpp"

#include "merocusp/error.hpp"

namespace merocusp {

BigComplex BasisRepresentation::coefficient(PointTag tag, int n, prec_t prec) const {
    for (const auto& t : terms)
        if (t.point.tag == tag && t.n == n) return t.a;
    return BigComplex(prec);
}

EpsilonTilde epsilon_tilde(int weight, const EllipticPoint& point, prec_t prec) {
    if (weight % 2 != 0) throw DomainError("epsilon_tilde needs an even weight");
    int k = weight / 2;
    EpsilonTilde e{weight, point, BigComplex(prec)};
    if (((k % point.omega) + point.omega) % point.omega == 0) e.value.im = BigReal(point.omega, prec) / (2L * pi(prec));
    return e;
}

namespace {

mpz_class factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

}  // namespace

PrincipalPart basis_principal_part(int k, int n, const EllipticPoint& point, prec_t prec) {
    if (k < 2 || n < 0) throw DomainError("basis_principal_part needs k >= 2, n >= 0");
    PrincipalPart pp{point, {}, {}};
    EpsilonTilde eps = epsilon_tilde(2 * k + 2 * n, point, prec);
    if (eps.is_zero()) return pp;
    const BigReal& v0 = point.height();
    BigComplex two_i(0, 2, prec);
    BigComplex two_i_pow(1, 0, prec);
    for (int j = 0; j <= n; ++j) {
        mpq_class c(factorial(n) * factorial(2 * k + n - 1), factorial(2 * k - 1 + j) * factorial(n - j));
        c.canonicalize();
        BigComplex value = eps.value * two_i_pow * BigReal(c, prec) / pow(round_to(v0, prec), n - j);
        pp.coeffs.emplace(j + 1, std::move(value));
        two_i_pow *= two_i;
    }
    return pp;
}

BasisRepresentation solve_basis(const std::vector<PrincipalPart>& parts, int k, prec_t prec) {
    if (k < 2) throw DomainError("solve_basis needs weight 2 - 2k <= -2");
    const prec_t w = prec + 32;
    BasisRepresentation rep{k, {}};
    for (const auto& part : parts) {
        if (part.empty()) continue;
        std::map<int, BigComplex> residual;
        BigReal scale(w);
        for (const auto& [order, c] : part.coeffs) {
            residual.emplace(order, round_to(c, w));
            scale = max(scale, c.abs());
        }
        const BigReal tol = scale * two_pow(-static_cast<long>(prec) / 2, w);
        const int leading = part.max_order();
        for (;;) {
            int top = 0;
            for (auto it = residual.rbegin(); it != residual.rend(); ++it)
                if (it->second.abs() > tol) {
                    top = it->first;
                    break;
                }
            if (top == 0) break;
            const int n = top - 1;
            if (epsilon_tilde(2 * k + 2 * n, part.point, w).is_zero()) {
                if (top == leading)
                    throw CongruenceError("no such meromorphic cusp form: pole of order " + std::to_string(top) +
                                          " at " + part.point.name() + " violates n = 1 - k (mod " +
                                          std::to_string(part.point.omega) + ") for k = " + std::to_string(k));
                PrincipalPart left{part.point, residual, {}};
                throw ResidualError("principal part inconsistent with basis tails", left.to_string());
            }
            PrincipalPart basis = basis_principal_part(k, n, part.point, w);
            BigComplex a = residual.at(top) / basis.coeffs.at(top);
            for (const auto& [order, c] : basis.coeffs) {
                auto it = residual.find(order);
                if (it == residual.end()) it = residual.emplace(order, BigComplex(w)).first;
                it->second -= a * c;
            }
            residual[top] = BigComplex(w);
            rep.terms.push_back({part.point, n, round_to(a, prec)});
        }
    }
    return rep;
}

int source_k(const FormExpression& expr) {
    int wt = expr.weight();
    if (wt % 2 != 0 || wt >= 0) throw DomainError("expected a form of even negative weight, got weight " + std::to_string(wt));
    return (2 - wt) / 2;
}

std::vector<PrincipalPart> elliptic_principal_parts(const FormExpression& expr, prec_t prec) {
    std::vector<PrincipalPart> out;
    for (PointTag tag : {PointTag::I, PointTag::Rho}) {
        PrincipalPart pp = principal_part(expr, EllipticPoint::from_tag(tag, prec), prec);
        if (!pp.empty()) out.push_back(std::move(pp));
    }
    return out;
}

BasisRepresentation simple_pole_rep(const FormExpression& expr, prec_t prec) {
    const int k = source_k(expr);
    BasisRepresentation rep{k, {}};
    for (const auto& pp : elliptic_principal_parts(expr, prec)) {
        if (pp.max_order() > 1) throw DomainError("pole of order " + std::to_string(pp.max_order()) + " at " + pp.point.name() + " is not simple");
        EpsilonTilde eps = epsilon_tilde(2 * k, pp.point, prec);
        if (eps.is_zero())
            throw CongruenceError("no basis element H_" + std::to_string(2 * k) + " has a pole at " + pp.point.name());
        rep.terms.push_back({pp.point, 0, pp.coeffs.at(1) / eps.value});
    }
    return rep;
}

}  // namespace merocusp
