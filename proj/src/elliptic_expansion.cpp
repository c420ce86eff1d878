#include "merocusp/elliptic_expansion.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "merocusp/error.hpp"

namespace merocusp {

BigComplex LaurentSeries::coefficient(int order) const {
    if (order > highest_order()) throw NumericalError("Laurent coefficient requested past the valid range");
    if (order < lowest_order) return BigComplex(prec());
    return coeffs[order - lowest_order];
}

prec_t LaurentSeries::prec() const { return coeffs.empty() ? point.tau.prec() : coeffs.front().prec(); }

LaurentSeries laurent_constant(const EllipticPoint& point, const BigComplex& value, int highest_order) {
    LaurentSeries s{point, 0, {}};
    s.coeffs.assign(static_cast<std::size_t>(std::max(highest_order, 0)) + 1, BigComplex(value.prec()));
    s.coeffs[0] = value;
    return s;
}

LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries out{a.point, a.lowest_order + b.lowest_order, {}};
    std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
    prec_t w = std::min(a.prec(), b.prec());
    for (std::size_t i = 0; i < n; ++i) {
        KahanSum sum(w);
        for (std::size_t s = 0; s <= i; ++s)
            if (!a.coeffs[s].is_zero() && !b.coeffs[i - s].is_zero()) sum.add(a.coeffs[s] * b.coeffs[i - s]);
        out.coeffs.push_back(sum.value());
    }
    return out;
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries out{a.point, std::min(a.lowest_order, b.lowest_order), {}};
    int high = std::min(a.highest_order(), b.highest_order());
    for (int n = out.lowest_order; n <= high; ++n) out.coeffs.push_back(a.coefficient(n) + b.coefficient(n));
    return out;
}

LaurentSeries scale(const LaurentSeries& a, const BigComplex& s) {
    LaurentSeries out = a;
    for (auto& c : out.coeffs) c = c * s;
    return out;
}

LaurentSeries derivative(const LaurentSeries& a) {
    LaurentSeries out{a.point, a.lowest_order - 1, {}};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs.push_back(a.coeffs[i] * (a.lowest_order + static_cast<long>(i)));
    if (a.lowest_order == 0 && !out.coeffs.empty()) {
        out.coeffs.erase(out.coeffs.begin());
        out.lowest_order = 0;
    }
    return out;
}

LaurentSeries reciprocal(const LaurentSeries& a) {
    const prec_t w = a.prec();
    BigReal scale(w);
    for (const auto& c : a.coeffs) scale = max(scale, c.abs());
    BigReal tol = scale * two_pow(-static_cast<long>(w) / 2, w);
    std::size_t v = 0;
    while (v < a.coeffs.size() && !(a.coeffs[v].abs() > tol)) ++v;
    if (v == a.coeffs.size() || scale.is_zero()) throw NumericalError("cannot determine vanishing order");

    LaurentSeries out{a.point, -(a.lowest_order + static_cast<int>(v)), {}};
    std::size_t n = a.coeffs.size() - v;
    BigComplex inv0 = BigComplex(1, 0, w) / a.coeffs[v];
    out.coeffs.push_back(inv0);
    for (std::size_t m = 1; m < n; ++m) {
        KahanSum sum(w);
        for (std::size_t i = 1; i <= m; ++i) sum.add(a.coeffs[v + i] * out.coeffs[m - i]);
        out.coeffs.push_back(-(sum.value() * inv0));
    }
    return out;
}

LaurentSeries power(const LaurentSeries& a, long e) {
    if (e < 0) return power(reciprocal(a), -e);
    LaurentSeries result = laurent_constant(a.point, BigComplex(1, 0, a.prec()), a.highest_order() - a.lowest_order);
    LaurentSeries base = a;
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return result;
}

namespace {

class LaurentAlgebra {
public:
    LaurentAlgebra(const EllipticPoint& point, int terms, prec_t w) : point_(point), terms_(terms), w_(w) {}

    LaurentSeries generator(int weight) {
        LaurentSeries s{point_, 0, {}};
        if (weight == 10) {
            if (!e10_) e10_ = e10_jet(point_, terms_ - 1, w_);
            fill(s, e10_->values);
        } else {
            if (!jet_) jet_ = derivative_jet(point_, terms_ - 1, w_);
            fill(s, jet_->table[weight / 2 - 1]);
        }
        return s;
    }

    LaurentSeries constant(const mpq_class& c) {
        return laurent_constant(point_, BigComplex(BigReal(c, w_)), terms_ - 1);
    }

    LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b) { return merocusp::multiply(a, b); }
    LaurentSeries reciprocal(const LaurentSeries& a) { return merocusp::reciprocal(a); }
    LaurentSeries power(const LaurentSeries& a, long e) { return merocusp::power(a, e); }

    // D = (1/2 pi i) d/dz
    LaurentSeries dee(const LaurentSeries& a) {
        BigComplex two_pi_i(BigReal(0L, w_), 2L * pi(w_));
        return scale(derivative(a), BigComplex(1, 0, w_) / two_pi_i);
    }

private:
    void fill(LaurentSeries& s, const std::vector<BigComplex>& derivs) {
        mpz_class fact = 1;
        for (int r = 0; r < terms_; ++r) {
            if (r > 0) fact *= r;
            s.coeffs.push_back(derivs[r] / BigReal(fact, w_));
        }
    }

    EllipticPoint point_;
    int terms_;
    prec_t w_;
    std::optional<DerivativeJet> jet_;
    std::optional<E10Jet> e10_;
};

int dee_depth(const FormExpression& e) {
    int inner = 0;
    std::size_t n = e.kind() == FormExpression::Kind::product ? 2
                    : e.kind() == FormExpression::Kind::generator || e.kind() == FormExpression::Kind::constant ? 0
                                                                                                               : 1;
    for (std::size_t i = 0; i < n; ++i) inner = std::max(inner, dee_depth(e.child(i)));
    return inner + (e.kind() == FormExpression::Kind::dee ? 1 : 0);
}

LaurentSeries finish(LaurentSeries s, int depth, prec_t prec) {
    while (s.highest_order() > depth) s.coeffs.pop_back();
    for (auto& c : s.coeffs) c = round_to(c, prec);
    return s;
}

}  // namespace

LaurentSeries taylor_at(const FormExpression& expr, const EllipticPoint& point, int depth, prec_t prec) {
    if (expr.contains_reciprocal()) throw DomainError("expression contains a reciprocal; use laurent_at");
    if (depth < 0) throw DomainError("negative depth");
    const prec_t w = prec + 64;
    LaurentAlgebra alg(point, depth + 1 + dee_depth(expr), w);
    return finish(expr.fold(alg), depth, prec);
}

LaurentSeries laurent_at(const FormExpression& expr, const EllipticPoint& point, int depth, prec_t prec) {
    const prec_t w = prec + 64;
    int terms = std::max(depth, 0) + 8 + dee_depth(expr);
    for (int attempt = 0; attempt < 8; ++attempt) {
        LaurentAlgebra alg(point, terms, w);
        LaurentSeries s = expr.fold(alg);
        if (s.highest_order() >= depth) return finish(std::move(s), depth, prec);
        terms += depth - s.highest_order() + 6;
    }
    throw NumericalError("Laurent expansion did not reach the requested depth");
}

BigComplex PrincipalPart::coefficient(int order, prec_t prec) const {
    auto it = coeffs.find(order);
    return it == coeffs.end() ? BigComplex(prec) : it->second;
}

std::string PrincipalPart::to_string() const {
    std::ostringstream os;
    os << point.name() << ": {";
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (!first) os << ", ";
        first = false;
        os << "-" << it->first << ": (" << it->second.re.to_string(20) << ", " << it->second.im.to_string(20) << ")";
    }
    os << "}";
    return os.str();
}

PrincipalPart principal_part(const LaurentSeries& series) {
    PrincipalPart pp{series.point, {}, {}};
    const prec_t w = series.prec();
    BigReal scale(w);
    for (int n = series.lowest_order; n < 0; ++n) scale = max(scale, series.coefficient(n).abs());
    BigReal tol = scale * two_pow(-static_cast<long>(w) / 2, w);
    for (int n = series.lowest_order; n < 0; ++n) {
        BigComplex c = series.coefficient(n);
        if (c.abs() > tol)
            pp.coeffs.emplace(-n, c);
        else
            pp.flagged_zero.insert(-n);
    }
    return pp;
}

PrincipalPart principal_part(const FormExpression& expr, const EllipticPoint& point, prec_t prec) {
    return principal_part(laurent_at(expr, point, 0, prec));
}

bool leading_order_admissible(const PrincipalPart& pp, int k) {
    int n = pp.max_order();
    if (n == 0) return true;
    long r = ((static_cast<long>(n) - 1 + k) % pp.point.omega + pp.point.omega) % pp.point.omega;
    return r == 0;
}

}  // namespace merocusp
