#include "merocusp/special_values.hpp"

#include <map>

#include <gmpxx.h>

#include "merocusp/error.hpp"
#include "merocusp/qseries.hpp"

namespace merocusp {

EllipticPoint EllipticPoint::i(prec_t prec) {
    return {PointTag::I, BigComplex(0, 1, prec), 2};
}

EllipticPoint EllipticPoint::rho(prec_t prec) {
    BigReal half(1L, prec);
    half /= 2;
    return {PointTag::Rho, BigComplex(half, sqrt(BigReal(3L, prec)) / 2), 3};
}

EllipticPoint EllipticPoint::generic(const BigComplex& tau) {
    if (tau.im.sign() <= 0) throw DomainError("point must lie in the upper half-plane");
    return {PointTag::Generic, tau, 1};
}

EllipticPoint EllipticPoint::from_tag(PointTag tag, prec_t prec) {
    switch (tag) {
        case PointTag::I: return i(prec);
        case PointTag::Rho: return rho(prec);
        case PointTag::Generic: break;
    }
    throw DomainError("generic points need an explicit value");
}

std::string EllipticPoint::name() const {
    switch (tag) {
        case PointTag::I: return "i";
        case PointTag::Rho: return "rho";
        case PointTag::Generic: break;
    }
    return "tau=" + tau.re.to_string(20) + "," + tau.im.to_string(20);
}

BigReal closed_value(int weight, PointTag point, prec_t prec) {
    if (prec < 64) throw DomainError("precision must be at least 64 bits");
    if (point == PointTag::Generic) throw DomainError("closed values exist only at i and rho");
    const prec_t w = prec + 32;
    BigReal p = pi(w);
    BigReal out(w);
    if (point == PointTag::I) {
        switch (weight) {
            case 2: out = 3L / p; break;
            case 4: {
                BigReal ratio = gamma(BigReal(mpq_class(1, 4), w)) / gamma(BigReal(mpq_class(3, 4), w));
                out = 12L / pow(8L * p, 2) * pow(ratio, 4);
                break;
            }
            case 6: out = BigReal(0L, w); break;
            default: throw DomainError("unsupported weight " + std::to_string(weight) + " at i");
        }
    } else {
        BigReal s3 = sqrt(BigReal(3L, w));
        switch (weight) {
            case 2: out = 2L * s3 / p; break;
            case 4: out = BigReal(0L, w); break;
            case 6: {
                BigReal ratio = gamma(BigReal(mpq_class(1, 3), w)) / gamma(BigReal(mpq_class(2, 3), w));
                out = 24L * s3 / pow(6L * p, 3) * pow(ratio, 9);
                break;
            }
            default: throw DomainError("unsupported weight " + std::to_string(weight) + " at rho");
        }
    }
    return round_to(out, prec);
}

BigComplex qseries_eval(int weight, const BigComplex& tau, prec_t prec) {
    long factor;
    switch (weight) {
        case 2: factor = -24; break;
        case 4: factor = 240; break;
        case 6: factor = -504; break;
        case 10: factor = -264; break;
        default: throw DomainError("weight not in {2,4,6,10}");
    }
    const prec_t w = prec + 32;
    BigComplex t(BigReal(tau.re, w), BigReal(tau.im, w));
    BigReal half(1L, w);
    half /= 2;
    if (t.im < half) throw DomainError("evaluation point too low");

    BigReal two_pi = 2L * pi(w);
    // q = e^{2 pi i tau}
    BigComplex q = BigComplex::polar(exp(-two_pi * t.im), two_pi * t.re);
    BigReal qabs = exp(-two_pi * t.im);
    BigReal cw(std::abs(factor), w);
    BigReal cutoff = two_pow(-static_cast<long>(prec) - 8, w);

    KahanSum sum(w);
    BigReal scale(1L, w);  // 1 + sum of |terms|
    BigComplex qn(1, 0, w);
    for (long n = 1;; ++n) {
        qn *= q;
        BigReal sigma(divisor_sigma(weight - 1, n), w);
        BigComplex term = qn * (sigma * factor);
        scale += term.abs();
        sum.add(term);
        // sum_{k>n} |c_w| sigma(k)|q|^k <= |c_w| sum_{k>n} k^w |q|^k
        // <= |c_w| (n+1)^w |q|^{n+1} / (1 - ((n+2)/(n+1))^w |q|)
        BigReal ratio = pow(BigReal(n + 2, w) / BigReal(n + 1, w), weight) * qabs;
        if (ratio < 1L) {
            BigReal tail = cw * pow(BigReal(n + 1, w), weight) * pow(qabs, n + 1) / (1L - ratio);
            if (tail <= cutoff * scale) break;
        }
    }
    BigComplex out = sum.value();
    out.re += 1L;
    return round_to(out, prec);
}

const BigComplex& DerivativeJet::value(int weight, int r) const {
    int idx = weight == 2 ? 0 : weight == 4 ? 1 : weight == 6 ? 2 : -1;
    if (idx < 0) throw DomainError("jet weight not in {2,4,6}");
    if (r < 0 || r > depth) throw DomainError("jet order out of range");
    return table[idx][r];
}

namespace {

using Exponents = std::array<int, 3>;
using Poly = std::map<Exponents, mpq_class>;

void add_term(Poly& p, const Exponents& e, const mpq_class& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = p.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) p.erase(it);
    }
}

// delta = d/dz / (pi i):
//   delta E2 = (E2^2 - E4)/6, delta E4 = 2(E2 E4 - E6)/3, delta E6 = E2 E6 - E4^2
Poly delta(const Poly& p) {
    Poly out;
    for (const auto& [e, c] : p) {
        auto [a, b, g] = e;
        if (a > 0) {
            mpq_class f = c * a;
            add_term(out, {a + 1, b, g}, f / 6);
            add_term(out, {a - 1, b + 1, g}, -f / 6);
        }
        if (b > 0) {
            mpq_class f = c * b;
            add_term(out, {a + 1, b, g}, f * mpq_class(2, 3));
            add_term(out, {a, b - 1, g + 1}, -f * mpq_class(2, 3));
        }
        if (g > 0) {
            mpq_class f = c * g;
            add_term(out, {a + 1, b, g}, f);
            add_term(out, {a, b + 2, g - 1}, -f);
        }
    }
    return out;
}

BigComplex evaluate(const Poly& p, const std::array<BigComplex, 3>& base, prec_t w) {
    std::array<std::vector<BigComplex>, 3> powers;
    for (const auto& [e, c] : p)
        for (int v = 0; v < 3; ++v) {
            auto& pw = powers[v];
            if (pw.empty()) pw.emplace_back(1, 0, w);
            while (static_cast<int>(pw.size()) <= e[v]) pw.push_back(pw.back() * base[v]);
        }
    KahanSum sum(w);
    for (const auto& [e, c] : p) {
        BigComplex term = powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
        sum.add(term * BigReal(c, w));
    }
    return sum.value();
}

}  // namespace

DerivativeJet derivative_jet(const EllipticPoint& point, int depth, prec_t prec) {
    if (depth < 0) throw DomainError("negative jet depth");
    const prec_t w = prec + 32 + 4 * depth;
    std::array<BigComplex, 3> base{BigComplex(w), BigComplex(w), BigComplex(w)};
    if (point.tag == PointTag::Generic) {
        for (int v = 0; v < 3; ++v) base[v] = qseries_eval(2 * v + 2, point.tau, w);
    } else {
        for (int v = 0; v < 3; ++v) base[v] = BigComplex(closed_value(2 * v + 2, point.tag, w));
    }

    DerivativeJet jet{point, depth, {}};
    BigComplex pii(BigReal(0L, w), pi(w));
    for (int v = 0; v < 3; ++v) {
        Poly p;
        Exponents e{0, 0, 0};
        e[v] = 1;
        p[e] = 1;
        BigComplex factor(1, 0, w);
        for (int r = 0; r <= depth; ++r) {
            jet.table[v].push_back(round_to(factor * evaluate(p, base, w), prec));
            if (r < depth) {
                p = delta(p);
                factor *= pii;
            }
        }
    }
    return jet;
}

E10Jet e10_jet(const EllipticPoint& point, int depth, prec_t prec) {
    const prec_t w = prec + 32;
    DerivativeJet jet = derivative_jet(point, depth, w);
    E10Jet out{point, depth, {}};
    for (int r = 0; r <= depth; ++r) {
        KahanSum sum(w);
        mpz_class binom = 1;
        for (int s = 0; s <= r; ++s) {
            sum.add(jet.value(4, s) * jet.value(6, r - s) * BigReal(binom, w));
            binom = binom * (r - s) / (s + 1);
        }
        out.values.push_back(round_to(sum.value(), prec));
    }
    return out;
}

}  // namespace merocusp
