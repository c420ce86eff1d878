#include "merocusp/coeff_engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "merocusp/error.hpp"
#include "merocusp/lattice.hpp"

namespace merocusp {

RaisingExpansion raising_expansion(int k, int n) {
    if (k < 2 || n < 0) throw DomainError("raising_expansion needs k >= 2, n >= 0");
    RaisingExpansion e{k, n, {}};
    mpz_class top, bottom, binom;
    for (int j = 0; j <= n; ++j) {
        mpz_fac_ui(top.get_mpz_t(), 2 * k + n - 1);
        mpz_fac_ui(bottom.get_mpz_t(), 2 * k + n - 1 - j);
        mpz_bin_uiui(binom.get_mpz_t(), n, j);
        e.terms.push_back({j, top / bottom * binom, n - j, n - j});
    }
    return e;
}

RaisingExpansion raise_once(const RaisingExpansion& e) {
    const int weight = 2 * e.k + 2 * e.n;
    std::map<int, RaisingTerm> by_j;
    auto add = [&](int j, const mpz_class& c, int power, int deriv) {
        auto [it, fresh] = by_j.try_emplace(j, RaisingTerm{j, c, power, deriv});
        if (!fresh) {
            if (it->second.power != power || it->second.derivative_order != deriv)
                throw NumericalError("raising terms with mismatched derivative orders");
            it->second.coefficient += c;
        }
    };
    for (const auto& t : e.terms) {
        add(t.j, t.coefficient, t.power + 1, t.derivative_order + 1);
        add(t.j + 1, t.coefficient * (weight - t.j), t.power, t.derivative_order);
    }
    RaisingExpansion out{e.k, e.n + 1, {}};
    for (auto& [j, t] : by_j) out.terms.push_back(t);
    return out;
}

bool operator==(const RaisingExpansion& a, const RaisingExpansion& b) {
    if (a.k != b.k || a.n != b.n || a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        const auto& x = a.terms[i];
        const auto& y = b.terms[i];
        if (x.j != y.j || x.coefficient != y.coefficient || x.power != y.power ||
            x.derivative_order != y.derivative_order)
            return false;
    }
    return true;
}

namespace {

Field field_of(const EllipticPoint& p) {
    if (p.tag == PointTag::I) return Field::gaussian;
    if (p.tag == PointTag::Rho) return Field::eisenstein;
    throw DomainError("ideal sums need the point i or rho");
}

void check_bound(long bound, long m, const BigReal& v0) {
    double need = std::ceil(4 * M_PI * static_cast<double>(m) * v0.to_double());
    if (bound < 16 || static_cast<double>(bound) < need)
        throw DomainError("norm_bound must be at least max(16, 4 pi m v0)");
}

}  // namespace

TruncatedSum f_series_coeff(int weight, int j, int r, const EllipticPoint& point, long m, long norm_bound,
                            prec_t prec, Execution mode) {
    if (weight < 4 || weight % 2 != 0) throw DomainError("weight must be even and at least 4");
    if (j < 0 || r < 0 || m < 0) throw DomainError("j, r, m must be non-negative");
    if (weight / 2 - j <= 1) throw DomainError("nonconvergent parameter regime");
    Field field = field_of(point);
    check_bound(norm_bound, m, point.height());
    SeriesTerm term{weight, j, r, BigComplex(1, 0, prec + 32)};
    auto table = IdealTable::get(field, norm_bound, prec + 32);
    std::span<const SeriesTerm> terms(&term, 1);
    return {ideal_sum(*table, terms, m, prec, mode), ideal_tail_bound(field, terms, m, norm_bound, prec), norm_bound};
}

TruncatedSum general_coeff_sum(int weight, const EllipticPoint& point, int j, int r, long m, long height_bound,
                               prec_t prec, Execution mode) {
    if (weight < 4 || weight % 2 != 0) throw DomainError("weight must be even and at least 4");
    if (j < 0 || r < 0 || m < 0) throw DomainError("j, r, m must be non-negative");
    const long s = weight / 2 - j;
    if (s <= 1) throw DomainError("nonconvergent parameter regime");
    check_bound(height_bound, m, point.height());
    const prec_t w = prec + 32;
    const BigComplex z = round_to(point.tau, w);
    const BigReal& v = z.im;
    if (m == 0 && r > 0) return {BigComplex(prec), BigReal(0L, prec), height_bound};

    struct Pair {
        long c, d;
        double key;
    };
    std::vector<Pair> pairs;
    const double u = z.re.to_double(), vd = v.to_double(), hb = static_cast<double>(height_bound);
    const long cmax = static_cast<long>(std::sqrt(hb) / vd) + 1;
    const BigReal limit(height_bound, w);
    for (long c = -cmax; c <= cmax; ++c) {
        double rem = hb - c * c * vd * vd;
        if (rem < 0) continue;
        double center = -c * u, half = std::sqrt(rem);
        for (long d = static_cast<long>(std::floor(center - half)) - 1; d <= static_cast<long>(std::ceil(center + half)) + 1;
             ++d) {
            if (std::gcd(c, d) != 1) continue;
            BigComplex lin = z * c;
            lin.re += d;
            if (lin.norm() > limit) continue;
            pairs.push_back({c, d, lin.norm().to_double()});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.key != b.key) return a.key < b.key;
        return std::tie(a.c, a.d) < std::tie(b.c, b.d);
    });

    // (2 pi i m)^r
    BigComplex prefactor = pow(BigComplex(BigReal(0L, w), 2L * pi(w) * m), r);
    if (r == 0) prefactor = BigComplex(1, 0, w);
    auto term = [&](std::size_t i) {
        const auto& p = pairs[i];
        BigComplex lin = z * p.c;
        lin.re += p.d;
        BigReal height = pow(lin.norm() / v, j);
        return b_kernel(weight, p.c, p.d, z, m, w) * prefactor * height;
    };
    BigComplex value = ordered_sum(pairs.size(), w, term, mode);

    const BigReal r0 = (BigReal(1L, w) + z.abs()) / 2;
    BigReal tail = lattice_tail(s, height_bound, r0, pi(w) / v) * pow(v, -static_cast<long>(j)) *
                   exp(2L * pi(w) * m * v / height_bound);
    if (r > 0) tail *= pow(2L * pi(w) * m, r);
    return {round_to(value, prec), round_to(tail, prec), height_bound};
}

std::vector<SeriesTerm> representation_terms(const BasisRepresentation& rep, PointTag tag, const BigComplex& scale) {
    std::vector<SeriesTerm> out;
    for (const auto& t : rep.terms) {
        if (t.point.tag != tag) continue;
        RaisingExpansion e = raising_expansion(rep.k, t.n);
        for (const auto& rt : e.terms) {
            const prec_t w = std::min(t.a.prec(), scale.prec());
            BigComplex c = t.a * scale * BigReal(rt.coefficient, w) * static_cast<long>(t.point.omega);
            out.push_back({2 * rep.k + 2 * t.n, rt.j, rt.power, std::move(c)});
        }
    }
    return out;
}

TruncatedSum assemble_coefficient(const BasisRepresentation& rep, long m, long norm_bound, prec_t prec,
                                  Execution mode) {
    const prec_t w = prec + 32;
    BigComplex value(w);
    BigReal tail(0L, w);
    const BigComplex one(1, 0, w);
    for (PointTag tag : {PointTag::I, PointTag::Rho}) {
        auto terms = representation_terms(rep, tag, one);
        if (terms.empty()) continue;
        Field field = tag == PointTag::I ? Field::gaussian : Field::eisenstein;
        check_bound(norm_bound, m, field_height(field, w));
        auto table = IdealTable::get(field, norm_bound, w);
        value += ideal_sum(*table, terms, m, w, mode);
        tail += ideal_tail_bound(field, terms, m, norm_bound, w);
    }
    // Generic points: each coset of the stabilizer of infinity is a pair modulo +-1.
    const BigComplex minus_two_i(0, -2, w);
    for (const auto& t : rep.terms) {
        if (t.point.tag != PointTag::Generic) continue;
        RaisingExpansion e = raising_expansion(rep.k, t.n);
        for (const auto& rt : e.terms) {
            TruncatedSum part = general_coeff_sum(2 * rep.k + 2 * t.n, t.point, rt.j, rt.power, m, norm_bound, w, mode);
            BigComplex c = round_to(t.a, w) * BigReal(rt.coefficient, w) * pow(minus_two_i, rt.power) / BigReal(2L, w);
            value += c * part.value;
            tail += c.abs() * part.tail_bound;
        }
    }
    return {round_to(value, prec), round_to(tail, prec), norm_bound};
}

IdentityCheck identity_check_m0(long norm_bound, prec_t prec, IdentityForm form) {
    if (norm_bound < 100) throw DomainError("identity check needs norm_bound >= 100");
    const prec_t w = prec + 32;
    const BigReal e4 = closed_value(4, PointTag::I, w);
    const BigReal p = pi(w);
    const long a = form == IdentityForm::published ? 9 : 243;
    const long den = form == IdentityForm::published ? 182 : 91;
    std::vector<SeriesTerm> terms{
        {32, 3, 0, BigComplex(BigReal(a, w))},
        {28, 1, 0, BigComplex(-4L * p * p * e4)},
    };
    auto table = IdealTable::get(Field::gaussian, norm_bound, w);
    BigReal lhs = ideal_sum(*table, terms, 0, w).re;
    BigReal rhs = 27L * pow(p, 3) * pow(e4, 8) / den;
    BigReal tail = ideal_tail_bound(Field::gaussian, terms, 0, norm_bound, w);
    return {round_to(lhs, prec), round_to(rhs, prec), round_to(abs(lhs - rhs), prec), round_to(tail, prec)};
}

}  // namespace merocusp
