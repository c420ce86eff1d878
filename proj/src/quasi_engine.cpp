#include "merocusp/quasi_engine.hpp"

#include <cmath>
#include <optional>

#include "merocusp/error.hpp"
#include "merocusp/kernels.hpp"

namespace merocusp {

namespace {

mpz_class factorial(long n) {
    if (n < 0) throw DomainError("negative factorial");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

void check_meromorphic(const FormExpression& f) {
    auto mono = as_monomial(f);
    if (!mono || mono->e2 != 0) throw DomainError("the meromorphic factor must not contain E2 or D");
}

}  // namespace

mpq_class ckl_coefficient(int k, int l, int j) {
    mpq_class c(factorial(2 * k - l - j - 2) * (2 * k - 2 * l - 1), factorial(2 * k - l - 1));
    c.canonicalize();
    return c;
}

mpq_class fn_combination_coefficient(int k, int n, int l) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, l);
    mpq_class c(binom * factorial(2 * k - 2 * n - 1), factorial(2 * k - 2 * n - 1 + l));
    c.canonicalize();
    return l % 2 ? mpq_class(-c) : c;
}

std::vector<PrincipalPart> fn_principal_parts(const FormExpression& f, int k, int level, prec_t prec) {
    const prec_t w = prec + 64;
    const BigReal third_pi = pi(w) / 3;
    const BigComplex two_i(0, 2, w);
    std::vector<PrincipalPart> out;
    for (PointTag tag : {PointTag::I, PointTag::Rho}) {
        EllipticPoint point = EllipticPoint::from_tag(tag, w);
        LaurentSeries lf = laurent_at(f, point, level + 1, w);
        if (lf.lowest_order >= 0) continue;
        const int pole = -lf.lowest_order;
        LaurentSeries e2 = taylor_at(FormExpression::generator(2), point, pole + level + 2, w);
        LaurentSeries e2_pow = laurent_constant(point, BigComplex(1, 0, w), pole + level + 2);
        std::vector<LaurentSeries> e2_powers{e2_pow};
        for (int i = 1; i <= level; ++i) e2_powers.push_back(multiply(e2_powers.back(), e2));

        std::optional<LaurentSeries> total;
        for (int l = 0; l <= level; ++l) {
            LaurentSeries g = multiply(e2_powers[level - l], lf);
            for (int d = 0; d < l; ++d) g = derivative(g);
            BigComplex c = pow(two_i, l) * BigReal(fn_combination_coefficient(k, level, l), w) * pow(third_pi, level - l);
            g = scale(g, c);
            total = total ? add(*total, g) : g;
        }
        PrincipalPart pp = principal_part(*total);
        for (auto& [order, c] : pp.coeffs) c = round_to(c, prec);
        pp.point = EllipticPoint::from_tag(tag, prec);
        if (!pp.empty()) out.push_back(std::move(pp));
    }
    return out;
}

QuasiExpansion quasi_expansion(const FormExpression& f, int n, prec_t prec) {
    check_meromorphic(f);
    const int k = source_k(f);
    if (n < 0) throw DomainError("E2 exponent must be non-negative");
    if (k - n < 2) throw DomainError("weight of E2^n f must stay negative (2 - 2k + 2n < 0)");
    QuasiExpansion q;
    q.k = k;
    q.n = n;
    q.f = f;
    q.levels.push_back(solve_basis(elliptic_principal_parts(f, prec), k, prec));
    q.f_basis = q.levels.front();
    q.fn_coefficients.push_back({mpq_class(1)});
    for (int level = 1; level <= n; ++level) {
        q.levels.push_back(solve_basis(fn_principal_parts(f, k, level, prec), k - level, prec));
        std::vector<mpq_class> row;
        for (int l = 0; l <= level; ++l) row.push_back(fn_combination_coefficient(k, level, l));
        q.fn_coefficients.push_back(std::move(row));
    }
    return q;
}

TruncatedSum quasi_coeff_general(const QuasiExpansion& q, long m, long norm_bound, prec_t prec, Execution mode) {
    const prec_t w = prec + 32;
    const BigReal three_pi = BigReal(3L, w) / pi(w);
    const BigReal minus_four_pi_m = -4L * pi(w) * m;
    // lambda[a][L]: coefficient of A_L (level-L assembly) in the expansion of E2^a f.
    std::vector<std::vector<BigReal>> lambda;
    for (int a = 0; a <= q.n; ++a) {
        std::vector<BigReal> row(q.n + 1, BigReal(0L, w));
        row[a] = pow(three_pi, a);
        for (int l = 1; l <= a; ++l) {
            BigReal c = BigReal(fn_combination_coefficient(q.k, a, l), w) * pow(three_pi, l) * pow(minus_four_pi_m, l);
            for (int L = 0; L <= q.n; ++L) row[L] -= c * lambda[a - l][L];
        }
        lambda.push_back(std::move(row));
    }

    BigComplex value(w);
    BigReal tail(0L, w);
    for (PointTag tag : {PointTag::I, PointTag::Rho}) {
        std::vector<SeriesTerm> terms;
        for (int L = 0; L <= q.n; ++L) {
            if (lambda[q.n][L].is_zero()) continue;
            auto part = representation_terms(q.levels[L], tag, BigComplex(lambda[q.n][L]));
            terms.insert(terms.end(), part.begin(), part.end());
        }
        if (terms.empty()) continue;
        Field field = tag == PointTag::I ? Field::gaussian : Field::eisenstein;
        if (norm_bound < 16 || norm_bound < 4 * M_PI * m * field_height(field, 64).to_double())
            throw DomainError("norm_bound must be at least max(16, 4 pi m v0)");
        auto table = IdealTable::get(field, norm_bound, w);
        value += ideal_sum(*table, terms, m, w, mode);
        tail += ideal_tail_bound(field, terms, m, norm_bound, w);
    }
    for (const auto& level : q.levels)
        for (const auto& t : level.terms)
            if (t.point.tag == PointTag::Generic) throw DomainError("quasi expansions support poles at i and rho only");
    return {round_to(value, prec), round_to(tail, prec), norm_bound};
}

TruncatedSum quasi_coeff_general(const FormExpression& f, int n, long m, long norm_bound, prec_t prec,
                                 Execution mode) {
    return quasi_coeff_general(quasi_expansion(f, n, prec), m, norm_bound, prec, mode);
}

TruncatedSum simple_pole_quasi_coeff(const BasisRepresentation& f_rep, int j, long m, long norm_bound, prec_t prec,
                                     Execution mode) {
    const int k = f_rep.k;
    if (j < 0) throw DomainError("E2 exponent must be non-negative");
    if (j >= k - 1) throw DomainError("outside validity range of the simple-pole identity (need j < k - 1)");
    for (const auto& t : f_rep.terms)
        if (t.n != 0 || t.point.tag == PointTag::Generic)
            throw DomainError("simple-pole identity needs simple poles at i or rho");
    const prec_t w = prec + 32;
    const BigReal scale = pow(BigReal(3L, w) / pi(w), j);
    BigComplex value(w);
    BigReal tail(0L, w);
    for (PointTag tag : {PointTag::I, PointTag::Rho}) {
        std::vector<SeriesTerm> terms;
        for (const auto& t : f_rep.terms)
            if (t.point.tag == tag)
                terms.push_back({2 * k, j, 0, round_to(t.a, w) * scale * static_cast<long>(t.point.omega)});
        if (terms.empty()) continue;
        Field field = tag == PointTag::I ? Field::gaussian : Field::eisenstein;
        if (norm_bound < 16 || norm_bound < 4 * M_PI * m * field_height(field, 64).to_double())
            throw DomainError("norm_bound must be at least max(16, 4 pi m v0)");
        auto table = IdealTable::get(field, norm_bound, w);
        value += ideal_sum(*table, terms, m, w, mode);
        tail += ideal_tail_bound(field, terms, m, norm_bound, w);
    }
    return {round_to(value, prec), round_to(tail, prec), norm_bound};
}

}  // namespace merocusp
