// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance               run all criteria
//   acceptance --criterion N run one
//   acceptance --verbose     per-item detail

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "merocusp/basis_solver.hpp"
#include "merocusp/coeff_engine.hpp"
#include "merocusp/error.hpp"
#include "merocusp/form_expression.hpp"
#include "merocusp/kernels.hpp"
#include "merocusp/lattice.hpp"
#include "merocusp/pipeline.hpp"
#include "merocusp/quasi_engine.hpp"
#include "merocusp/special_values.hpp"

using namespace merocusp;

namespace {

constexpr prec_t P = 256;
constexpr long kNormBound = 5000;
constexpr double kCoeffTol = 1e-8;
constexpr double kBasisTol = 1e-20;

bool verbose = false;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

std::string sci(const BigReal& x) { return x.is_zero() ? "0" : x.to_string(3); }

void note(const std::string& s) {
    if (verbose) std::cout << "    " << s << "\n";
}

// max relative error of coefficient(m) against the oracle for m = 0..10
double oracle_sweep(const std::string& label, const std::vector<mpq_class>& oracle,
                    const std::function<TruncatedSum(long)>& coefficient) {
    double worst = 0;
    for (long m = 0; m <= 10; ++m) {
        TruncatedSum s = coefficient(m);
        double err = rel_diff(s.value, BigComplex(BigReal(oracle[m], P))).to_double();
        note(label + " m=" + std::to_string(m) + " rel_err=" + sci(err) + " tail=" + sci(s.tail_bound));
        worst = std::max(worst, err);
    }
    return worst;
}

Outcome criterion1() {
    auto expr = FormExpression::parse("1/E10");
    auto oracle = oracle_coeffs(expr, 10);
    const int threads = omp_get_max_threads();
    omp_set_num_threads(1);
    auto start = std::chrono::steady_clock::now();
    FormPipeline pipe(expr, P);
    double worst =
        oracle_sweep("1/E10", oracle, [&](long m) { return pipe.coefficient(m, kNormBound, Execution::serial); });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    omp_set_num_threads(threads);
    Outcome o;
    o.pass = worst <= kCoeffTol && secs <= 60.0;
    o.detail = "1/E10 m=0..10 max rel err " + sci(worst) + " (tol 1e-8), " + sci(secs) + " s single-threaded (limit 60)";
    return o;
}

Outcome criterion2() {
    // m = 0 of E2^4/E10 needs a larger bound than 5000 to reach 1e-8.
    const long bound = 20000;
    auto f = FormExpression::parse("1/E10");
    auto rep = simple_pole_rep(f, P);
    Outcome o;
    double worst = 0;
    BigReal worst_ratio(0L, 64);
    for (int n = 1; n <= 4; ++n) {
        auto expr = FormExpression::parse("E2^" + std::to_string(n) + "/E10");
        auto oracle = oracle_coeffs(expr, 10);
        auto q = quasi_expansion(f, n, P);
        std::vector<TruncatedSum> simple(11);
        worst = std::max(worst, oracle_sweep("E2^" + std::to_string(n) + "/E10", oracle, [&](long m) {
            simple[m] = simple_pole_quasi_coeff(rep, n, m, bound, P);
            return simple[m];
        }));
        for (long m = 0; m <= 10; ++m) {
            auto g = quasi_coeff_general(q, m, bound, P);
            BigReal diff = (g.value - simple[m].value).abs();
            BigReal allowed = g.tail_bound + simple[m].tail_bound;
            BigReal ratio = diff / allowed;
            if (ratio > worst_ratio) worst_ratio = BigReal(ratio, 64);
            if (diff > allowed) o.pass = false;
        }
    }
    o.pass = o.pass && worst <= kCoeffTol;
    o.detail = "E2^n/E10 n=1..4 m=0..10 (B=20000) max rel err " + sci(worst) +
               " (tol 1e-8); general vs simple-pole worst |diff|/combined tails " + sci(worst_ratio);
    return o;
}

Outcome criterion3() {
    auto expr = FormExpression::parse("1/E6^4");
    auto oracle = oracle_coeffs(expr, 10);
    FormPipeline pipe(expr, P);
    double worst = oracle_sweep("1/E6^4", oracle, [&](long m) { return pipe.coefficient(m, kNormBound); });
    const BigReal p = pi(P), e4 = closed_value(4, PointTag::I, P);
    const auto& rep = pipe.representation();
    double b3 = rel_diff(rep.coefficient(PointTag::I, 3, P), BigComplex(1L / (48L * pow(p, 3) * pow(e4, 8)))).to_double();
    double b1 = rel_diff(rep.coefficient(PointTag::I, 1, P), BigComplex(-7L / (27L * p * pow(e4, 7)))).to_double();
    Outcome o;
    o.pass = worst <= kCoeffTol && b3 <= kBasisTol && b1 <= kBasisTol && rep.terms.size() == 2;
    o.detail = "1/E6^4 m=0..10 max rel err " + sci(worst) + " (tol 1e-8); basis coefficients rel err " + sci(b3) +
               ", " + sci(b1) + " (tol 1e-20)";
    return o;
}

Outcome criterion4() {
    auto expr = FormExpression::parse("E2/E6^4");
    auto oracle = oracle_coeffs(expr, 10);
    FormPipeline pipe(expr, P);
    double worst = oracle_sweep("E2/E6^4", oracle, [&](long m) { return pipe.coefficient(m, kNormBound); });
    const BigReal p = pi(P), e4 = closed_value(4, PointTag::I, P);
    const BigReal three_pi = 3L / p;
    const auto& f1 = pipe.quasi().levels.at(1);
    double b4 = rel_diff(f1.coefficient(PointTag::I, 4, P) * three_pi,
                         BigComplex(1L / (384L * pow(p, 4) * pow(e4, 8))))
                    .to_double();
    double b2 = rel_diff(f1.coefficient(PointTag::I, 2, P) * three_pi,
                         BigComplex(-5L / (432L * p * p * pow(e4, 7))))
                    .to_double();
    double b0 = rel_diff(f1.coefficient(PointTag::I, 0, P) * three_pi, BigComplex(-47L / (648L * pow(e4, 6)))).to_double();
    Outcome o;
    o.pass = worst <= kCoeffTol && std::max({b4, b2, b0}) <= kBasisTol && f1.terms.size() == 3;
    o.detail = "E2/E6^4 m=0..10 max rel err " + sci(worst) + " (tol 1e-8); intermediate basis rel err " + sci(b4) +
               ", " + sci(b2) + ", " + sci(b0) + " (tol 1e-20)";
    return o;
}

Outcome criterion5() {
    auto expr = FormExpression::parse("1/E4");
    auto oracle = oracle_coeffs(expr, 10);
    BasisRepresentation rep{3, {{EllipticPoint::rho(P), 0, BigComplex(1L / closed_value(6, PointTag::Rho, P))}}};
    double worst = oracle_sweep("1/E4", oracle, [&](long m) { return assemble_coefficient(rep, m, kNormBound, P); });
    auto solved = solve_basis(elliptic_principal_parts(expr, P), 3, P);
    double a = rel_diff(solved.coefficient(PointTag::Rho, 0, P), rep.terms[0].a).to_double();
    Outcome o;
    o.pass = worst <= kCoeffTol;
    o.detail = "1/E4 from (rho, 0, 1/E6(rho)) m=0..10 max rel err " + sci(worst) +
               " (tol 1e-8); solved coefficient matches to " + sci(a);
    return o;
}

Outcome criterion6() {
    auto c = identity_check_m0(10000, P, IdentityForm::published);
    BigReal allowed = max(c.tail_bound, abs(c.rhs) * BigReal::from_double(1e-6, P));
    auto d = identity_check_m0(10000, P, IdentityForm::derived);
    Outcome o;
    o.pass = c.abs_err <= allowed;
    o.detail = "m=0 identity (9, 182): LHS " + sci(c.lhs) + " RHS " + sci(c.rhs) + " |diff| " + sci(c.abs_err) +
               " allowed " + sci(allowed) + "; supplementary (243, 91) form |diff| " + sci(d.abs_err) + " tail " +
               sci(d.tail_bound);
    return o;
}

Outcome criterion7() {
    const prec_t hi = P + 64;
    auto jet = derivative_jet(EllipticPoint::i(P), 3, P);
    const BigReal p = pi(hi), e4 = closed_value(4, PointTag::I, hi), e4sq = e4 * e4, zero(0L, hi);
    auto re = [&](const BigReal& x) { return BigComplex(x, zero); };
    auto im = [&](const BigReal& x) { return BigComplex(zero, x); };
    struct Row {
        const char* name;
        int weight, r;
        BigComplex expected;
    };
    std::vector<Row> rows{
        {"E2(i)", 2, 0, re(3L / p)},
        {"E2'(i)", 2, 1, im(3L / (2L * p) - p * e4 / 6)},
        {"E2''(i)", 2, 2, re(-3L / (2L * p) + p * e4 / 2)},
        {"E4'(i)", 4, 1, im(2L * e4)},
        {"E4''(i)", 4, 2, re(-5L * e4 - 5L * p * p * e4sq / 9)},
        {"E6'(i)", 6, 1, im(-(p * e4sq))},
        {"E6''(i)", 6, 2, re(7L * p * e4sq)},
        {"E6'''(i)", 6, 3, im(7L * pow(p, 3) * e4sq * e4 / 9 + 42L * p * e4sq)},
        {"E2'''(i)", 2, 3, im(-9L / (4L * p) + 3L * p * e4 / 2 + pow(p, 3) * e4sq / 12)},
    };
    const BigReal tol = two_pow(-240, 64);
    Outcome o;
    BigReal worst(0L, 64);
    for (const auto& row : rows) {
        BigReal err = rel_diff(jet.value(row.weight, row.r), row.expected);
        note(std::string(row.name) + " rel_err=" + sci(err));
        if (err > worst) worst = BigReal(err, 64);
        if (err > tol) o.pass = false;
    }
    o.detail = std::to_string(rows.size()) + " jet values at i, max rel err " + sci(worst) + " (tol 2^-240 = " +
               sci(tol) + ")";
    return o;
}

Outcome criterion8() {
    const int T = 64;
    auto e2 = make_eisenstein(2, T), e4 = make_eisenstein(4, T), e6 = make_eisenstein(6, T);
    bool a = multiply(e4, e6) == make_eisenstein(10, T);
    bool b = scale(dee(e2), 12) == subtract(multiply(e2, e2), e4);
    bool c = scale(dee(e4), 3) == subtract(multiply(e2, e4), e6);
    bool d = scale(dee(e6), 2) == subtract(multiply(e2, e6), multiply(e4, e4));
    Outcome o;
    o.pass = a && b && c && d;
    auto flag = [](bool x) { return x ? "ok" : "MISMATCH"; };
    o.detail = std::string("order 64: E4E6=E10 ") + flag(a) + ", 12D(E2) " + flag(b) + ", 3D(E4) " + flag(c) +
               ", 2D(E6) " + flag(d);
    return o;
}

// (a) kernel invariances
std::pair<int, int> kernel_invariance(std::mt19937_64& g) {
    const BigReal tol = two_pow(-static_cast<long>(P) + 32, 64);
    int cases = 0, failures = 0;
    std::uniform_int_distribution<long> coord(-60, 60), shift(-5, 5), msel(0, 10);
    while (cases < 1200) {
        long c = coord(g), d = coord(g);
        if ((c == 0 && d == 0) || std::gcd(c, d) != 1) continue;
        Field f = g() % 2 ? Field::gaussian : Field::eisenstein;
        int unit = f == Field::gaussian ? 4 : 6;
        int weight = unit * static_cast<int>(1 + g() % 6);
        long m = msel(g);
        auto [a, b] = complete_unimodular(c, d);
        long t = shift(g);
        PrimitiveIdeal base{f, c, d, norm_form(f, c, d), a, b};
        PrimitiveIdeal shifted{f, c, d, base.norm, a + t * c, b + t * d};
        BigReal k0 = c_kernel(f, weight, base, m, P);
        bool ok = abs(c_kernel(f, weight, shifted, m, P) - k0) <= tol;
        auto [c2, d2] = unit_step(f, c, d);
        for (int s = 1 + static_cast<int>(g() % (unit - 1)); s > 1; --s) std::tie(c2, d2) = unit_step(f, c2, d2);
        ok = ok && abs(c_kernel(f, weight, make_ideal(f, c2, d2), m, P) - k0) <= tol;

        BigComplex z(BigReal::from_double(std::uniform_real_distribution<double>(-0.5, 0.5)(g), P),
                     BigReal::from_double(std::uniform_real_distribution<double>(0.6, 2.0)(g), P));
        int bk = 2 * static_cast<int>(2 + g() % 10);
        long n = msel(g);
        BigComplex b0 = b_kernel(bk, c, d, a, b, z, n, P);
        BigComplex b1 = b_kernel(bk, c, d, a + t * c, b + t * d, z, n, P);
        BigComplex b2 = b_kernel(bk, -c, -d, -a, -b, z, n, P);
        ok = ok && rel_diff(b0, b1) <= tol && rel_diff(b0, b2) <= tol;
        ++cases;
        if (!ok) ++failures;
    }
    return {cases, failures};
}

// (b) round trip
std::pair<int, int> round_trip(std::mt19937_64& g) {
    int cases = 0, failures = 0;
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    auto coef = [&] {
        return BigComplex(ldexp(BigReal(static_cast<long>(std::ldexp(u(g), 40)), P), -40),
                          ldexp(BigReal(static_cast<long>(std::ldexp(u(g), 40)), P), -40));
    };
    const BigReal tol = two_pow(-static_cast<long>(P) + 32, 64);
    while (cases < 150) {
        int k = 2 + static_cast<int>(g() % 14);
        std::vector<BasisTerm> truth;
        std::vector<PrincipalPart> parts;
        for (auto tag : {PointTag::I, PointTag::Rho}) {
            EllipticPoint pt = EllipticPoint::from_tag(tag, P);
            PrincipalPart pp{pt, {}, {}};
            for (int n = 0; n <= 4; ++n) {
                if ((k + n) % pt.omega != 0 || g() % 3 == 0) continue;
                BigComplex a = coef();
                for (const auto& [order, c] : basis_principal_part(k, n, pt, P + 64).coeffs) {
                    auto it = pp.coeffs.find(order);
                    if (it == pp.coeffs.end())
                        pp.coeffs.emplace(order, a * c);
                    else
                        it->second += a * c;
                }
                truth.push_back({pt, n, a});
            }
            if (!pp.empty()) parts.push_back(pp);
        }
        if (truth.empty()) continue;
        ++cases;
        auto rep = solve_basis(parts, k, P);
        bool ok = rep.terms.size() == truth.size();
        for (const auto& t : truth) ok = ok && rel_diff(rep.coefficient(t.point.tag, t.n, P), t.a) <= tol;
        if (!ok) ++failures;
    }
    return {cases, failures};
}

// (c) congruence gate
std::pair<int, int> congruence_gate(std::mt19937_64& g) {
    int cases = 0, failures = 0;
    while (cases < 100) {
        int k = 2 + static_cast<int>(g() % 20);
        EllipticPoint pt = EllipticPoint::from_tag(g() % 2 ? PointTag::I : PointTag::Rho, P);
        int order = 1 + static_cast<int>(g() % 8);
        if (((order - 1 + k) % pt.omega) == 0) continue;
        PrincipalPart pp{pt, {}, {}};
        for (int j = 1; j <= order; ++j)
            pp.coeffs.emplace(j, BigComplex(BigReal::from_double(0.5 + j, P), BigReal::from_double(-0.25 * j, P)));
        ++cases;
        try {
            solve_basis({pp}, k, P);
            ++failures;
        } catch (const CongruenceError&) {
        }
    }
    return {cases, failures};
}

// (d) tail soundness
std::pair<int, int> tail_soundness(std::mt19937_64& g) {
    int cases = 0, failures = 0;
    const long bounds[] = {50, 100, 200, 400};
    while (cases < 120) {
        Field f = g() % 2 ? Field::gaussian : Field::eisenstein;
        long b = bounds[g() % 4];
        int weight = 2 * static_cast<int>(3 + g() % 14);
        int j = static_cast<int>(g() % 4);
        if (weight / 2 - j <= 1) continue;
        int r = static_cast<int>(g() % 3);
        long m = static_cast<long>(g() % (b / 13 + 1));
        std::vector<SeriesTerm> terms{{weight, j, r, BigComplex(1, 0, P)}};
        auto small = IdealTable::get(f, b, P + 32);
        auto big = IdealTable::get(f, 2 * b, P + 32);
        BigReal diff = (ideal_sum(*big, terms, m, P) - ideal_sum(*small, terms, m, P)).abs();
        BigReal tail = ideal_tail_bound(f, terms, m, b, P);
        ++cases;
        if (diff > tail) {
            ++failures;
            note("tail failure " + field_name(f) + " K=" + std::to_string(weight) + " j=" + std::to_string(j) +
                 " r=" + std::to_string(r) + " m=" + std::to_string(m) + " B=" + std::to_string(b));
        }
    }
    return {cases, failures};
}

Outcome criterion9() {
    std::mt19937_64 g(9001);
    auto [kc, kf] = kernel_invariance(g);
    auto [rc, rf] = round_trip(g);
    auto [cc, cf] = congruence_gate(g);
    auto [tc, tf] = tail_soundness(g);
    Outcome o;
    o.pass = kf == 0 && rf == 0 && cf == 0 && tf == 0 && kc >= 1000 && rc >= 100 && tc >= 100;
    auto part = [](const char* name, int c, int f) {
        return std::string(name) + " " + std::to_string(c - f) + "/" + std::to_string(c);
    };
    o.detail = part("kernel invariance", kc, kf) + ", " + part("round trip", rc, rf) + ", " +
               part("congruence gate", cc, cf) + ", " + part("tail soundness", tc, tf);
    return o;
}

Outcome criterion10() {
    int checked = 0, failures = 0;
    for (int k = 2; k <= 20; ++k)
        for (int n = 0; n <= 8; ++n) {
            auto e = raising_expansion(k, n);
            if (!(raise_once(e) == raising_expansion(k, n + 1))) ++failures;
            mpz_class b0, b1, b2;
            for (int j = 0; j <= n + 1; ++j) {
                b0 = 0;
                b1 = 0;
                if (j <= n) mpz_bin_uiui(b0.get_mpz_t(), n, j);
                if (j >= 1) mpz_bin_uiui(b1.get_mpz_t(), n, j - 1);
                mpz_bin_uiui(b2.get_mpz_t(), n + 1, j);
                if ((2 * k + n - j) * b0 + (2 * k + 2 * n + 1 - j) * b1 != (2 * k + n) * b2) ++failures;
            }
            ++checked;
        }
    Outcome o;
    o.pass = failures == 0;
    o.detail = std::to_string(checked) + " (k, n) pairs with 2<=k<=20, 0<=n<=8, exact rational check, " +
               std::to_string(failures) + " mismatches";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--verbose" || a == "-v")
            verbose = true;
        else if (a == "--criterion" && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--criterion N] [--verbose]\n";
            return 1;
        }
    }
    const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                          criterion5, criterion6, criterion7, criterion8,
                                                          criterion9, criterion10};
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::cerr << "criterion must be 1.." << criteria.size() << "\n";
        return 1;
    }
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && static_cast<int>(i) + 1 != only) continue;
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail << std::endl;
        if (!o.pass) ++failed;
    }
    return failed ? 1 : 0;
}
