#include "test_util.hpp"

#include <set>

#include "merocusp/error.hpp"
#include "merocusp/quasi_engine.hpp"

using namespace merocusp;
using testutil::rel_bits;

namespace {

constexpr prec_t P = 256;

}  // namespace

TEST_CASE("combination coefficients") {
    // c_{k,l,j} = (2k-l-j-2)! (2k-2l-1) / (2k-l-1)!
    CHECK(ckl_coefficient(6, 0, 0) == 1);
    CHECK(ckl_coefficient(6, 1, 0) == mpq_class(9, 10));
    CHECK(ckl_coefficient(6, 1, 2) == mpq_class(1, 80));
    CHECK(fn_combination_coefficient(13, 1, 0) == 1);
    CHECK(fn_combination_coefficient(13, 1, 1) == mpq_class(-1, 24));
    CHECK(fn_combination_coefficient(13, 2, 2) == mpq_class(1, 22 * 23));
    CHECK(fn_combination_coefficient(13, 3, 1) == mpq_class(-3, 20));
}

TEST_CASE("simple-pole and general routes agree for E2^n/E10") {
    auto f = FormExpression::parse("1/E10");
    auto rep = simple_pole_rep(f, P);
    const long B = 3000;
    for (int n = 1; n <= 4; ++n) {
        auto q = quasi_expansion(f, n, P);
        for (long m : {0L, 1L, 3L}) {
            auto a = simple_pole_quasi_coeff(rep, n, m, B, P);
            auto b = quasi_coeff_general(q, m, B, P);
            BigReal allowed = a.tail_bound + b.tail_bound + a.value.abs() * two_pow(-static_cast<long>(P) / 2, P);
            INFO("n=", n, " m=", m);
            CHECK((a.value - b.value).abs() <= allowed);
        }
    }
}

TEST_CASE("E2^n/E10 at m = 1 within tail bounds of the oracle") {
    auto rep = simple_pole_rep(FormExpression::parse("1/E10"), P);
    const long expected[] = {264, 240, 216, 192, 168};
    for (int n = 0; n <= 4; ++n) {
        auto s = simple_pole_quasi_coeff(rep, n, 1, 3000, P);
        CHECK((s.value - BigComplex(BigReal(expected[n], P))).abs() <= s.tail_bound);
    }
}

TEST_CASE("E2/E6^4 through F1") {
    auto f = FormExpression::parse("1/E6^4");
    auto q = quasi_expansion(f, 1, P);
    CHECK(q.k == 13);
    REQUIRE(q.levels.size() == 2);
    const BigReal p = pi(P), e4 = closed_value(4, PointTag::I, P);
    const BigReal three_pi = 3L / p;
    const auto& f1 = q.levels[1];
    CHECK(f1.k == 12);

    std::set<int> orders;
    for (const auto& t : f1.terms) {
        CHECK(t.point.tag == PointTag::I);
        orders.insert(t.n);
    }
    CHECK(orders == std::set<int>{0, 2, 4});

    CHECK(rel_bits(f1.coefficient(PointTag::I, 4, P) * three_pi, BigComplex(1L / (384L * pow(p, 4) * pow(e4, 8)))) <=
          -200);
    CHECK(rel_bits(f1.coefficient(PointTag::I, 2, P) * three_pi, BigComplex(-5L / (432L * p * p * pow(e4, 7)))) <=
          -200);
    CHECK(rel_bits(f1.coefficient(PointTag::I, 0, P) * three_pi, BigComplex(-47L / (648L * pow(e4, 6)))) <= -200);

    // F1 = (pi/3) (E2/E6^4 + (i/4pi) d/dz (1/E6^4) reversed): coefficient (pi/3)(oq[m] + (m/2) o[m])
    auto o = oracle_coeffs(f, 4);
    auto oq = oracle_coeffs(FormExpression::parse("E2/E6^4"), 4);
    for (long m = 0; m <= 4; ++m) {
        auto s = assemble_coefficient(f1, m, 3000, P);
        BigReal expected = p / 3 * BigReal(mpq_class(oq[m] + mpq_class(m, 2) * o[m]), P);
        INFO("m=", m);
        CHECK((s.value - BigComplex(expected)).abs() <= s.tail_bound + abs(expected) * two_pow(-128, P));
    }
}

TEST_CASE("quasi preconditions") {
    auto rep = simple_pole_rep(FormExpression::parse("1/E10"), P);
    CHECK_THROWS_AS(simple_pole_quasi_coeff(rep, 5, 1, 1000, P), DomainError);
    CHECK_THROWS_AS(simple_pole_quasi_coeff(rep, -1, 1, 1000, P), DomainError);
    CHECK_THROWS_AS(quasi_expansion(FormExpression::parse("1/E10"), 5, P), DomainError);
    CHECK_THROWS_AS(quasi_expansion(FormExpression::parse("E2/E10"), 1, P), DomainError);
    auto q = quasi_expansion(FormExpression::parse("1/E10"), 2, P);
    CHECK_THROWS_AS(quasi_coeff_general(q, 5, 20, P), DomainError);
}
