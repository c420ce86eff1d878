#include "test_util.hpp"

#include "merocusp/error.hpp"
#include "merocusp/qseries.hpp"

using namespace merocusp;

namespace {

// sigma_k(n) by trial division, independent of divisor_sigma.
mpz_class brute_sigma(long k, long n) {
    mpz_class s = 0, t;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            mpz_ui_pow_ui(t.get_mpz_t(), d, k);
            s += t;
        }
    return s;
}

}  // namespace

TEST_CASE("Eisenstein coefficients match divisor sums") {
    const int T = 40;
    struct Case {
        int weight;
        long c;
    };
    for (Case cs : {Case{2, -24}, Case{4, 240}, Case{6, -504}, Case{10, -264}}) {
        auto e = make_eisenstein(cs.weight, T);
        CHECK(e[0] == 1);
        for (long n = 1; n <= T; ++n) CHECK(e[n] == mpq_class(cs.c * brute_sigma(cs.weight - 1, n)));
    }
    CHECK_THROWS_AS(make_eisenstein(8, 5), DomainError);
    CHECK(divisor_sigma(3, 12) == brute_sigma(3, 12));
}

TEST_CASE("E4^2 = E8 and E4 E6 = E10 exactly") {
    const int T = 64;
    RationalQSeries e8_direct;
    {
        std::vector<mpq_class> c(T + 1);
        c[0] = 1;
        for (long n = 1; n <= T; ++n) c[n] = 480 * brute_sigma(7, n);
        e8_direct = RationalQSeries(c);
    }
    auto e4 = make_eisenstein(4, T);
    CHECK(multiply(e4, e4) == e8_direct);
    CHECK(multiply(e4, make_eisenstein(6, T)) == make_eisenstein(10, T));
}

TEST_CASE("discriminant from E4^3 - E6^2 has Ramanujan tau coefficients") {
    const int T = 8;
    auto e4 = make_eisenstein(4, T), e6 = make_eisenstein(6, T);
    auto delta = scale(subtract(power(e4, 3), power(e6, 2)), mpq_class(1, 1728));
    const long tau[] = {0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480};
    for (int n = 0; n <= T; ++n) CHECK(delta[n] == tau[n]);
}

TEST_CASE("reciprocal and negative powers") {
    const int T = 30;
    auto e6 = make_eisenstein(6, T);
    auto inv = reciprocal(e6);
    CHECK(multiply(inv, e6) == RationalQSeries::constant(1, T));
    CHECK(power(e6, -4) == power(inv, 4));
    CHECK(power(e6, 0) == RationalQSeries::constant(1, T));
    auto inv4 = power(e6, -4);
    const long frozen[] = {1, 2016, 2606688, 2728623744L};
    for (int n = 0; n < 4; ++n) CHECK(inv4[n] == frozen[n]);
    CHECK_THROWS_AS(reciprocal(RationalQSeries::zero(T)), DomainError);
}

TEST_CASE("Ramanujan system holds to order 64") {
    const int T = 64;
    auto e2 = make_eisenstein(2, T), e4 = make_eisenstein(4, T), e6 = make_eisenstein(6, T);
    CHECK(scale(dee(e2), 12) == subtract(multiply(e2, e2), e4));
    CHECK(scale(dee(e4), 3) == subtract(multiply(e2, e4), e6));
    CHECK(scale(dee(e6), 2) == subtract(multiply(e2, e6), multiply(e4, e4)));
}

TEST_CASE("mixed truncation orders take the minimum") {
    auto a = make_eisenstein(4, 10), b = make_eisenstein(6, 5);
    CHECK(multiply(a, b).truncation_order() == 5);
    CHECK(add(a, b).truncation_order() == 5);
    CHECK(a.truncated(3).truncation_order() == 3);
}

TEST_CASE("rational strings") {
    CHECK(rational_string(mpq_class(2016)) == "2016/1");
    CHECK(rational_string(parse_rational("-3/6")) == "-1/2");
    CHECK(parse_rational("-1/2") == mpq_class(-1, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    auto strs = to_strings(make_eisenstein(4, 2));
    CHECK(strs == std::vector<std::string>{"1/1", "240/1", "2160/1"});
}
