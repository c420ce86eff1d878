#include "test_util.hpp"

#include <numeric>
#include <set>

#include "merocusp/error.hpp"
#include "merocusp/lattice.hpp"

using namespace merocusp;
using testutil::rel_bits;

namespace {

constexpr prec_t P = 256;

// Units-orbit count by brute force: coprime pairs with norm <= B, divided by the unit count.
long brute_count(Field f, long bound) {
    long count = 0;
    for (long c = -100; c <= 100; ++c)
        for (long d = -100; d <= 100; ++d) {
            if (c == 0 && d == 0) continue;
            if (std::gcd(c, d) != 1) continue;
            if (norm_form(f, c, d) <= bound) ++count;
        }
    return count / unit_count(f);
}

}  // namespace

TEST_CASE("norm forms") {
    CHECK(norm_form(Field::gaussian, 2, 1) == 5);
    CHECK(norm_form(Field::eisenstein, 1, 1) == 3);  // rho + 1
    CHECK(norm_form(Field::eisenstein, 1, -1) == 1);  // rho - 1 = rho^2, a unit
    CHECK(unit_count(Field::gaussian) == 4);
    CHECK(unit_count(Field::eisenstein) == 6);
}

TEST_CASE("enumeration matches a brute-force orbit count") {
    for (Field f : {Field::gaussian, Field::eisenstein})
        for (long b : {1L, 2L, 5L, 13L, 50L, 200L, 1000L}) {
            INFO(field_name(f), " ", b);
            auto ids = enumerate_primitive(f, b);
            CHECK(static_cast<long>(ids.size()) == brute_count(f, b));
            std::set<std::pair<long, long>> seen;
            for (std::size_t i = 0; i < ids.size(); ++i) {
                const auto& id = ids[i];
                CHECK(id.norm == norm_form(f, id.c, id.d));
                CHECK(id.a * id.d - id.b * id.c == 1);
                CHECK(canonical_pair(f, id.c, id.d) == std::make_pair(id.c, id.d));
                CHECK(seen.insert({id.c, id.d}).second);
                if (i) CHECK(ids[i - 1].norm <= id.norm);
            }
        }
    CHECK(enumerate_primitive(Field::gaussian, 5).size() == 4);
}

TEST_CASE("unit orbits have the expected size and a single canonical member") {
    for (Field f : {Field::gaussian, Field::eisenstein})
        for (const auto& id : enumerate_primitive(f, 300)) {
            std::set<std::pair<long, long>> orbit;
            auto cur = std::make_pair(id.c, id.d);
            for (int u = 0; u < unit_count(f); ++u) {
                orbit.insert(cur);
                CHECK(norm_form(f, cur.first, cur.second) == id.norm);
                CHECK(canonical_pair(f, cur.first, cur.second) == std::make_pair(id.c, id.d));
                cur = unit_step(f, cur.first, cur.second);
            }
            CHECK(cur == std::make_pair(id.c, id.d));
            CHECK(static_cast<int>(orbit.size()) == unit_count(f));
        }
}

TEST_CASE("unimodular completion") {
    for (long c = -30; c <= 30; ++c)
        for (long d = -30; d <= 30; ++d) {
            if (std::gcd(c, d) != 1) continue;
            auto [a, b] = complete_unimodular(c, d);
            CHECK(a * d - b * c == 1);
            if (std::abs(d) > 1) CHECK((0 <= b && b < std::abs(d)));
        }
}

TEST_CASE("C kernel vanishes off the unit-compatible weights") {
    auto id = canonical_ideal(Field::gaussian, 1, 2);
    CHECK(c_kernel(Field::gaussian, 6, id, 3, P).is_zero());
    CHECK_FALSE(c_kernel(Field::gaussian, 8, id, 3, P).is_zero());
    auto ie = canonical_ideal(Field::eisenstein, 1, 2);
    CHECK(c_kernel(Field::eisenstein, 8, ie, 3, P).is_zero());
    CHECK_FALSE(c_kernel(Field::eisenstein, 12, ie, 3, P).is_zero());
}

TEST_CASE("C kernel at m = 0 is cos(K theta)") {
    auto id = canonical_ideal(Field::gaussian, 2, 3);
    BigReal expected = cos(12L * atan(BigReal(2L, P) / 3));
    CHECK(rel_bits(c_kernel(Field::gaussian, 12, id, 0, P), expected) <= -P + 8);
}

TEST_CASE("B kernel definition and preconditions") {
    BigComplex z(BigReal::from_string("0.2", P), BigReal::from_string("0.9", P));
    // c = 0, d = 1: identity matrix, B = e^{2 pi n y} e^{-2 pi i n x}
    BigComplex b = b_kernel(12, 0, 1, z, 2, P);
    BigComplex expected = BigComplex::polar(exp(4L * pi(P) * z.im), -(4L * pi(P) * z.re));
    CHECK(rel_bits(b, expected) <= -P + 8);
    CHECK_THROWS_AS(b_kernel(12, 1, 2, 1, 3, z, 1, P), DomainError);
    CHECK_THROWS_AS(b_kernel(12, 1, 2, z.conj(), 1, P), DomainError);
}
