#include "merocusp/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

#include "merocusp/error.hpp"

namespace merocusp {

std::string field_name(Field f) { return f == Field::gaussian ? "gaussian" : "eisenstein"; }

long norm_form(Field field, long c, long d) {
    return field == Field::gaussian ? c * c + d * d : c * c + c * d + d * d;
}

int unit_count(Field field) { return field == Field::gaussian ? 4 : 6; }

std::pair<long, long> unit_step(Field field, long c, long d) {
    // i(ci + d) = di - c;  rho(c rho + d) = (c + d) rho - c  since rho^2 = rho - 1
    if (field == Field::gaussian) return {d, -c};
    return {c + d, -c};
}

std::pair<long, long> canonical_pair(Field field, long c, long d) {
    std::pair<long, long> best{0, 0};
    bool found = false;
    std::pair<long, long> cur{c, d};
    for (int u = 0; u < unit_count(field); ++u) {
        bool upper = cur.first > 0 || (cur.first == 0 && cur.second > 0);
        if (upper && (!found || cur < best)) {
            best = cur;
            found = true;
        }
        cur = unit_step(field, cur.first, cur.second);
    }
    if (!found) throw DomainError("zero generator has no canonical form");
    return best;
}

std::pair<long, long> complete_unimodular(long c, long d) {
    if (std::gcd(c, d) != 1) throw DomainError("complete_unimodular needs gcd(c, d) = 1");
    if (d == 0) return {0, -c};
    long ad = std::labs(d);
    if (ad == 1) return {d, 0};
    // b = -c^{-1} mod |d|
    long r0 = ((c % ad) + ad) % ad, r1 = ad, s0 = 1, s1 = 0;
    while (r1 != 0) {
        long q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    long inv = ((s0 % ad) + ad) % ad;
    long b = (ad - inv) % ad;
    long a = (1 + b * c) / d;
    return {a, b};
}

PrimitiveIdeal make_ideal(Field field, long c, long d) {
    auto [a, b] = complete_unimodular(c, d);
    return {field, c, d, norm_form(field, c, d), a, b};
}

PrimitiveIdeal canonical_ideal(Field field, long c, long d) {
    auto [cc, dd] = canonical_pair(field, c, d);
    return make_ideal(field, cc, dd);
}

std::vector<PrimitiveIdeal> enumerate_primitive(Field field, long norm_bound) {
    if (norm_bound < 1) throw DomainError("norm_bound must be at least 1");
    std::set<std::pair<long, long>> seen;
    auto visit = [&](long c, long d) {
        if (norm_form(field, c, d) > norm_bound || std::gcd(c, d) != 1) return;
        seen.insert(canonical_pair(field, c, d));
    };
    if (field == Field::gaussian) {
        long cmax = static_cast<long>(std::sqrt(static_cast<double>(norm_bound))) + 1;
        for (long c = 0; c <= cmax; ++c) {
            long rem = norm_bound - c * c;
            if (rem < 0) break;
            long dmax = static_cast<long>(std::sqrt(static_cast<double>(rem))) + 1;
            for (long d = -dmax; d <= dmax; ++d) visit(c, d);
        }
    } else {
        long cmax = static_cast<long>(std::sqrt(4.0 * norm_bound / 3.0)) + 1;
        for (long c = 0; c <= cmax; ++c) {
            double disc = 4.0 * norm_bound - 3.0 * c * c;
            if (disc < 0) break;
            double r = std::sqrt(disc);
            long lo = static_cast<long>(std::floor((-c - r) / 2)) - 1;
            long hi = static_cast<long>(std::ceil((-c + r) / 2)) + 1;
            for (long d = lo; d <= hi; ++d) visit(c, d);
        }
    }
    std::vector<PrimitiveIdeal> out;
    out.reserve(seen.size());
    for (auto [c, d] : seen) out.push_back(make_ideal(field, c, d));
    std::sort(out.begin(), out.end(), [](const PrimitiveIdeal& x, const PrimitiveIdeal& y) {
        return std::tie(x.norm, x.c, x.d) < std::tie(y.norm, y.c, y.d);
    });
    return out;
}

BigReal c_kernel(Field field, int weight, const PrimitiveIdeal& ideal, long m, prec_t prec) {
    if (weight % 2 != 0) throw DomainError("kernel weight must be even");
    const long c = ideal.c, d = ideal.d, a = ideal.a, b = ideal.b;
    const long n = norm_form(field, c, d);
    const prec_t w = prec + 32;
    BigReal p = pi(w);
    BigReal theta(w);
    BigReal arg(w);
    if (field == Field::gaussian) {
        if (weight % 4 != 0) return BigReal(0L, prec);
        theta = d == 0 ? p * (c > 0 ? 1 : -1) / 2 : atan(BigReal(c, w) / BigReal(d, w));
        arg = 2L * p * BigReal(a * c + b * d, w) * m / n + theta * weight;
    } else {
        if (weight % 6 != 0) return BigReal(0L, prec);
        long den = 2 * d + c;
        theta = den == 0 ? p * (c > 0 ? 1 : -1) / 2 : atan(BigReal(c, w) * sqrt(BigReal(3L, w)) / den);
        long x = -a * d - b * c - 2 * a * c - 2 * b * d;
        arg = p * BigReal(x, w) * m / n - theta * weight;
    }
    return round_to(cos(arg), prec);
}

BigComplex b_kernel(int k, long c, long d, long a, long b, const BigComplex& z, long n, prec_t prec) {
    if (a * d - b * c != 1) throw DomainError("b_kernel needs ad - bc = 1");
    if (z.im.sign() <= 0) throw DomainError("b_kernel needs Im z > 0");
    const prec_t w = prec + 32;
    BigComplex zz = round_to(z, w);
    BigComplex lin = zz * c;
    lin.re += d;
    BigReal nrm = lin.norm();
    BigReal two_pi = 2L * pi(w);
    BigReal growth = exp(two_pi * n * zz.im / nrm);
    BigReal inner = BigReal(a * c, w) * zz.norm() + BigReal(b * d, w) + zz.re * (a * d + b * c);
    BigComplex phase = BigComplex::polar(growth, -(two_pi * n * inner / nrm));
    return round_to(pow(lin, -k) * phase, prec);
}

BigComplex b_kernel(int k, long c, long d, const BigComplex& z, long n, prec_t prec) {
    auto [a, b] = complete_unimodular(c, d);
    return b_kernel(k, c, d, a, b, z, n, prec);
}

}  // namespace merocusp
