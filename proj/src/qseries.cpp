#include "merocusp/qseries.hpp"

#include <algorithm>

#include "merocusp/error.hpp"

namespace merocusp {

RationalQSeries::RationalQSeries(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
}

RationalQSeries RationalQSeries::constant(const mpq_class& c, int truncation_order) {
    std::vector<mpq_class> v(static_cast<std::size_t>(std::max(truncation_order, 0)) + 1);
    v[0] = c;
    return RationalQSeries(std::move(v));
}

RationalQSeries RationalQSeries::truncated(int order) const {
    std::vector<mpq_class> v(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), order + 1));
    return RationalQSeries(std::move(v));
}

mpz_class divisor_sigma(long power, long n) {
    mpz_class total = 0, t;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        mpz_ui_pow_ui(t.get_mpz_t(), d, power);
        total += t;
        long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(t.get_mpz_t(), e, power);
            total += t;
        }
    }
    return total;
}

RationalQSeries make_eisenstein(int weight, int truncation_order) {
    // -2w/B_w
    long factor;
    switch (weight) {
        case 2: factor = -24; break;
        case 4: factor = 240; break;
        case 6: factor = -504; break;
        case 10: factor = -264; break;
        default: throw DomainError("weight not in {2,4,6,10}");
    }
    if (truncation_order < 0) throw DomainError("negative truncation order");
    std::vector<mpq_class> v(truncation_order + 1);
    v[0] = 1;
    for (int n = 1; n <= truncation_order; ++n) v[n] = factor * divisor_sigma(weight - 1, n);
    return RationalQSeries(std::move(v));
}

RationalQSeries add(const RationalQSeries& a, const RationalQSeries& b) {
    int t = std::min(a.truncation_order(), b.truncation_order());
    std::vector<mpq_class> v(t + 1);
    for (int n = 0; n <= t; ++n) v[n] = a[n] + b[n];
    return RationalQSeries(std::move(v));
}

RationalQSeries subtract(const RationalQSeries& a, const RationalQSeries& b) {
    int t = std::min(a.truncation_order(), b.truncation_order());
    std::vector<mpq_class> v(t + 1);
    for (int n = 0; n <= t; ++n) v[n] = a[n] - b[n];
    return RationalQSeries(std::move(v));
}

RationalQSeries scale(const RationalQSeries& a, const mpq_class& s) {
    std::vector<mpq_class> v(a.coeffs());
    for (auto& x : v) x *= s;
    return RationalQSeries(std::move(v));
}

RationalQSeries multiply(const RationalQSeries& a, const RationalQSeries& b) {
    int t = std::min(a.truncation_order(), b.truncation_order());
    std::vector<mpq_class> v(t + 1);
    for (int i = 0; i <= t; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (int j = 0; i + j <= t; ++j) v[i + j] += a[i] * b[j];
    }
    return RationalQSeries(std::move(v));
}

RationalQSeries reciprocal(const RationalQSeries& a) {
    if (sgn(a[0]) == 0) throw DomainError("not invertible as q-series");
    int t = a.truncation_order();
    std::vector<mpq_class> v(t + 1);
    mpq_class inv0 = 1 / a[0];
    v[0] = inv0;
    for (int n = 1; n <= t; ++n) {
        mpq_class s = 0;
        for (int i = 1; i <= n; ++i) s += a[i] * v[n - i];
        v[n] = -s * inv0;
    }
    return RationalQSeries(std::move(v));
}

RationalQSeries power(const RationalQSeries& a, long e) {
    if (e < 0) return power(reciprocal(a), -e);
    RationalQSeries result = RationalQSeries::constant(1, a.truncation_order());
    RationalQSeries base = a;
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return result;
}

RationalQSeries dee(const RationalQSeries& a) {
    std::vector<mpq_class> v(a.coeffs());
    for (std::size_t n = 0; n < v.size(); ++n) v[n] *= static_cast<long>(n);
    return RationalQSeries(std::move(v));
}

std::string rational_string(const mpq_class& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::vector<std::string> to_strings(const std::vector<mpq_class>& a) {
    std::vector<std::string> out;
    out.reserve(a.size());
    for (const auto& x : a) out.push_back(rational_string(x));
    return out;
}

std::vector<std::string> to_strings(const RationalQSeries& a) { return to_strings(a.coeffs()); }

mpq_class parse_rational(const std::string& text) {
    mpq_class x;
    if (x.set_str(text, 10) != 0 || sgn(x.get_den()) == 0)
        throw ParseError("not a rational \"" + text + "\"", 0);
    x.canonicalize();
    return x;
}

}  // namespace merocusp
