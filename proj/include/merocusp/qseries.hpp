#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace merocusp {

// Truncated power series in q with exact rational coefficients.
// Coefficient n is valid for n <= truncation_order().
class RationalQSeries {
public:
    RationalQSeries() : coeffs_(1) {}
    explicit RationalQSeries(std::vector<mpq_class> coeffs);

    static RationalQSeries constant(const mpq_class& c, int truncation_order);
    static RationalQSeries zero(int truncation_order) { return constant(0, truncation_order); }

    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpq_class& operator[](std::size_t n) const { return coeffs_[n]; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    RationalQSeries truncated(int order) const;

    friend bool operator==(const RationalQSeries& a, const RationalQSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<mpq_class> coeffs_;
};

RationalQSeries make_eisenstein(int weight, int truncation_order);

RationalQSeries add(const RationalQSeries& a, const RationalQSeries& b);
RationalQSeries subtract(const RationalQSeries& a, const RationalQSeries& b);
RationalQSeries scale(const RationalQSeries& a, const mpq_class& s);
RationalQSeries multiply(const RationalQSeries& a, const RationalQSeries& b);
RationalQSeries reciprocal(const RationalQSeries& a);
RationalQSeries power(const RationalQSeries& a, long e);
// q d/dq
RationalQSeries dee(const RationalQSeries& a);

mpz_class divisor_sigma(long power, long n);

// "p/q" strings, one per coefficient.
std::vector<std::string> to_strings(const RationalQSeries& a);
std::vector<std::string> to_strings(const std::vector<mpq_class>& a);
std::string rational_string(const mpq_class& x);
mpq_class parse_rational(const std::string& text);

}  // namespace merocusp
