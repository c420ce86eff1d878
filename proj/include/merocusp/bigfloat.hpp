#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace merocusp {

using prec_t = mpfr_prec_t;

inline constexpr prec_t kDefaultPrecision = 256;

// Arbitrary-precision real with an explicit per-value precision.
// Binary operations produce a result at the smaller operand precision.
class BigReal {
public:
    explicit BigReal(prec_t prec = kDefaultPrecision);
    BigReal(long value, prec_t prec);
    BigReal(const mpz_class& value, prec_t prec);
    BigReal(const mpq_class& value, prec_t prec);
    BigReal(const BigReal& other);
    BigReal(const BigReal& other, prec_t prec);  // rounds to prec
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    static BigReal from_double(double x, prec_t prec);
    static BigReal from_string(std::string_view text, prec_t prec);

    prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long exponent2() const;  // floor(log2|x|)+1; LONG_MIN for 0
    // Shortest decimal string that round-trips at this precision.
    std::string to_string() const;
    std::string to_string(int digits) const;

    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    BigReal& operator+=(long s);
    BigReal& operator-=(long s);
    BigReal& operator*=(long s);
    BigReal& operator/=(long s);
    BigReal operator-() const;

private:
    mpfr_t v_;
};

prec_t min_prec(const BigReal& a, const BigReal& b);

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator+(const BigReal& a, long b);
BigReal operator-(const BigReal& a, long b);
BigReal operator*(const BigReal& a, long b);
BigReal operator*(long a, const BigReal& b);
BigReal operator/(const BigReal& a, long b);
BigReal operator/(long a, const BigReal& b);
BigReal operator+(long a, const BigReal& b);
BigReal operator-(long a, const BigReal& b);

int compare(const BigReal& a, const BigReal& b);
int compare(const BigReal& a, long b);
inline bool operator==(const BigReal& a, const BigReal& b) { return compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const BigReal& a, const BigReal& b) { return compare(a, b) <=> 0; }
inline bool operator==(const BigReal& a, long b) { return compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const BigReal& a, long b) { return compare(a, b) <=> 0; }

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal atan(const BigReal& x);
BigReal gamma(const BigReal& x);
BigReal pow(const BigReal& x, long e);
BigReal pow(const BigReal& x, const BigReal& e);
BigReal ldexp(const BigReal& x, long e);  // x * 2^e
BigReal max(const BigReal& a, const BigReal& b);
BigReal pi(prec_t prec);
BigReal two_pow(long e, prec_t prec);
BigReal round_to(const BigReal& x, prec_t prec);

class BigComplex {
public:
    explicit BigComplex(prec_t prec = kDefaultPrecision) : re(prec), im(prec) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const BigReal& r) : re(r), im(0L, r.prec()) {}
    BigComplex(long r, long i, prec_t prec) : re(r, prec), im(i, prec) {}

    static BigComplex i_unit(prec_t prec) { return BigComplex(0, 1, prec); }
    static BigComplex polar(const BigReal& modulus, const BigReal& angle);

    BigReal re;
    BigReal im;

    prec_t prec() const { return min_prec(re, im); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    BigComplex conj() const { return {re, -im}; }
    BigReal norm() const;  // |z|^2
    BigReal abs() const;
    BigReal arg() const;

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
    BigComplex& operator*=(const BigReal& s);
    BigComplex& operator/=(const BigReal& s);
    BigComplex& operator*=(long s);
    BigComplex operator-() const { return {-re, -im}; }
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigReal& s);
BigComplex operator*(const BigReal& s, const BigComplex& a);
BigComplex operator/(const BigComplex& a, const BigReal& s);
BigComplex operator*(const BigComplex& a, long s);
BigComplex operator*(long s, const BigComplex& a);

BigComplex exp(const BigComplex& z);
BigComplex pow(const BigComplex& z, long e);
BigReal abs(const BigComplex& z);
BigComplex round_to(const BigComplex& z, prec_t prec);

// |a-b| / max(|a|,|b|); 0 when both are zero.
BigReal rel_diff(const BigReal& a, const BigReal& b);
BigReal rel_diff(const BigComplex& a, const BigComplex& b);

// Compensated summation; terms are expected at the accumulator precision.
class KahanSum {
public:
    explicit KahanSum(prec_t prec) : sum_(prec), carry_(prec) {}
    void add(const BigComplex& term);
    const BigComplex& value() const { return sum_; }

private:
    BigComplex sum_;
    BigComplex carry_;
};

}  // namespace merocusp
