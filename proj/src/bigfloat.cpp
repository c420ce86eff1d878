#include "merocusp/bigfloat.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "merocusp/error.hpp"

namespace merocusp {

BigReal::BigReal(prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& value, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
    mpfr_init2(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
    mpfr_init2(v_, other.prec());
    mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        if (prec() != other.prec()) mpfr_set_prec(v_, other.prec());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_double(double x, prec_t prec) {
    BigReal r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

BigReal BigReal::from_string(std::string_view text, prec_t prec) {
    BigReal r(prec);
    std::string s(text);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("not a decimal number \"" + s + "\"", 0);
    return r;
}

long BigReal::exponent2() const {
    if (is_zero()) return LONG_MIN;
    return mpfr_get_exp(v_);
}

std::string BigReal::to_string() const { return to_string(0); }

std::string BigReal::to_string(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);
    std::string out;
    if (m[0] == '-') {
        out += '-';
        m.erase(0, 1);
    }
    while (m.size() > 1 && m.back() == '0') m.pop_back();
    out += m[0];
    if (m.size() > 1) {
        out += '.';
        out.append(m, 1, std::string::npos);
    }
    out += 'e';
    out += std::to_string(static_cast<long>(e) - 1);
    return out;
}

prec_t min_prec(const BigReal& a, const BigReal& b) { return std::min(a.prec(), b.prec()); }

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }

BigReal& BigReal::operator+=(long s) {
    mpfr_add_si(v_, v_, s, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(long s) {
    mpfr_sub_si(v_, v_, s, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(long s) {
    mpfr_mul_si(v_, v_, s, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator/=(long s) {
    mpfr_div_si(v_, v_, s, MPFR_RNDN);
    return *this;
}

BigReal BigReal::operator-() const {
    BigReal r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define MEROCUSP_BINOP(OP, FN)                                   \
    BigReal operator OP(const BigReal& a, const BigReal& b) {    \
        BigReal r(min_prec(a, b));                               \
        FN(r.get(), a.get(), b.get(), MPFR_RNDN);                \
        return r;                                                \
    }
MEROCUSP_BINOP(+, mpfr_add)
MEROCUSP_BINOP(-, mpfr_sub)
MEROCUSP_BINOP(*, mpfr_mul)
MEROCUSP_BINOP(/, mpfr_div)
#undef MEROCUSP_BINOP

BigReal operator+(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

BigReal operator*(long a, const BigReal& b) { return b * a; }

BigReal operator/(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

BigReal operator/(long a, const BigReal& b) {
    BigReal r(b.prec());
    mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
    return r;
}

BigReal operator+(long a, const BigReal& b) { return b + a; }

BigReal operator-(long a, const BigReal& b) {
    BigReal r(b.prec());
    mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
    return r;
}

int compare(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.get(), b.get()); }
int compare(const BigReal& a, long b) { return mpfr_cmp_si(a.get(), b); }

#define MEROCUSP_UNARY(NAME, FN)                 \
    BigReal NAME(const BigReal& x) {             \
        BigReal r(x.prec());                     \
        FN(r.get(), x.get(), MPFR_RNDN);         \
        return r;                                \
    }
MEROCUSP_UNARY(abs, mpfr_abs)
MEROCUSP_UNARY(sqrt, mpfr_sqrt)
MEROCUSP_UNARY(exp, mpfr_exp)
MEROCUSP_UNARY(log, mpfr_log)
MEROCUSP_UNARY(cos, mpfr_cos)
MEROCUSP_UNARY(sin, mpfr_sin)
MEROCUSP_UNARY(atan, mpfr_atan)
MEROCUSP_UNARY(gamma, mpfr_gamma)
#undef MEROCUSP_UNARY

BigReal pow(const BigReal& x, long e) {
    BigReal r(x.prec());
    mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& x, const BigReal& e) {
    BigReal r(min_prec(x, e));
    mpfr_pow(r.get(), x.get(), e.get(), MPFR_RNDN);
    return r;
}

BigReal ldexp(const BigReal& x, long e) {
    BigReal r(x.prec());
    mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return compare(a, b) >= 0 ? a : b; }

BigReal pi(prec_t prec) {
    BigReal r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

BigReal two_pow(long e, prec_t prec) {
    BigReal r(1L, prec);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

BigReal round_to(const BigReal& x, prec_t prec) { return BigReal(x, prec); }

BigComplex BigComplex::polar(const BigReal& modulus, const BigReal& angle) {
    BigReal s(angle.prec()), c(angle.prec());
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    return {modulus * c, modulus * s};
}

BigReal BigComplex::norm() const { return re * re + im * im; }

BigReal BigComplex::abs() const {
    BigReal r(prec());
    mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDN);
    return r;
}

BigReal BigComplex::arg() const {
    BigReal r(prec());
    mpfr_atan2(r.get(), im.get(), re.get(), MPFR_RNDN);
    return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) { return *this = *this + o; }
BigComplex& BigComplex::operator-=(const BigComplex& o) { return *this = *this - o; }
BigComplex& BigComplex::operator*=(const BigComplex& o) { return *this = *this * o; }
BigComplex& BigComplex::operator/=(const BigComplex& o) { return *this = *this / o; }
BigComplex& BigComplex::operator*=(const BigReal& s) { return *this = *this * s; }
BigComplex& BigComplex::operator/=(const BigReal& s) { return *this = *this / s; }

BigComplex& BigComplex::operator*=(long s) {
    re *= s;
    im *= s;
    return *this;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal d = b.norm();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

BigComplex operator*(const BigComplex& a, const BigReal& s) { return {a.re * s, a.im * s}; }
BigComplex operator*(const BigReal& s, const BigComplex& a) { return a * s; }
BigComplex operator/(const BigComplex& a, const BigReal& s) { return {a.re / s, a.im / s}; }
BigComplex operator*(const BigComplex& a, long s) { return {a.re * s, a.im * s}; }
BigComplex operator*(long s, const BigComplex& a) { return a * s; }

BigComplex exp(const BigComplex& z) { return BigComplex::polar(exp(z.re), z.im); }

BigComplex pow(const BigComplex& z, long e) {
    if (e < 0) return BigComplex(1, 0, z.prec()) / pow(z, -e);
    BigComplex result(1, 0, z.prec());
    BigComplex base = z;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

BigReal abs(const BigComplex& z) { return z.abs(); }

BigComplex round_to(const BigComplex& z, prec_t prec) { return {BigReal(z.re, prec), BigReal(z.im, prec)}; }

BigReal rel_diff(const BigReal& a, const BigReal& b) {
    BigReal scale = max(abs(a), abs(b));
    if (scale.is_zero()) return BigReal(0L, scale.prec());
    return abs(a - b) / scale;
}

BigReal rel_diff(const BigComplex& a, const BigComplex& b) {
    BigReal scale = max(a.abs(), b.abs());
    if (scale.is_zero()) return BigReal(0L, scale.prec());
    return (a - b).abs() / scale;
}

namespace {
void kahan_step(BigReal& sum, BigReal& carry, const BigReal& x) {
    BigReal y = x - carry;
    BigReal t = sum + y;
    carry = (t - sum) - y;
    sum = std::move(t);
}
}  // namespace

void KahanSum::add(const BigComplex& term) {
    kahan_step(sum_.re, carry_.re, term.re);
    kahan_step(sum_.im, carry_.im, term.im);
}

}  // namespace merocusp
