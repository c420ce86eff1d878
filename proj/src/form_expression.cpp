#include "merocusp/form_expression.hpp"

#include <cctype>

#include "merocusp/error.hpp"

namespace merocusp {

FormExpression FormExpression::generator(int weight) {
    if (weight != 2 && weight != 4 && weight != 6 && weight != 10) throw DomainError("weight not in {2,4,6,10}");
    auto n = std::make_shared<Node>();
    n->kind = Kind::generator;
    n->weight = weight;
    n->generator = weight;
    return FormExpression(std::move(n));
}

FormExpression FormExpression::constant(const mpq_class& value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::constant;
    n->value = value;
    return FormExpression(std::move(n));
}

FormExpression FormExpression::product(const FormExpression& a, const FormExpression& b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::product;
    n->weight = a.weight() + b.weight();
    n->children = {a, b};
    return FormExpression(std::move(n));
}

FormExpression FormExpression::reciprocal(const FormExpression& a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::reciprocal;
    n->weight = -a.weight();
    n->children = {a};
    return FormExpression(std::move(n));
}

FormExpression FormExpression::power(const FormExpression& a, long exponent) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::power;
    n->weight = static_cast<int>(a.weight() * exponent);
    n->exponent = exponent;
    n->children = {a};
    return FormExpression(std::move(n));
}

FormExpression FormExpression::dee(const FormExpression& a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::dee;
    n->weight = a.weight() + 2;
    n->children = {a};
    return FormExpression(std::move(n));
}

bool FormExpression::contains_reciprocal() const {
    if (kind() == Kind::reciprocal) return true;
    if (kind() == Kind::power && exponent() < 0) return true;
    for (const auto& c : node_->children)
        if (c.contains_reciprocal()) return true;
    return false;
}

bool FormExpression::contains_dee() const {
    if (kind() == Kind::dee) return true;
    for (const auto& c : node_->children)
        if (c.contains_dee()) return true;
    return false;
}

std::string FormExpression::to_string() const {
    switch (kind()) {
        case Kind::generator: return "E" + std::to_string(generator_weight());
        case Kind::constant: return constant_value().get_str();
        case Kind::product: return "(" + child(0).to_string() + "*" + child(1).to_string() + ")";
        case Kind::reciprocal: return "(1/" + child(0).to_string() + ")";
        case Kind::power: return child(0).to_string() + "^" + std::to_string(exponent());
        case Kind::dee: return "D(" + child(0).to_string() + ")";
    }
    return {};
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    FormExpression run() {
        FormExpression e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    long integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 9) fail("integer too large");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    FormExpression expr() {
        FormExpression left = factor();
        for (;;) {
            if (accept('*'))
                left = FormExpression::product(left, factor());
            else if (accept('/')) {
                skip();
                std::size_t at = pos_;
                FormExpression d = factor();
                if (d.kind() == FormExpression::Kind::constant && sgn(d.constant_value()) == 0) {
                    pos_ = at;
                    fail("division by zero");
                }
                left = FormExpression::product(left, FormExpression::reciprocal(d));
            }
            else
                return left;
        }
    }

    FormExpression factor() {
        FormExpression base = primary();
        if (accept('^')) {
            bool negative = accept('-');
            long e = integer();
            base = FormExpression::power(base, negative ? -e : e);
        }
        return base;
    }

    FormExpression primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            FormExpression e = expr();
            expect(')');
            return e;
        }
        if (c == 'E') {
            ++pos_;
            std::size_t at = pos_ - 1;
            long w = integer();
            if (w != 2 && w != 4 && w != 6 && w != 10) {
                pos_ = at;
                fail("unknown generator E" + std::to_string(w));
            }
            return FormExpression::generator(static_cast<int>(w));
        }
        if (c == 'D') {
            ++pos_;
            expect('(');
            FormExpression e = expr();
            expect(')');
            return FormExpression::dee(e);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return FormExpression::constant(integer());
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

struct QSeriesAlgebra {
    int order;
    RationalQSeries generator(int w) { return make_eisenstein(w, order); }
    RationalQSeries constant(const mpq_class& c) { return RationalQSeries::constant(c, order); }
    RationalQSeries multiply(const RationalQSeries& a, const RationalQSeries& b) { return merocusp::multiply(a, b); }
    RationalQSeries reciprocal(const RationalQSeries& a) { return merocusp::reciprocal(a); }
    RationalQSeries power(const RationalQSeries& a, long e) { return merocusp::power(a, e); }
    RationalQSeries dee(const RationalQSeries& a) { return merocusp::dee(a); }
};

void collect(const FormExpression& e, long mult, Monomial& m) {
    using K = FormExpression::Kind;
    switch (e.kind()) {
        case K::generator:
            switch (e.generator_weight()) {
                case 2: m.e2 += mult; break;
                case 4: m.e4 += mult; break;
                case 6: m.e6 += mult; break;
                default: m.e10 += mult; break;
            }
            return;
        case K::constant: {
            if (sgn(e.constant_value()) == 0) {
                if (mult < 0) throw DomainError("not invertible as q-series");
                if (mult > 0) m.scalar = 0;
                return;
            }
            mpq_class v = e.constant_value();
            long k = mult < 0 ? -mult : mult;
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), v.get_num_mpz_t(), k);
            mpz_pow_ui(den.get_mpz_t(), v.get_den_mpz_t(), k);
            mpq_class p(num, den);
            p.canonicalize();
            if (mult < 0) p = 1 / p;
            m.scalar *= p;
            return;
        }
        case K::product:
            collect(e.child(0), mult, m);
            collect(e.child(1), mult, m);
            return;
        case K::reciprocal: collect(e.child(0), -mult, m); return;
        case K::power: collect(e.child(0), mult * e.exponent(), m); return;
        case K::dee: throw DomainError("D(...) is not a monomial");
    }
}

FormExpression build(long e4, long e6, long e10) {
    FormExpression out = FormExpression::constant(1);
    auto attach = [&](int w, long e) {
        if (e != 0) out = FormExpression::product(out, FormExpression::power(FormExpression::generator(w), e));
    };
    attach(4, e4);
    attach(6, e6);
    attach(10, e10);
    return out;
}

}  // namespace

FormExpression FormExpression::parse(std::string_view text) { return Parser(text).run(); }

RationalQSeries oracle_series(const FormExpression& expr, int truncation_order) {
    if (truncation_order < 0) throw DomainError("negative truncation order");
    QSeriesAlgebra alg{truncation_order};
    return expr.fold(alg);
}

std::vector<mpq_class> oracle_coeffs(const FormExpression& expr, int n_max) {
    return oracle_series(expr, n_max).coeffs();
}

FormExpression Monomial::modular_generators() const { return build(e4, e6, e10); }

FormExpression Monomial::modular_part() const {
    return FormExpression::product(FormExpression::constant(scalar), build(e4, e6, e10));
}

std::optional<Monomial> as_monomial(const FormExpression& expr) {
    if (expr.contains_dee()) return std::nullopt;
    Monomial m;
    collect(expr, 1, m);
    return m;
}

}  // namespace merocusp
