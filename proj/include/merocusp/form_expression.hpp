#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "merocusp/qseries.hpp"

namespace merocusp {

// Expression over E2, E4, E6, E10 with products, integer powers,
// reciprocals and D = q d/dq.  Grammar:
//   expr    := factor (('*' | '/') factor)*
//   factor  := primary ('^' ['-'] integer)?
//   primary := 'E2' | 'E4' | 'E6' | 'E10' | integer | 'D' '(' expr ')' | '(' expr ')'
class FormExpression {
public:
    enum class Kind { generator, constant, product, reciprocal, power, dee };

    static FormExpression parse(std::string_view text);
    static FormExpression generator(int weight);
    static FormExpression constant(const mpq_class& value);
    static FormExpression product(const FormExpression& a, const FormExpression& b);
    static FormExpression reciprocal(const FormExpression& a);
    static FormExpression power(const FormExpression& a, long exponent);
    static FormExpression dee(const FormExpression& a);

    Kind kind() const { return node_->kind; }
    int weight() const { return node_->weight; }
    int generator_weight() const { return node_->generator; }
    const mpq_class& constant_value() const { return node_->value; }
    long exponent() const { return node_->exponent; }
    const FormExpression& child(std::size_t i) const { return node_->children[i]; }

    bool contains_reciprocal() const;
    bool contains_dee() const;
    std::string to_string() const;

    // Bottom-up evaluation; the algebra supplies generator, constant,
    // multiply, reciprocal, power and dee.
    template <class Algebra>
    auto fold(Algebra& alg) const -> decltype(alg.generator(0)) {
        switch (kind()) {
            case Kind::generator: return alg.generator(generator_weight());
            case Kind::constant: return alg.constant(constant_value());
            case Kind::product: return alg.multiply(child(0).fold(alg), child(1).fold(alg));
            case Kind::reciprocal: return alg.reciprocal(child(0).fold(alg));
            case Kind::power: return alg.power(child(0).fold(alg), exponent());
            case Kind::dee: return alg.dee(child(0).fold(alg));
        }
        return alg.constant(0);
    }

private:
    struct Node {
        Kind kind;
        int weight = 0;
        int generator = 0;
        mpq_class value;
        long exponent = 0;
        std::vector<FormExpression> children;
    };
    explicit FormExpression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

RationalQSeries oracle_series(const FormExpression& expr, int truncation_order);
std::vector<mpq_class> oracle_coeffs(const FormExpression& expr, int n_max);

// scalar * E2^e2 * E4^e4 * E6^e6 * E10^e10
struct Monomial {
    mpq_class scalar = 1;
    long e2 = 0;
    long e4 = 0;
    long e6 = 0;
    long e10 = 0;

    long weight() const { return 2 * e2 + 4 * e4 + 6 * e6 + 10 * e10; }
    // Same monomial without the E2 factor.
    FormExpression modular_part() const;
    // E4, E6, E10 factors only, scalar dropped.
    FormExpression modular_generators() const;
};

// nullopt if the expression uses D.
std::optional<Monomial> as_monomial(const FormExpression& expr);

}  // namespace merocusp
