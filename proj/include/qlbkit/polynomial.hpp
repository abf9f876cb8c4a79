#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qlbkit {

using Rational = mpq_class;

// Power product of named variables, kept sorted by name with positive exponents.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(const std::string& name, unsigned exp = 1);

    const std::vector<std::pair<std::string, unsigned>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    unsigned degree() const;
    unsigned exponent(const std::string& var) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;  // requires divides
    Monomial gcd(const Monomial& o) const;
    Monomial without(const std::string& var) const;

    // Lexicographic order with variables ordered by name; a monomial order.
    int compare(const Monomial& o) const;
    bool operator<(const Monomial& o) const { return compare(o) < 0; }
    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

    std::string to_string() const;

private:
    std::vector<std::pair<std::string, unsigned>> factors_;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT: implicit constant polynomial
    static Polynomial variable(const std::string& name);
    static Polynomial term(const Monomial& m, const Rational& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant
    unsigned total_degree() const;
    std::vector<std::string> variables() const;

    // Largest term in the lex order.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m) const;
    Polynomial pow(unsigned e) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Exact division; nullopt when the divisor does not divide this polynomial.
    std::optional<Polynomial> exact_divide(const Polynomial& d) const;
    // Univariate division with remainder in `var`; both must involve no other variable.
    std::pair<Polynomial, Polynomial> univariate_divmod(const Polynomial& d) const;

    // Positive rational c with this = c * primitive, primitive having integer coprime
    // coefficients and positive leading coefficient.
    Rational content() const;
    Monomial monomial_content() const;  // gcd of all monomials
    Polynomial divided_by_monomial(const Monomial& m) const;

    Polynomial derivative(const std::string& var) const;
    Rational evaluate(const std::map<std::string, Rational>& point) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

// gcd of two polynomials in at most one common variable (Euclid over Q), monic.
Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace qlbkit
