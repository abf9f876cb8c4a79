#pragma once

#include "qlbkit/polynomial.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qlbkit {

// num/den with den a nonzero primitive polynomial with positive leading coefficient.
// Only cheap reductions are applied eagerly (content, common monomials, exact
// division, and a full gcd when a single variable is involved); equality is
// decided by cross-multiplication.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(Rational(1)) {}

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const;

    RationalFunction derivative(const std::string& var) const;
    Rational evaluate(const std::map<std::string, Rational>& point) const;
    std::vector<std::string> variables() const;
    std::string to_string() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_{Rational(1)};
};

// Field element: an exact rational, or a non-constant rational function.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : q_(v) {}   // NOLINT
    Scalar(long v) : q_(v) {}  // NOLINT
    Scalar(const Rational& v) : q_(v) {}  // NOLINT
    Scalar(const RationalFunction& f);    // NOLINT
    static Scalar variable(const std::string& name);
    static Scalar fraction(long num, long den);

    bool is_rational() const { return !f_; }
    const Rational& rational() const;  // throws InputError for functions
    RationalFunction as_function() const;

    bool is_zero() const { return !f_ && q_ == 0; }
    bool is_one() const { return !f_ && q_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar derivative(const std::string& var) const;
    Rational evaluate(const std::map<std::string, Rational>& point) const;
    std::vector<std::string> variables() const;
    std::string to_string() const;

private:
    Rational q_{0};
    std::shared_ptr<const RationalFunction> f_;
};

}  // namespace qlbkit
