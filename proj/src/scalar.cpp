#include "qlbkit/scalar.hpp"

#include "qlbkit/errors.hpp"

#include <algorithm>
#include <set>

namespace qlbkit {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw InputError("division by the zero polynomial");
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Monomial g = num_.monomial_content().gcd(den_.monomial_content());
    if (!g.is_one()) {
        num_ = num_.divided_by_monomial(g);
        den_ = den_.divided_by_monomial(g);
    }
    auto rescale = [this] {
        Rational c = den_.content();
        if (c != 1) {
            Rational inv = 1 / c;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    };
    rescale();
    if (den_.is_constant()) return;
    if (auto q = num_.exact_divide(den_)) {
        num_ = *q;
        den_ = Polynomial(Rational(1));
        return;
    }
    std::set<std::string> vars;
    for (const auto& v : num_.variables()) vars.insert(v);
    for (const auto& v : den_.variables()) vars.insert(v);
    if (vars.size() == 1) {
        Polynomial g1 = univariate_gcd(num_, den_);
        if (!g1.is_constant()) {
            num_ = *num_.exact_divide(g1);
            den_ = *den_.exact_divide(g1);
            rescale();
        }
    } else if (auto q = den_.exact_divide(num_)) {
        Rational c = num_.content();
        num_ = Polynomial(c);
        den_ = q->scaled(c);
        rescale();
    }
}

Rational RationalFunction::constant_value() const { return num_.constant_value() / den_.constant_value(); }

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (num_.is_zero()) return o;
    if (o.num_.is_zero()) return *this;
    if (den_ == o.den_) return {num_ + o.num_, den_};
    if (den_.is_constant()) return {num_ * o.den_ + o.num_, o.den_};
    if (o.den_.is_constant()) return {num_ + o.num_ * den_, den_};
    if (auto q = o.den_.exact_divide(den_)) return {num_ * *q + o.num_, o.den_};
    if (auto q = den_.exact_divide(o.den_)) return {num_ + o.num_ * *q, den_};
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (num_.is_zero() || o.num_.is_zero()) return {};
    return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.num_.is_zero()) throw InputError("division by zero");
    return {num_ * o.den_, den_ * o.num_};
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::derivative(const std::string& var) const {
    Polynomial n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return {n, den_ * den_};
}

Rational RationalFunction::evaluate(const std::map<std::string, Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw InputError("evaluation at a pole");
    return num_.evaluate(point) / d;
}

std::vector<std::string> RationalFunction::variables() const {
    std::set<std::string> vs;
    for (const auto& v : num_.variables()) vs.insert(v);
    for (const auto& v : den_.variables()) vs.insert(v);
    return {vs.begin(), vs.end()};
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    const auto& lead = *den_.terms().begin();
    if (den_.terms().size() > 1 || lead.second != 1 || lead.first.factors().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

Scalar::Scalar(const RationalFunction& f) {
    if (f.is_constant())
        q_ = f.constant_value();
    else
        f_ = std::make_shared<const RationalFunction>(f);
}

Scalar Scalar::variable(const std::string& name) { return Scalar(RationalFunction(Polynomial::variable(name))); }

Scalar Scalar::fraction(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return Scalar(q);
}

const Rational& Scalar::rational() const {
    if (f_) throw InputError("expected a rational scalar, got the function " + f_->to_string());
    return q_;
}

RationalFunction Scalar::as_function() const {
    if (f_) return *f_;
    return RationalFunction(Polynomial(q_));
}

Scalar Scalar::operator-() const {
    if (!f_) return Scalar(Rational(-q_));
    return Scalar(-*f_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (!f_ && !o.f_) return Scalar(Rational(q_ + o.q_));
    return Scalar(as_function() + o.as_function());
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (!f_ && !o.f_) return Scalar(Rational(q_ - o.q_));
    return Scalar(as_function() - o.as_function());
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (!f_ && !o.f_) return Scalar(Rational(q_ * o.q_));
    if (is_zero() || o.is_zero()) return {};
    return Scalar(as_function() * o.as_function());
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw InputError("division by zero");
    if (!f_ && !o.f_) return Scalar(Rational(q_ / o.q_));
    return Scalar(as_function() / o.as_function());
}

bool Scalar::operator==(const Scalar& o) const {
    if (!f_ && !o.f_) return q_ == o.q_;
    if (!f_ || !o.f_) return false;  // a non-constant function never equals a rational
    return *f_ == *o.f_;
}

Scalar Scalar::derivative(const std::string& var) const {
    if (!f_) return {};
    return Scalar(f_->derivative(var));
}

Rational Scalar::evaluate(const std::map<std::string, Rational>& point) const {
    if (!f_) return q_;
    return f_->evaluate(point);
}

std::vector<std::string> Scalar::variables() const {
    if (!f_) return {};
    return f_->variables();
}

std::string Scalar::to_string() const {
    if (!f_) return q_.get_str();
    return f_->to_string();
}

}  // namespace qlbkit
