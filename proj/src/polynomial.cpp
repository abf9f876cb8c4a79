#include "qlbkit/polynomial.hpp"

#include "qlbkit/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qlbkit {

Monomial Monomial::variable(const std::string& name, unsigned exp) {
    Monomial m;
    if (exp > 0) m.factors_.emplace_back(name, exp);
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

unsigned Monomial::exponent(const std::string& var) const {
    for (const auto& f : factors_)
        if (f.first == var) return f.second;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < factors_.size() || j < o.factors_.size()) {
        if (j == o.factors_.size() || (i < factors_.size() && factors_[i].first < o.factors_[j].first)) {
            r.factors_.push_back(factors_[i++]);
        } else if (i == factors_.size() || o.factors_[j].first < factors_[i].first) {
            r.factors_.push_back(o.factors_[j++]);
        } else {
            r.factors_.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& f : factors_)
        if (o.exponent(f.first) < f.second) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial r;
    for (const auto& f : factors_) {
        unsigned e = f.second - o.exponent(f.first);
        if (e > 0) r.factors_.emplace_back(f.first, e);
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial r;
    for (const auto& f : factors_) {
        unsigned e = std::min(f.second, o.exponent(f.first));
        if (e > 0) r.factors_.emplace_back(f.first, e);
    }
    return r;
}

Monomial Monomial::without(const std::string& var) const {
    Monomial r;
    for (const auto& f : factors_)
        if (f.first != var) r.factors_.push_back(f);
    return r;
}

int Monomial::compare(const Monomial& o) const {
    size_t i = 0, j = 0;
    while (i < factors_.size() && j < o.factors_.size()) {
        const auto& a = factors_[i];
        const auto& b = o.factors_[j];
        if (a.first == b.first) {
            if (a.second != b.second) return a.second > b.second ? 1 : -1;
            ++i;
            ++j;
        } else {
            // the monomial carrying the alphabetically earlier variable is larger
            return a.first < b.first ? 1 : -1;
        }
    }
    if (i < factors_.size()) return 1;
    if (j < o.factors_.size()) return -1;
    return 0;
}

std::string Monomial::to_string() const {
    std::string s;
    for (const auto& [name, e] : factors_) {
        if (!s.empty()) s += "*";
        s += name;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::variable(const std::string& name) { return term(Monomial::variable(name), 1); }

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
}

std::vector<std::string> Polynomial::variables() const {
    std::set<std::string> vs;
    for (const auto& t : terms_)
        for (const auto& f : t.first.factors()) vs.insert(f.first);
    return {vs.begin(), vs.end()};
}

const Monomial& Polynomial::leading_monomial() const { return terms_.rbegin()->first; }
const Rational& Polynomial::leading_coefficient() const { return terms_.rbegin()->second; }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& t : o.terms_) r.add_term(t.first, t.second);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& t : o.terms_) r.add_term(t.first, -t.second);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) r.add_term(a.first * b.first, a.second * b.second);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return {};
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial r;
    for (const auto& t : terms_) r.terms_.emplace(t.first * m, t.second);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r(1), base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& d) const {
    if (d.is_zero()) throw InputError("polynomial division by zero");
    Polynomial q, r = *this;
    const Monomial& ld = d.leading_monomial();
    const Rational& lc = d.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!ld.divides(lr)) return std::nullopt;
        Polynomial t = term(lr.divided_by(ld), r.leading_coefficient() / lc);
        r = r - t * d;
        q = q + t;
    }
    return q;
}

std::pair<Polynomial, Polynomial> Polynomial::univariate_divmod(const Polynomial& d) const {
    if (d.is_zero()) throw InputError("polynomial division by zero");
    Polynomial q, rem, r = *this;
    const Monomial& ld = d.leading_monomial();
    const Rational& lc = d.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial lr = r.leading_monomial();
        if (ld.divides(lr)) {
            Polynomial t = term(lr.divided_by(ld), r.leading_coefficient() / lc);
            r = r - t * d;
            q = q + t;
        } else {
            Polynomial t = term(lr, r.leading_coefficient());
            rem = rem + t;
            r = r - t;
        }
    }
    return {q, rem};
}

Rational Polynomial::content() const {
    if (terms_.empty()) return 1;
    mpz_class num = 0, den = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.second.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
    }
    Rational c(num, den);
    c.canonicalize();
    if (leading_coefficient() < 0) c = -c;
    return c;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return {};
    Monomial g = terms_.begin()->first;
    for (const auto& t : terms_) {
        g = g.gcd(t.first);
        if (g.is_one()) break;
    }
    return g;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& m) const {
    Polynomial r;
    for (const auto& t : terms_) r.terms_.emplace(t.first.divided_by(m), t.second);
    return r;
}

Polynomial Polynomial::derivative(const std::string& var) const {
    Polynomial r;
    for (const auto& t : terms_) {
        unsigned e = t.first.exponent(var);
        if (e == 0) continue;
        Monomial m = t.first.without(var) * Monomial::variable(var, e - 1);
        r.add_term(m, t.second * e);
    }
    return r;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& point) const {
    Rational s = 0;
    for (const auto& t : terms_) {
        Rational v = t.second;
        for (const auto& [name, e] : t.first.factors()) {
            auto it = point.find(name);
            if (it == point.end()) throw InputError("no value supplied for variable '" + name + "'");
            mpq_class p;
            mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
            mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
            v *= p;
        }
        s += v;
    }
    return s;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (it->first.is_one()) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << it->first.to_string();
        }
    }
    return os.str();
}

Polynomial univariate_gcd(const Polynomial& a0, const Polynomial& b0) {
    Polynomial a = a0, b = b0;
    while (!b.is_zero()) {
        Polynomial r = a.univariate_divmod(b).second;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.scaled(1 / a.leading_coefficient());
}

}  // namespace qlbkit
