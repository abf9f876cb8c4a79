#include "qlbkit/big_bracket.hpp"

#include "qlbkit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qlbkit {

namespace {

// Sorts v in place; returns the permutation sign, 0 if a repeat is found (when strict).
int sort_with_sign(Index& v, bool antisymmetric) {
    int sign = 1;
    // insertion sort keeps track of transpositions; the lists are short
    for (size_t i = 1; i < v.size(); ++i)
        for (size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    if (antisymmetric && std::adjacent_find(v.begin(), v.end()) != v.end()) return 0;
    return antisymmetric ? sign : 1;
}

Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Rational multiplicity_factor(const Index& sorted) {
    Rational r = 1;
    for (size_t i = 0; i < sorted.size();) {
        size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        r *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return r;
}

struct Derivative {
    BBMonomial rest;
    int factor;  // sign or multiplicity
};

// Removes generator number p of the list, with the sign for a right or left derivative.
Derivative d_theta(const BBMonomial& m, size_t p, bool right, int n) {
    Derivative d{m, 1};
    d.rest.theta.erase(d.rest.theta.begin() + p);
    int a = m.degree(), b = m.weight();
    int exponent = right ? (a - static_cast<int>(p) - 1) + n * b : static_cast<int>(p);
    d.factor = exponent % 2 ? -1 : 1;
    return d;
}

Derivative d_e(const BBMonomial& m, int i, bool right, int n) {
    Derivative d{m, 1};
    auto first = std::find(m.e.begin(), m.e.end(), i);
    size_t p = first - m.e.begin();
    if (n % 2 == 0) {
        d.factor = static_cast<int>(std::count(m.e.begin(), m.e.end(), i));
        d.rest.e.erase(d.rest.e.begin() + p);
        return d;
    }
    d.rest.e.erase(d.rest.e.begin() + p);
    int a = m.degree(), b = m.weight();
    int exponent = right ? (b - static_cast<int>(p) - 1) : (a + static_cast<int>(p));
    d.factor = exponent % 2 ? -1 : 1;
    return d;
}

// Product of monomials; the returned sign is 0 when the product vanishes.
std::pair<BBMonomial, int> multiply(const BBMonomial& x, const BBMonomial& y, int n) {
    BBMonomial r;
    int sign = (n % 2 && (y.degree() * x.weight()) % 2) ? -1 : 1;
    r.theta = x.theta;
    r.theta.insert(r.theta.end(), y.theta.begin(), y.theta.end());
    r.e = x.e;
    r.e.insert(r.e.end(), y.e.begin(), y.e.end());
    sign *= sort_with_sign(r.theta, true);
    if (sign) sign *= sort_with_sign(r.e, n % 2 == 1);
    return {r, sign};
}

}  // namespace

std::vector<SlotGroup> big_bracket_groups(int k, int w, int shift) {
    return {{k, Symmetry::Antisymmetric, Variance::Lower},
            {w, shift % 2 ? Symmetry::Antisymmetric : Symmetry::Symmetric, Variance::Upper}};
}

BigBracketElement::BigBracketElement(int dim, int shift) : dim_(dim), shift_(shift) {
    if (shift != 1 && shift != 2) throw InputError("big bracket shift must be 1 or 2");
}

BigBracketElement BigBracketElement::theta(int dim, int shift, int i) {
    BigBracketElement r(dim, shift);
    r.add({i}, {}, Scalar(1));
    return r;
}

BigBracketElement BigBracketElement::e(int dim, int shift, int i) {
    BigBracketElement r(dim, shift);
    r.add({}, {i}, Scalar(1));
    return r;
}

BigBracketElement BigBracketElement::constant(int dim, int shift, const Scalar& s) {
    BigBracketElement r(dim, shift);
    r.add({}, {}, s);
    return r;
}

void BigBracketElement::add(const Index& theta, const Index& e, const Scalar& coef) {
    if (coef.is_zero()) return;
    for (int i : theta)
        if (i < 0 || i >= dim_) throw InputError("generator index out of range");
    for (int i : e)
        if (i < 0 || i >= dim_) throw InputError("generator index out of range");
    BBMonomial m{theta, e};
    int sign = sort_with_sign(m.theta, true);
    if (sign) sign *= sort_with_sign(m.e, shift_ % 2 == 1);
    if (!sign) return;
    Scalar v = sign > 0 ? coef : -coef;
    auto [it, inserted] = terms_.emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BigBracketElement BigBracketElement::from_tensor(const SparseTensor& t, int shift) {
    BigBracketElement r(t.dim(), shift);
    int k = 0, w = 0;
    for (const auto& grp : t.groups()) {
        bool ok = grp.variance == Variance::Lower
                      ? (w == 0 && k == 0 && (grp.size == 1 || grp.symmetry == Symmetry::Antisymmetric))
                      : (w == 0 && (grp.size == 1 || grp.symmetry == (shift % 2 ? Symmetry::Antisymmetric
                                                                                 : Symmetry::Symmetric)));
        if (!ok) throw InputError("tensor slot signature does not fit the big bracket algebra");
        (grp.variance == Variance::Lower ? k : w) = grp.size;
    }
    for (const auto& [idx, v] : t.entries()) {
        Index A(idx.begin(), idx.begin() + k), B(idx.begin() + k, idx.end());
        Scalar c = v;
        if (shift % 2 == 0) c = c * Scalar(Rational(1 / multiplicity_factor(B)));
        r.add(A, B, c);
    }
    return r;
}

BigBracketElement BigBracketElement::structure(const LieAlgebra& g, int shift) {
    BigBracketElement r(g.dim(), shift);
    for (const auto& c : g.constants()) r.add({c.i, c.j}, {c.k}, c.value);
    return r;
}

void BigBracketElement::check_compatible(const BigBracketElement& o) const {
    if (shift_ != o.shift_) throw InputError("big bracket shift mismatch");
    if (dim_ != o.dim_) throw InputError("big bracket dimension mismatch");
}

BigBracketElement BigBracketElement::operator+(const BigBracketElement& o) const {
    check_compatible(o);
    BigBracketElement r = *this;
    for (const auto& [m, v] : o.terms_) r.add(m.theta, m.e, v);
    return r;
}

BigBracketElement BigBracketElement::operator-() const { return scaled(Scalar(-1)); }

BigBracketElement BigBracketElement::operator-(const BigBracketElement& o) const { return *this + (-o); }

BigBracketElement BigBracketElement::scaled(const Scalar& s) const {
    BigBracketElement r(dim_, shift_);
    if (s.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * s);
    return r;
}

BigBracketElement BigBracketElement::operator*(const BigBracketElement& o) const {
    check_compatible(o);
    BigBracketElement r(dim_, shift_);
    for (const auto& [x, a] : terms_)
        for (const auto& [y, b] : o.terms_) {
            auto [m, sign] = multiply(x, y, shift_);
            if (sign) r.add(m.theta, m.e, sign > 0 ? a * b : -(a * b));
        }
    return r;
}

bool BigBracketElement::operator==(const BigBracketElement& o) const {
    return dim_ == o.dim_ && shift_ == o.shift_ && terms_ == o.terms_;
}

BigBracketElement BigBracketElement::part(int k, int w) const {
    BigBracketElement r(dim_, shift_);
    for (const auto& [m, v] : terms_)
        if (m.degree() == k && m.weight() == w) r.terms_.emplace(m, v);
    return r;
}

SparseTensor BigBracketElement::to_tensor(int k, int w) const {
    SparseTensor t(dim_, big_bracket_groups(k, w, shift_));
    for (const auto& [m, v] : terms_) {
        if (m.degree() != k || m.weight() != w) continue;
        Index idx = m.theta;
        idx.insert(idx.end(), m.e.begin(), m.e.end());
        t.add(idx, shift_ % 2 ? v : v * Scalar(multiplicity_factor(m.e)));
    }
    return t;
}

std::string BigBracketElement::to_string(const std::vector<std::string>& labels) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.to_string() << ")";
        for (int i : m.theta) os << " " << labels[i] << "*";
        for (int i : m.e) os << " " << labels[i];
    }
    return os.str();
}

BigBracketElement big_bracket(const BigBracketElement& a, const BigBracketElement& b) {
    if (a.shift() != b.shift()) throw InputError("big bracket shift mismatch");
    if (a.dim() != b.dim()) throw InputError("big bracket dimension mismatch");
    const int n = a.shift();
    const int eps = n % 2 ? 1 : -1;  // -(-1)^n
    BigBracketElement r(a.dim(), n);
    // index b's terms by the generators they contain
    std::map<int, std::vector<const std::pair<const BBMonomial, Scalar>*>> b_by_e, b_by_theta;
    for (const auto& t : b.terms()) {
        Index es = t.first.e;
        es.erase(std::unique(es.begin(), es.end()), es.end());
        for (int i : es) b_by_e[i].push_back(&t);
        for (int i : t.first.theta) b_by_theta[i].push_back(&t);
    }
    for (const auto& [x, cx] : a.terms()) {
        for (size_t p = 0; p < x.theta.size(); ++p) {
            int i = x.theta[p];
            auto it = b_by_e.find(i);
            if (it == b_by_e.end()) continue;
            Derivative dx = d_theta(x, p, true, n);
            for (const auto* t : it->second) {
                Derivative dy = d_e(t->first, i, false, n);
                auto [m, sign] = multiply(dx.rest, dy.rest, n);
                if (sign) r.add(m.theta, m.e, cx * t->second * Scalar(sign * dx.factor * dy.factor));
            }
        }
        Index xe = x.e;
        xe.erase(std::unique(xe.begin(), xe.end()), xe.end());
        for (int i : xe) {
            auto it = b_by_theta.find(i);
            if (it == b_by_theta.end()) continue;
            Derivative dx = d_e(x, i, true, n);
            for (const auto* t : it->second) {
                size_t q = std::find(t->first.theta.begin(), t->first.theta.end(), i) - t->first.theta.begin();
                Derivative dy = d_theta(t->first, q, false, n);
                auto [m, sign] = multiply(dx.rest, dy.rest, n);
                if (sign) r.add(m.theta, m.e, cx * t->second * Scalar(eps * sign * dx.factor * dy.factor));
            }
        }
    }
    return r;
}

}  // namespace qlbkit
